"""
Interface numerical fluxes

Central schemes share one framework

    F_I = (F_L + F_R) / 2 - d_I,    d_I = alpha_I / 2 (U_R - U_L)

and differ only in how the diffusion coefficient alpha_I is chosen. The
upwind comparators (Steger-Warming, van Leer, Roe) are restricted to the
1D mass fraction model.

Every function accepts a single face (states of shape (nvar,)) or a batch
of faces (states of shape (nvar, ...)) and is a pure function of its
arguments.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from mixsolver.errors import (
    RoeFailureError,
    SchemeCompatibilityError,
    UnphysicalStateError,
)
from mixsolver.state import (
    Mixture,
    ModelKind,
    PrimitiveState,
    energy_index,
    flux_from_primitive,
    to_primitive,
)
from mixsolver.thermo import (
    ArrayLike,
    MixtureThermo,
    first_failure,
    mixture_gamma,
    sound_speed,
)

logger = logging.getLogger("mixsolver")

# Degeneracy thresholds of the coefficient rules
RH_JUMP_EPS = 1.0e-10
RICCA_DELTA = 1.0e-10
RICCA_PRESSURE_EPS = 1.0e-8


class SchemeKind(Enum):
    """Enumeration of the numerical flux schemes"""

    MOVERS_N = "movers_n"
    MOVERS_1 = "movers_1"
    MOVERS_PLUS = "movers_plus"
    RICCA = "ricca"
    RUSANOV = "rusanov"
    STEGER_WARMING = "steger_warming"
    VAN_LEER = "van_leer"
    ROE = "roe"

    @property
    def is_central(self) -> bool:
        """True for the schemes built on the central framework"""
        return self in CENTRAL_SCHEMES

    @classmethod
    def names(cls) -> list:
        """The CLI vocabulary"""
        return [kind.value for kind in cls]


CENTRAL_SCHEMES = frozenset(
    {
        SchemeKind.MOVERS_N,
        SchemeKind.MOVERS_1,
        SchemeKind.MOVERS_PLUS,
        SchemeKind.RICCA,
        SchemeKind.RUSANOV,
    }
)


def check_compatibility(scheme: SchemeKind, mixture: Mixture, ndim: int) -> None:
    """Raises SchemeCompatibilityError when a scheme cannot run a problem"""
    if scheme.is_central:
        return
    if mixture.model is not ModelKind.MASS_FRACTION:
        raise SchemeCompatibilityError(
            f"{scheme.value} is only available for the mass fraction model"
        )
    if ndim != 1:
        raise SchemeCompatibilityError(f"{scheme.value} is only available in 1D")


@dataclass
class InterfaceFlux:
    """Numerical flux of a face with the coefficients that produced it

    ``alpha`` and ``clipped`` have the shape of ``flux``. Upwind schemes
    carry no central coefficient and report alpha = 0.
    """

    flux: np.ndarray
    alpha: np.ndarray
    clipped: np.ndarray


@dataclass
class CellStates:
    """Conserved and primitive views of a set of cells, with sound speeds"""

    cons: np.ndarray
    prim: PrimitiveState
    a: ArrayLike

    @classmethod
    def from_conserved(cls, cons: np.ndarray, mixture: Mixture) -> "CellStates":
        """Converts once so faces can share the work"""
        cons = np.asarray(cons, dtype=float)
        prim = to_primitive(cons, mixture)
        return cls(cons, prim, sound_speed(prim.rho, prim.p, prim.thermo))

    def take(self, index: tuple) -> "CellStates":
        """Sub-block selected by an index over the spatial axes"""
        return CellStates(
            self.cons[(slice(None),) + index],
            _map_prim(self.prim, lambda q: q[index]),
            self.a[index],
        )

    def pad(self, width: int = 1) -> "CellStates":
        """Edge-extended copy with ``width`` ghost cells on every side"""
        spatial = [(width, width)] * (self.cons.ndim - 1)
        return CellStates(
            np.pad(self.cons, [(0, 0)] + spatial, mode="edge"),
            _map_prim(self.prim, lambda q: np.pad(q, spatial, mode="edge")),
            np.pad(self.a, spatial, mode="edge"),
        )


def _map_prim(prim: PrimitiveState, func) -> PrimitiveState:
    def apply(value):
        return None if value is None else func(np.asarray(value))

    return PrimitiveState(
        rho=apply(prim.rho),
        velocity=tuple(apply(v) for v in prim.velocity),
        p=apply(prim.p),
        y1=apply(prim.y1),
        gamma=apply(prim.gamma),
        p_inf=apply(prim.p_inf),
    )


@dataclass
class _Face:
    """Both sides of a set of faces along one axis"""

    left: CellStates
    right: CellStates
    flux_left: np.ndarray
    flux_right: np.ndarray
    vn_left: ArrayLike
    vn_right: ArrayLike

    @classmethod
    def build(cls, left: CellStates, right: CellStates, axis: int) -> "_Face":
        return cls(
            left,
            right,
            flux_from_primitive(left.cons, left.prim, axis),
            flux_from_primitive(right.cons, right.prim, axis),
            left.prim.velocity[axis],
            right.prim.velocity[axis],
        )

    @property
    def d_cons(self) -> np.ndarray:
        return self.right.cons - self.left.cons

    @property
    def d_flux(self) -> np.ndarray:
        return self.flux_right - self.flux_left


def _face(left, right, mixture: Mixture, axis: int) -> _Face:
    return _Face.build(
        CellStates.from_conserved(left, mixture),
        CellStates.from_conserved(right, mixture),
        axis,
    )


######################################################################
#  D I F F U S I O N   C O E F F I C I E N T S
######################################################################
def _bounds(face: _Face) -> Tuple[ArrayLike, ArrayLike]:
    speeds_max = []
    speeds_min = []
    for vn, a in ((face.vn_left, face.left.a), (face.vn_right, face.right.a)):
        speeds_max.append(np.abs(vn) + a)
        speeds_min.append(np.minimum(np.minimum(np.abs(vn - a), np.abs(vn)), np.abs(vn + a)))
    return np.minimum(*speeds_min), np.maximum(*speeds_max)


def _jump_is_small(face: _Face) -> np.ndarray:
    scale = np.maximum(np.maximum(np.abs(face.left.cons), np.abs(face.right.cons)), 1.0)
    return np.abs(face.d_cons) <= RH_JUMP_EPS * scale


def _acoustic_speed(face: _Face) -> ArrayLike:
    """Sound speed of the averaged state where the pressure jumps, else 0"""
    pl, pr = face.left.prim, face.right.prim
    rho_i = 0.5 * (pl.rho + pr.rho)
    p_i = 0.5 * (pl.p + pr.p)
    th_i = MixtureThermo(0.5 * (pl.gamma + pr.gamma), 0.5 * (pl.p_inf + pr.p_inf))
    pressure_jump = np.abs(pr.p - pl.p) > RICCA_PRESSURE_EPS * np.maximum(
        np.maximum(pl.p, pr.p), 1.0
    )
    return np.where(pressure_jump, sound_speed(rho_i, p_i, th_i), 0.0)


def _speed_floor(face: _Face) -> ArrayLike:
    """max |Vn| plus the acoustic speed of a pressure jump; zero across a steady contact"""
    return np.maximum(np.abs(face.vn_left), np.abs(face.vn_right)) + _acoustic_speed(face)


def _lower_bound(face: _Face, lambda_min, lambda_max):
    return np.minimum(np.maximum(_speed_floor(face), lambda_min), lambda_max)


def _rh_coefficient(d_flux, d_cons, small, lower, lambda_max):
    """|dF/dU| clipped into [lower, lambda_max], lambda_max where dU vanishes"""
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(d_flux / np.where(small, 1.0, d_cons))
    clipped = ~small & ((ratio < lower) | (ratio > lambda_max))
    alpha = np.where(small, lambda_max, np.clip(ratio, lower, lambda_max))
    return alpha, clipped


def _tie_species_to_mass(face: _Face, rows: np.ndarray) -> np.ndarray:
    """The rho Y1 row takes the mass row value so Y1 stays a convex combination"""
    if face.left.prim.y1 is None:
        return rows
    rows = np.array(rows)
    rows[-1] = rows[0]
    return rows


def _movers_n(face: _Face):
    lambda_min, lambda_max = _bounds(face)
    alpha, clipped = _rh_coefficient(
        face.d_flux,
        face.d_cons,
        _jump_is_small(face),
        _lower_bound(face, lambda_min, lambda_max),
        lambda_max,
    )
    return _tie_species_to_mass(face, alpha), _tie_species_to_mass(face, clipped)


def _movers_1(face: _Face):
    lambda_min, lambda_max = _bounds(face)
    e = energy_index(face.left.prim.ndim)
    return _rh_coefficient(
        face.d_flux[e],
        face.d_cons[e],
        _jump_is_small(face)[e],
        _lower_bound(face, lambda_min, lambda_max),
        lambda_max,
    )


def _ricca(face: _Face):
    def normalised_jump(left, right):
        scale = np.maximum(np.maximum(np.abs(left), np.abs(right)), 1.0)
        return np.max(np.abs(right - left) / scale, axis=0)

    quiet = (normalised_jump(face.flux_left, face.flux_right) < RICCA_DELTA) & (
        normalised_jump(face.left.cons, face.right.cons) < RICCA_DELTA
    )
    mean_speed = 0.5 * (np.abs(face.vn_left) + np.abs(face.vn_right))
    return np.where(quiet, mean_speed, _speed_floor(face))


def _rusanov(face: _Face):
    return np.maximum(np.abs(face.vn_left) + face.left.a, np.abs(face.vn_right) + face.right.a)


def _pressure_switch(face: _Face):
    pl, pr = face.left.prim, face.right.prim
    floor = np.minimum(pl.p + pl.p_inf, pr.p + pr.p_inf)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(pr.p - pl.p) / floor
    return np.where(floor > 0.0, np.minimum(1.0, ratio), 1.0)


def _movers_plus(face: _Face) -> np.ndarray:
    _, lambda_max = _bounds(face)
    lower = np.minimum(_speed_floor(face), lambda_max)
    phi = _pressure_switch(face)
    mean_speed = 0.5 * (np.abs(face.vn_left) + np.abs(face.vn_right))
    d_cons = face.d_cons
    small = _jump_is_small(face)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(face.d_flux / np.where(small, 1.0, d_cons))
    coefficient = np.where(small, lower, np.clip(phi * ratio + mean_speed, lower, lambda_max))
    return 0.5 * _tie_species_to_mass(face, coefficient) * d_cons


def movers_n_alpha(left, right, mixture: Mixture, axis: int = 0) -> Tuple[np.ndarray, np.ndarray]:
    """Per-equation Rankine-Hugoniot coefficients and their clipping flags

    Each |dF_j/dU_j| is clipped into [max(lambda_min, floor), lambda_max]
    where the floor is max |Vn| plus the interface sound speed across a
    pressure jump. With the mass fraction model the rho Y1 row reuses the
    mass row coefficient.
    """
    return _movers_n(_face(left, right, mixture, axis))


def movers_1_alpha(left, right, mixture: Mixture, axis: int = 0) -> Tuple[ArrayLike, ArrayLike]:
    """Scalar coefficient from the energy equation and its clipping flag"""
    return _movers_1(_face(left, right, mixture, axis))


def ricca_alpha(left, right, mixture: Mixture, axis: int = 0) -> ArrayLike:
    """Scalar coefficient: advection speed plus sound speed across pressure jumps"""
    return _ricca(_face(left, right, mixture, axis))


def movers_plus_diffusion(left, right, mixture: Mixture, axis: int = 0) -> np.ndarray:
    """The full dissipative flux d_I of MOVERS+

    d_j = [Phi sign(dU_j) |dF_j| + (|Vn_L| + |Vn_R|)/2 dU_j] / 2 with the
    pressure switch Phi = min(1, |p_R - p_L| / min(p_L + p_inf_L, p_R + p_inf_R)).
    The effective coefficient 2 d_j / dU_j is held inside the same
    [floor, lambda_max] range as MOVERS-n.
    """
    return _movers_plus(_face(left, right, mixture, axis))


def rusanov_alpha(left, right, mixture: Mixture, axis: int = 0) -> ArrayLike:
    """max(|Vn| + a) over both sides"""
    return _rusanov(_face(left, right, mixture, axis))


######################################################################
#  C E N T R A L   F R A M E W O R K
######################################################################
def _central(face: _Face, scheme: SchemeKind) -> InterfaceFlux:
    d_cons = face.d_cons
    clipped = np.zeros(d_cons.shape, dtype=bool)
    if scheme is SchemeKind.MOVERS_PLUS:
        diffusion = _movers_plus(face)
        small = _jump_is_small(face)
        with np.errstate(divide="ignore", invalid="ignore"):
            alpha = np.where(small, 0.0, 2.0 * diffusion / np.where(small, 1.0, d_cons))
    else:
        if scheme is SchemeKind.MOVERS_N:
            alpha, clipped = _movers_n(face)
        elif scheme is SchemeKind.MOVERS_1:
            alpha, flag = _movers_1(face)
            clipped = np.broadcast_to(flag, d_cons.shape).copy()
        elif scheme is SchemeKind.RICCA:
            alpha = _ricca(face)
        elif scheme is SchemeKind.RUSANOV:
            alpha = _rusanov(face)
        else:
            raise SchemeCompatibilityError(f"{scheme.value} is not a central scheme")
        alpha = np.broadcast_to(alpha, d_cons.shape)
        diffusion = 0.5 * alpha * d_cons

    flux = 0.5 * (face.flux_left + face.flux_right) - diffusion
    _check_finite(flux, scheme)
    return InterfaceFlux(flux, np.array(alpha, dtype=float), clipped)


def _check_finite(flux: np.ndarray, scheme: SchemeKind) -> None:
    bad = ~np.all(np.isfinite(flux), axis=0)
    if np.any(bad):
        raise UnphysicalStateError(f"Non-finite {scheme.value} flux", first_failure(bad))


def central_flux(left, right, scheme: SchemeKind, mixture: Mixture, axis: int = 0) -> InterfaceFlux:
    """F_I = (F_L + F_R)/2 - d_I for one of the central schemes"""
    if not scheme.is_central:
        raise SchemeCompatibilityError(f"{scheme.value} is not a central scheme")
    return _central(_face(left, right, mixture, axis), scheme)


######################################################################
#  F L U X   V E C T O R   S P L I T T I N G
######################################################################
def _supersonic(prim: PrimitiveState, a, flux, plus, minus):
    """Replaces the split parts by the exact one-sided flux outside |M| < 1"""
    u = prim.velocity[0]
    right_going = u >= a
    left_going = u <= -a
    zero = np.zeros_like(flux)
    plus = np.where(right_going, flux, np.where(left_going, zero, plus))
    minus = np.where(right_going, zero, np.where(left_going, flux, minus))
    return plus, minus


def steger_warming_split(cons, mixture: Mixture) -> Tuple[np.ndarray, np.ndarray]:
    """Forward and backward Steger-Warming fluxes F+ and F- of a 1D state"""
    cells = CellStates.from_conserved(cons, mixture)
    prim, a = cells.prim, cells.a
    rho, u, gamma = prim.rho, prim.velocity[0], prim.gamma
    h_total = (cells.cons[2] + prim.p) / rho
    flux = flux_from_primitive(cells.cons, prim)

    def part(sign):
        lam1, lam2, lam3 = (0.5 * (lam + sign * np.abs(lam)) for lam in (u - a, u, u + a))
        factor = rho / (2.0 * gamma)
        mass = factor * (lam1 + 2.0 * (gamma - 1.0) * lam2 + lam3)
        momentum = factor * ((u - a) * lam1 + 2.0 * (gamma - 1.0) * u * lam2 + (u + a) * lam3)
        energy = factor * (
            (h_total - u * a) * lam1 + (gamma - 1.0) * u**2 * lam2 + (h_total + u * a) * lam3
        )
        return np.stack(np.broadcast_arrays(mass, momentum, energy, mass * prim.y1))

    return _supersonic(prim, a, flux, part(1.0), part(-1.0))


def van_leer_split(cons, mixture: Mixture) -> Tuple[np.ndarray, np.ndarray]:
    """Forward and backward van Leer fluxes F+ and F- of a 1D state"""
    cells = CellStates.from_conserved(cons, mixture)
    prim, a = cells.prim, cells.a
    rho, u, gamma = prim.rho, prim.velocity[0], prim.gamma
    mach = u / a
    flux = flux_from_primitive(cells.cons, prim)

    def part(sign):
        mass = sign * 0.25 * rho * a * (mach + sign) ** 2
        bracket = 0.5 * (gamma - 1.0) * mach + sign
        momentum = mass * (2.0 * a / gamma) * bracket
        energy = mass * (2.0 * a**2 / (gamma**2 - 1.0)) * bracket**2
        return np.stack(np.broadcast_arrays(mass, momentum, energy, mass * prim.y1))

    return _supersonic(prim, a, flux, part(1.0), part(-1.0))


def _split_flux(splitter, left, right, mixture: Mixture, scheme: SchemeKind) -> InterfaceFlux:
    check_compatibility(scheme, mixture, mixture.ndim_of(left))
    plus, _ = splitter(left, mixture)
    _, minus = splitter(right, mixture)
    flux = plus + minus
    _check_finite(flux, scheme)
    return InterfaceFlux(flux, np.zeros_like(flux), np.zeros(flux.shape, dtype=bool))


def steger_warming_flux(left, right, mixture: Mixture) -> InterfaceFlux:
    """F+(left) + F-(right) with Steger-Warming splitting"""
    return _split_flux(steger_warming_split, left, right, mixture, SchemeKind.STEGER_WARMING)


def van_leer_flux(left, right, mixture: Mixture) -> InterfaceFlux:
    """F+(left) + F-(right) with van Leer splitting"""
    return _split_flux(van_leer_split, left, right, mixture, SchemeKind.VAN_LEER)


######################################################################
#  R O E   F L U X
######################################################################
@dataclass
class RoeAverage:
    """Square-root density weighted interface state

    ``rho`` follows (rho_L sqrt(rho_L) + rho_R sqrt(rho_R)) / (sqrt(rho_L) +
    sqrt(rho_R)), not the usual geometric mean; it is reported only, the
    flux never needs it.
    """

    rho: ArrayLike
    u: ArrayLike
    h_total: ArrayLike
    y1: ArrayLike
    temperature: ArrayLike
    gamma: ArrayLike
    a_squared: ArrayLike
    b: ArrayLike
    b_prime: ArrayLike

    @property
    def a(self) -> ArrayLike:
        """Averaged sound speed"""
        return np.sqrt(self.a_squared)

    def eigenvalues(self) -> np.ndarray:
        """(u - a, u, u, u + a) along the last axis"""
        a = self.a
        return np.stack(np.broadcast_arrays(self.u - a, self.u, self.u, self.u + a), axis=-1)

    def eigenvectors(self) -> np.ndarray:
        """Right eigenvectors as the columns of a (..., 4, 4) array"""
        u, h, y1, a = self.u, self.h_total, self.y1, self.a
        gm1 = self.gamma - 1.0
        one, zero = np.ones_like(u), np.zeros_like(u)
        columns = [
            (one, u - a, h - u * a, y1),
            (one, u, 0.5 * u**2 - self.b / gm1, zero),
            (zero, zero, -self.b_prime / gm1, one),
            (one, u + a, h + u * a, y1),
        ]
        return np.stack(
            [np.stack(np.broadcast_arrays(*column), axis=-1) for column in columns], axis=-1
        )


def roe_average(left, right, mixture: Mixture) -> RoeAverage:
    """Averaged state used by the Roe flux of the mass fraction model

    B' = cv1 cv2 (gamma1 - gamma2) T / (Y cv1 + (1 - Y) cv2) and B = -Y B'
    at the averaged state.
    """
    check_compatibility(SchemeKind.ROE, mixture, mixture.ndim_of(left))
    g1, g2 = mixture.gas1, mixture.gas2
    sides = []
    for cons in (left, right):
        cons = np.asarray(cons, dtype=float)
        prim = to_primitive(cons, mixture)
        y_thermo = np.clip(prim.y1, 0.0, 1.0)
        cv_mix = y_thermo * g1.cv + (1.0 - y_thermo) * g2.cv
        e = cons[2] / prim.rho - 0.5 * prim.velocity[0] ** 2
        sides.append((prim, (cons[2] + prim.p) / prim.rho, e / cv_mix))
    (pl, hl, tl), (pr, hr, tr) = sides
    wl, wr = np.sqrt(pl.rho), np.sqrt(pr.rho)

    def average(ql, qr):
        return (wl * ql + wr * qr) / (wl + wr)

    y1 = average(pl.y1, pr.y1)
    y_thermo = np.clip(y1, 0.0, 1.0)
    temperature = average(tl, tr)
    u = average(pl.velocity[0], pr.velocity[0])
    h_total = average(hl, hr)
    gamma = np.asarray(mixture_gamma(y_thermo, g1, g2))
    b_prime = (
        g1.cv * g2.cv * (g1.gamma - g2.gamma) * temperature
        / (y_thermo * g1.cv + (1.0 - y_thermo) * g2.cv)
    )
    a_squared = (gamma - 1.0) * (h_total - 0.5 * u**2)
    bad = ~(np.asarray(a_squared) > 0.0)
    if np.any(bad):
        raise RoeFailureError("Roe average has no real sound speed", first_failure(bad))
    return RoeAverage(
        rho=average(pl.rho, pr.rho),
        u=u,
        h_total=h_total,
        y1=y1,
        temperature=temperature,
        gamma=gamma,
        a_squared=a_squared,
        b=-y1 * b_prime,
        b_prime=b_prime,
    )


def _to_last(array: np.ndarray) -> np.ndarray:
    return np.moveaxis(np.asarray(array, dtype=float), 0, -1)


def roe_flux(left, right, mixture: Mixture) -> InterfaceFlux:
    """F_I = (F_L + F_R)/2 - sum_k |lambda_k| w_k r_k / 2

    Wave strengths w_k solve R w = U_R - U_L with the eigenvectors of the
    averaged state.
    """
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)
    avg = roe_average(left, right, mixture)
    vectors = avg.eigenvectors()
    strengths = np.linalg.solve(vectors, _to_last(right - left)[..., None])[..., 0]
    speeds = np.abs(avg.eigenvalues())
    diffusion = np.moveaxis(np.einsum("...ik,...k->...i", vectors, speeds * strengths), -1, 0)
    face = _face(left, right, mixture, 0)
    flux = 0.5 * (face.flux_left + face.flux_right) - 0.5 * diffusion
    _check_finite(flux, SchemeKind.ROE)
    return InterfaceFlux(flux, np.zeros_like(flux), np.zeros(flux.shape, dtype=bool))


def roe_conservation_residual(left, right, mixture: Mixture) -> ArrayLike:
    """max |F_R - F_L - A (U_R - U_L)| normalised by max(1, |F_R - F_L|)

    Vanishes only when gamma1 = gamma2.
    """
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)
    avg = roe_average(left, right, mixture)
    vectors = avg.eigenvectors()
    strengths = np.linalg.solve(vectors, _to_last(right - left)[..., None])[..., 0]
    a_du = np.einsum("...ik,...k->...i", vectors, avg.eigenvalues() * strengths)
    face = _face(left, right, mixture, 0)
    d_flux = _to_last(face.d_flux)
    return np.max(np.abs(d_flux - a_du), axis=-1) / np.maximum(1.0, np.max(np.abs(d_flux), axis=-1))


######################################################################
#  D I S P A T C H
######################################################################
def interface_flux(left, right, scheme: SchemeKind, mixture: Mixture, axis: int = 0) -> InterfaceFlux:
    """Numerical flux of any scheme between two states"""
    if scheme.is_central:
        return central_flux(left, right, scheme, mixture, axis)
    check_compatibility(scheme, mixture, mixture.ndim_of(left))
    if axis != 0:
        raise SchemeCompatibilityError(f"{scheme.value} has no flux along axis {axis}")
    if scheme is SchemeKind.STEGER_WARMING:
        return steger_warming_flux(left, right, mixture)
    if scheme is SchemeKind.VAN_LEER:
        return van_leer_flux(left, right, mixture)
    return roe_flux(left, right, mixture)


def face_slices(ndim: int, axis: int) -> Tuple[tuple, tuple]:
    """Indices of the left and right cells of every face of a padded block"""
    lower, upper = [], []
    for dim in range(ndim):
        if dim == axis:
            lower.append(slice(0, -1))
            upper.append(slice(1, None))
        else:
            lower.append(slice(1, -1))
            upper.append(slice(1, -1))
    return tuple(lower), tuple(upper)


def face_fluxes(cells: CellStates, scheme: SchemeKind, mixture: Mixture, axis: int) -> InterfaceFlux:
    """Fluxes on every face between neighbouring cells along ``axis``

    ``cells`` holds one ghost layer on every side; the result covers the
    interior faces along ``axis`` and the interior cells along the other
    axis.
    """
    lower, upper = face_slices(cells.cons.ndim - 1, axis)
    left, right = cells.take(lower), cells.take(upper)
    if scheme.is_central:
        return _central(_Face.build(left, right, axis), scheme)
    return interface_flux(left.cons, right.cons, scheme, mixture, axis)
