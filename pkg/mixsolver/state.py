"""
State representations

Conserved and primitive views of a two-component mixture for both models,
the physical flux, wave-speed bounds and a check of the analytic flux
Jacobian eigenstructure.

Conserved vector layout (leading axis of every array):

    MASS_FRACTION  1D: rho, rho u, rho E, rho Y1
                   2D: rho, rho u, rho v, rho E, rho Y1
    GAMMA_BASED    1D: rho, rho u, rho E, X1, X2
                   2D: rho, rho u, rho v, rho E, X1, X2

with (X1, X2) = (rho/(gamma-1), rho gamma p_inf/(gamma-1)) in the
conservative form and (1/(gamma-1), gamma p_inf/(gamma-1)) in the
quasi-conservative form.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from mixsolver.errors import DataValidationError, UnphysicalStateError
from mixsolver.thermo import (
    ArrayLike,
    GasComponent,
    MixtureThermo,
    first_failure,
    internal_energy_from_pressure,
    mixture_gamma,
    pressure_from_internal_energy,
    sound_speed,
)


class ModelKind(Enum):
    """Enumeration of the mixture models"""

    MASS_FRACTION = "mass_fraction"
    GAMMA_BASED = "gamma_based"


class GammaForm(Enum):
    """How the gamma-based model carries its two extra quantities"""

    CONSERVATIVE = "conservative"
    QUASI_CONSERVATIVE = "quasi_conservative"


def _default_gas() -> GasComponent:
    return GasComponent(gamma=1.4)


@dataclass(frozen=True)
class Mixture:
    """The model kind together with the two gas components"""

    model: ModelKind
    gas1: GasComponent = field(default_factory=_default_gas)
    gas2: GasComponent = field(default_factory=_default_gas)
    gamma_form: GammaForm = GammaForm.CONSERVATIVE

    def __post_init__(self):
        if self.model is ModelKind.MASS_FRACTION and (self.gas1.p_inf or self.gas2.p_inf):
            raise DataValidationError(
                "The mass fraction model only supports perfect gases (p_inf = 0)"
            )

    @property
    def n_extra(self) -> int:
        """Number of conserved entries after the energy"""
        return 1 if self.model is ModelKind.MASS_FRACTION else 2

    @property
    def quasi_conservative(self) -> bool:
        """True when the extra entries are advected non-conservatively"""
        return (
            self.model is ModelKind.GAMMA_BASED
            and self.gamma_form is GammaForm.QUASI_CONSERVATIVE
        )

    def n_vars(self, ndim: int) -> int:
        """Length of the conserved vector"""
        return 2 + ndim + self.n_extra

    def ndim_of(self, cons: np.ndarray) -> int:
        """Spatial dimension implied by the length of a conserved vector"""
        ndim = np.shape(cons)[0] - 2 - self.n_extra
        if ndim not in (1, 2):
            raise DataValidationError(
                f"A {self.model.value} state cannot have {np.shape(cons)[0]} entries"
            )
        return ndim

    def conserved_mask(self, ndim: int) -> np.ndarray:
        """Which entries obey a conservation law"""
        mask = np.ones(self.n_vars(ndim), dtype=bool)
        if self.quasi_conservative:
            mask[extra_index(ndim):] = False
        return mask

    def serialize(self) -> dict:
        """Serializes a Mixture into a dictionary"""
        return {
            "model": self.model.value,
            "gamma_form": self.gamma_form.value,
            "gas1": self.gas1.serialize(),
            "gas2": self.gas2.serialize(),
        }

    @classmethod
    def deserialize(cls, data: dict) -> "Mixture":
        """Builds a Mixture from a dictionary"""
        try:
            return cls(
                model=ModelKind(data["model"]),
                gas1=GasComponent.deserialize(data.get("gas1", {"gamma": 1.4})),
                gas2=GasComponent.deserialize(data.get("gas2", {"gamma": 1.4})),
                gamma_form=GammaForm(data.get("gamma_form", GammaForm.CONSERVATIVE.value)),
            )
        except KeyError as error:
            raise DataValidationError("Invalid mixture: missing " + error.args[0]) from error
        except (TypeError, ValueError) as error:
            raise DataValidationError("Invalid mixture: " + str(error)) from error


def momentum_slice(ndim: int) -> slice:
    """Position of the momentum components"""
    return slice(1, 1 + ndim)


def energy_index(ndim: int) -> int:
    """Position of the total energy"""
    return 1 + ndim


def extra_index(ndim: int) -> int:
    """Position of the first model-specific entry"""
    return 2 + ndim


@dataclass
class PrimitiveState:
    """Density, velocity, pressure and the model payload

    Fields hold floats for a single state or arrays for a whole field.
    The mass fraction model fills ``y1``; the gamma-based model fills
    ``gamma`` and ``p_inf``. States returned by to_primitive carry the
    mixture gamma and p_inf for both models.
    """

    rho: ArrayLike
    velocity: Tuple[ArrayLike, ...]
    p: ArrayLike
    y1: Optional[ArrayLike] = None
    gamma: Optional[ArrayLike] = None
    p_inf: Optional[ArrayLike] = None

    def __post_init__(self):
        self.velocity = tuple(self.velocity)

    @property
    def ndim(self) -> int:
        """Number of velocity components"""
        return len(self.velocity)

    @property
    def thermo(self) -> MixtureThermo:
        """Mixture thermodynamics of this state"""
        if self.gamma is None:
            raise DataValidationError("State carries no gamma")
        return MixtureThermo(self.gamma, 0.0 if self.p_inf is None else self.p_inf)

    def serialize(self) -> dict:
        """Serializes a single PrimitiveState into a dictionary"""
        data = {
            "rho": float(self.rho),
            "velocity": [float(v) for v in self.velocity],
            "p": float(self.p),
        }
        for key in ("y1", "gamma", "p_inf"):
            value = getattr(self, key)
            if value is not None:
                data[key] = float(value)
        return data

    @classmethod
    def deserialize(cls, data: dict) -> "PrimitiveState":
        """Builds a single PrimitiveState from a dictionary"""
        try:
            optional = {
                key: float(data[key]) for key in ("y1", "gamma", "p_inf") if key in data
            }
            return cls(
                rho=float(data["rho"]),
                velocity=tuple(float(v) for v in data["velocity"]),
                p=float(data["p"]),
                **optional,
            )
        except KeyError as error:
            raise DataValidationError("Invalid state: missing " + error.args[0]) from error
        except (TypeError, ValueError) as error:
            raise DataValidationError("Invalid state: bad data " + str(error)) from error


def validate_primitive(prim: PrimitiveState, mixture: Mixture) -> None:
    """Raises DataValidationError unless the state is acceptable to the solver"""
    if prim.ndim not in (1, 2):
        raise DataValidationError(f"Velocity must have 1 or 2 components, got {prim.ndim}")
    if np.any(~(np.asarray(prim.rho) > 0.0)):
        raise DataValidationError("Density must be positive")
    if mixture.model is ModelKind.MASS_FRACTION:
        if prim.y1 is None:
            raise DataValidationError("The mass fraction model needs y1")
        y1 = np.asarray(prim.y1)
        if np.any((y1 < 0.0) | (y1 > 1.0)):
            raise DataValidationError("Mass fraction must lie in [0, 1]")
        th = MixtureThermo(mixture_gamma(y1, mixture.gas1, mixture.gas2), 0.0)
    else:
        if prim.gamma is None:
            raise DataValidationError("The gamma-based model needs gamma")
        th = prim.thermo
        if np.any(~(np.asarray(th.gamma) > 1.0)):
            raise DataValidationError("gamma must exceed 1")
        if np.any(np.asarray(th.p_inf) < 0.0):
            raise DataValidationError("p_inf must be non-negative")
    if np.any(~(np.asarray(th.gamma * (prim.p + th.p_inf)) > 0.0)):
        raise DataValidationError("State has no real sound speed")


def to_conserved(prim: PrimitiveState, mixture: Mixture) -> np.ndarray:
    """Conserved vector (leading axis) of a primitive state"""
    rho = np.asarray(prim.rho, dtype=float)
    bad = ~(rho > 0.0)
    if np.any(bad):
        raise DataValidationError(f"Density must be positive (first failure {first_failure(bad)})")
    velocity = [np.asarray(v, dtype=float) for v in prim.velocity]
    kinetic = 0.5 * rho * sum(v * v for v in velocity)

    if mixture.model is ModelKind.MASS_FRACTION:
        if prim.y1 is None:
            raise DataValidationError("The mass fraction model needs y1")
        y1 = np.asarray(prim.y1, dtype=float)
        if np.any((y1 < 0.0) | (y1 > 1.0)):
            raise DataValidationError("Mass fraction must lie in [0, 1]")
        th = MixtureThermo(mixture_gamma(y1, mixture.gas1, mixture.gas2), 0.0)
        extras = [rho * y1]
    else:
        if prim.gamma is None:
            raise DataValidationError("The gamma-based model needs gamma")
        th = prim.thermo
        gamma = np.asarray(th.gamma, dtype=float)
        phi = 1.0 / (gamma - 1.0)
        psi = gamma * th.p_inf / (gamma - 1.0)
        if mixture.quasi_conservative:
            extras = [phi, psi]
        else:
            extras = [rho * phi, rho * psi]

    rho_e = rho * internal_energy_from_pressure(rho, prim.p, th)
    parts = [rho, *(rho * v for v in velocity), rho_e + kinetic, *extras]
    return np.stack(np.broadcast_arrays(*parts)).astype(float)


def to_primitive(
    cons: np.ndarray, mixture: Mixture, clip_mass_fraction: bool = True
) -> PrimitiveState:
    """Primitive view of a conserved vector

    For the mass fraction model gamma is computed from Y1 clipped to [0, 1];
    the returned ``y1`` is the raw, unclipped value.
    """
    cons = np.asarray(cons, dtype=float)
    ndim = mixture.ndim_of(cons)
    rho = cons[0]
    bad = ~(rho > 0.0)
    if np.any(bad):
        raise UnphysicalStateError("Non-positive density", first_failure(bad))
    momentum = cons[momentum_slice(ndim)]
    velocity = tuple(m / rho for m in momentum)
    rho_e = cons[energy_index(ndim)] - 0.5 * sum(m * v for m, v in zip(momentum, velocity))
    x = extra_index(ndim)

    if mixture.model is ModelKind.MASS_FRACTION:
        y1 = cons[x] / rho
        y_thermo = np.clip(y1, 0.0, 1.0) if clip_mass_fraction else y1
        gamma = np.asarray(mixture_gamma(y_thermo, mixture.gas1, mixture.gas2))
        th = MixtureThermo(gamma, np.zeros_like(rho))
        p = pressure_from_internal_energy(rho, rho_e / rho, th)
        return PrimitiveState(rho, velocity, p, y1=y1, gamma=gamma, p_inf=th.p_inf)

    if mixture.quasi_conservative:
        phi, psi = cons[x], cons[x + 1]
    else:
        phi, psi = cons[x] / rho, cons[x + 1] / rho
    bad = ~(phi > 0.0)
    if np.any(bad):
        raise UnphysicalStateError("gamma reconstruction yields gamma <= 1", first_failure(bad))
    gamma = 1.0 + 1.0 / phi
    p_inf = psi / (phi * gamma)
    p = (rho_e - psi) / phi
    return PrimitiveState(rho, velocity, p, gamma=gamma, p_inf=p_inf)


def flux_from_primitive(cons: np.ndarray, prim: PrimitiveState, axis: int = 0) -> np.ndarray:
    """Physical flux along ``axis`` when the primitive view is already known"""
    ndim = prim.ndim
    vn = prim.velocity[axis]
    flux = cons * vn
    flux[0] = cons[1 + axis]
    flux[1 + axis] = cons[1 + axis] * vn + prim.p
    e = energy_index(ndim)
    flux[e] = (cons[e] + prim.p) * vn
    return flux


def physical_flux(cons: np.ndarray, mixture: Mixture, axis: int = 0) -> np.ndarray:
    """Physical flux F(U) (axis 0) or G(U) (axis 1)

    The model-specific entries are passively advected with the normal
    velocity.
    """
    cons = np.asarray(cons, dtype=float)
    return flux_from_primitive(cons, to_primitive(cons, mixture), axis)


def eigen_bounds(
    left: np.ndarray, right: np.ndarray, mixture: Mixture, axis: int = 0
) -> Tuple[ArrayLike, ArrayLike]:
    """Smallest and largest characteristic speed magnitude of two states"""
    speeds = []
    for cons in (left, right):
        prim = to_primitive(cons, mixture)
        a = sound_speed(prim.rho, prim.p, prim.thermo)
        vn = prim.velocity[axis]
        speeds.append((np.abs(vn) + a, np.minimum(np.minimum(np.abs(vn - a), np.abs(vn)), np.abs(vn + a))))
    lambda_max = np.maximum(speeds[0][0], speeds[1][0])
    lambda_min = np.minimum(speeds[0][1], speeds[1][1])
    return lambda_min, lambda_max


######################################################################
#  F L U X   J A C O B I A N   C H E C K
######################################################################
GAMMA_STEP = 1.0e-6
FLUX_STEP = 1.0e-6


@dataclass
class JacobianReport:
    """Residuals of the analytic eigenstructure of the mass fraction model"""

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    b: float
    b_prime: float
    eigen_residual: float
    fd_residual: float

    def passed(self, eigen_tol: float = 1.0e-8, fd_tol: float = 1.0e-6) -> bool:
        """True when both residuals are inside their tolerances"""
        return self.eigen_residual <= eigen_tol and self.fd_residual <= fd_tol


def _raw_gamma(rho: float, rho_y: float, mixture: Mixture) -> float:
    return mixture_gamma(rho_y / rho, mixture.gas1, mixture.gas2)


def jacobian_eigen_check(cons: np.ndarray, mixture: Mixture) -> JacobianReport:
    """Verify the analytic flux Jacobian of the 1D mass fraction model

    Assembles A(U) with B = p/(gamma-1) dgamma/dU1 and
    B' = p/(gamma-1) dgamma/dU4 from central differences of the mixing
    rule, then measures how far the analytic pairs
    (u-a, r1), (u, r2), (u, r3), (u+a, r4) are from A r = lambda r and how
    far A is from a finite-difference Jacobian of the flux.
    """
    cons = np.asarray(cons, dtype=float)
    if mixture.model is not ModelKind.MASS_FRACTION or cons.shape != (4,):
        raise DataValidationError("The Jacobian check needs a single 1D mass fraction state")
    rho, mom, energy, rho_y = cons
    u = mom / rho
    y1 = rho_y / rho
    gamma = _raw_gamma(rho, rho_y, mixture)
    p = (gamma - 1.0) * (energy - 0.5 * mom * u)
    h_total = (energy + p) / rho
    a = np.sqrt(gamma * p / rho)

    h1 = GAMMA_STEP * abs(rho)
    h4 = GAMMA_STEP * max(abs(rho_y), abs(rho))
    dgamma_d1 = (_raw_gamma(rho + h1, rho_y, mixture) - _raw_gamma(rho - h1, rho_y, mixture)) / (2.0 * h1)
    dgamma_d4 = (_raw_gamma(rho, rho_y + h4, mixture) - _raw_gamma(rho, rho_y - h4, mixture)) / (2.0 * h4)
    b = p / (gamma - 1.0) * dgamma_d1
    b_prime = p / (gamma - 1.0) * dgamma_d4

    matrix = np.array(
        [
            [0.0, 1.0, 0.0, 0.0],
            [0.5 * (gamma - 3.0) * u**2 + b, (3.0 - gamma) * u, gamma - 1.0, b_prime],
            [
                0.5 * (gamma - 1.0) * u**3 + b * u - u * h_total,
                h_total - (gamma - 1.0) * u**2,
                gamma * u,
                b_prime * u,
            ],
            [-y1 * u, y1, 0.0, u],
        ]
    )
    eigenvalues = np.array([u - a, u, u, u + a])
    eigenvectors = np.array(
        [
            [1.0, u - a, h_total - u * a, y1],
            [1.0, u, 0.5 * u**2 - b / (gamma - 1.0), 0.0],
            [0.0, 0.0, -b_prime / (gamma - 1.0), 1.0],
            [1.0, u + a, h_total + u * a, y1],
        ]
    ).T

    eigen_residual = 0.0
    for k in range(4):
        r = eigenvectors[:, k]
        scale = max(1.0, np.max(np.abs(matrix)) * np.max(np.abs(r)))
        eigen_residual = max(
            eigen_residual, np.max(np.abs(matrix @ r - eigenvalues[k] * r)) / scale
        )

    def unclipped_flux(state):
        return flux_from_primitive(state, to_primitive(state, mixture, clip_mass_fraction=False))

    numeric = np.empty((4, 4))
    for j in range(4):
        step = FLUX_STEP * max(abs(cons[j]), 1.0)
        plus, minus = cons.copy(), cons.copy()
        plus[j] += step
        minus[j] -= step
        numeric[:, j] = (unclipped_flux(plus) - unclipped_flux(minus)) / (2.0 * step)
    fd_residual = np.max(np.abs(matrix - numeric)) / max(1.0, np.max(np.abs(numeric)))

    return JacobianReport(
        matrix=matrix,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        b=float(b),
        b_prime=float(b_prime),
        eigen_residual=float(eigen_residual),
        fd_residual=float(fd_residual),
    )
