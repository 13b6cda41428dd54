"""
Thermodynamics

Stiffened gas equation of state and the mixing rule for the ratio of
specific heats shared by both mixture models.

    (p + gamma * p_inf) / (gamma - 1) = rho * e

p_inf = 0 recovers the perfect gas. Every function accepts floats or numpy
arrays and broadcasts; none of them mutate their arguments.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from mixsolver.errors import DataValidationError, ThermoDomainError

ArrayLike = Union[float, np.ndarray]


def first_failure(mask) -> tuple:
    """Returns the index of the first True entry of a mask, or None"""
    mask = np.asarray(mask)
    if mask.ndim == 0:
        return None if not mask else ()
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


@dataclass(frozen=True)
class GasComponent:
    """Thermodynamic constants of one species"""

    gamma: float
    cv: float = 1.0
    p_inf: float = 0.0

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise DataValidationError(f"gamma must be > 1, got {self.gamma}")
        if not self.cv > 0.0:
            raise DataValidationError(f"cv must be > 0, got {self.cv}")
        if not self.p_inf >= 0.0:
            raise DataValidationError(f"p_inf must be >= 0, got {self.p_inf}")

    @property
    def thermo(self) -> "MixtureThermo":
        """The pure-species MixtureThermo"""
        return MixtureThermo(self.gamma, self.p_inf)

    def serialize(self) -> dict:
        """Serializes a GasComponent into a dictionary"""
        return {"gamma": self.gamma, "cv": self.cv, "p_inf": self.p_inf}

    @classmethod
    def deserialize(cls, data: dict) -> "GasComponent":
        """Builds a GasComponent from a dictionary"""
        try:
            return cls(
                gamma=float(data["gamma"]),
                cv=float(data.get("cv", 1.0)),
                p_inf=float(data.get("p_inf", 0.0)),
            )
        except KeyError as error:
            raise DataValidationError(
                "Invalid gas component: missing " + error.args[0]
            ) from error
        except (TypeError, ValueError) as error:
            raise DataValidationError(
                "Invalid gas component: bad data " + str(error)
            ) from error


@dataclass(frozen=True)
class MixtureThermo:
    """Mixture ratio of specific heats and stiffening pressure"""

    gamma: ArrayLike
    p_inf: ArrayLike = 0.0


def mixture_gamma(y1: ArrayLike, g1: GasComponent, g2: GasComponent) -> ArrayLike:
    """Ratio of specific heats of a two-species mixture

    gamma = (y1 g1 cv1 + (1 - y1) g2 cv2) / (y1 cv1 + (1 - y1) cv2)

    y1 is used as given; callers clip it to [0, 1] when they need to.
    """
    y1 = np.asarray(y1, dtype=float)
    y2 = 1.0 - y1
    denominator = y1 * g1.cv + y2 * g2.cv
    bad = ~(denominator > 0.0)
    if np.any(bad):
        raise ThermoDomainError(
            "Mixture heat capacity is not positive (corrupted mass fraction)",
            first_failure(bad),
        )
    if g1.gamma == g2.gamma:
        # single-gas limit must be exact, whatever y1 is
        gamma = np.full_like(y1, g1.gamma)
    else:
        gamma = (y1 * g1.gamma * g1.cv + y2 * g2.gamma * g2.cv) / denominator
        gamma = np.where(y1 == 1.0, g1.gamma, np.where(y1 == 0.0, g2.gamma, gamma))
    return gamma if gamma.ndim else float(gamma)


def pressure_from_internal_energy(rho: ArrayLike, e: ArrayLike, th: MixtureThermo) -> ArrayLike:
    """p = (gamma - 1) rho e - gamma p_inf

    May legitimately be negative for a stiffened liquid under tension.
    """
    return (th.gamma - 1.0) * rho * e - th.gamma * th.p_inf


def internal_energy_from_pressure(rho: ArrayLike, p: ArrayLike, th: MixtureThermo) -> ArrayLike:
    """e = (p + gamma p_inf) / ((gamma - 1) rho)"""
    gamma = np.asarray(th.gamma, dtype=float)
    bad = ~(gamma > 1.0)
    if np.any(bad):
        raise ThermoDomainError("gamma must exceed 1", first_failure(bad))
    return (p + th.gamma * th.p_inf) / ((th.gamma - 1.0) * rho)


def sound_speed(rho: ArrayLike, p: ArrayLike, th: MixtureThermo) -> ArrayLike:
    """a = sqrt(gamma (p + p_inf) / rho)

    The stiffened form is used everywhere; it is sqrt(gamma p / rho) when
    p_inf = 0.
    """
    radicand = th.gamma * (p + th.p_inf) / rho
    bad = ~(np.asarray(radicand) >= 0.0)
    if np.any(bad):
        raise ThermoDomainError("Negative squared sound speed", first_failure(bad))
    return np.sqrt(radicand)
