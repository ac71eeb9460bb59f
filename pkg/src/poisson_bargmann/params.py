from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DomainError, parse_rational


@dataclass(frozen=True)
class ModelParams:
    """Spacing ``alpha`` and variance ``sigma`` of the lattice Poisson measure.

    Both are exact positive rationals; strings like ``"3/4"`` are accepted.
    """

    alpha: Fraction
    sigma: Fraction

    def __post_init__(self):
        a = parse_rational(self.alpha)
        s = parse_rational(self.sigma)
        if a <= 0 or s <= 0:
            raise DomainError(f"alpha and sigma must be positive, got alpha={a}, sigma={s}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "sigma", s)

    @property
    def shift(self) -> Fraction:
        """``sigma / alpha``: the mean of the measure."""
        return self.sigma / self.alpha

    @property
    def intensity(self) -> Fraction:
        """``sigma / alpha**2``: the Poisson parameter of the atom counts."""
        return self.sigma / self.alpha**2

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, sigma={self.sigma})"


STANDARD_PARAMS = (
    ModelParams(1, 1),
    ModelParams(Fraction(1, 2), Fraction(3, 4)),
    ModelParams(2, 5),
)
