"""CM data, period-lattice vectors and the two binary quadratic forms.

An element of the period lattice ``Z^g + tau Z^g`` is stored as two integer
blocks ``(real | tau)`` so that ``lam = real + tau * tau_part``.  ``tau`` itself
is never evaluated numerically: it is the root of ``w x^2 + u x + v`` and every
quantity below is written through the integers ``(u, v, w)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DimensionMismatch,
    InvalidPolarization,
    NonNegativeDiscriminant,
    NonPositiveW,
    NotCoprime,
    ZeroVector,
)


@dataclass(frozen=True)
class CmParams:
    """Coefficients of ``w tau^2 + u tau + v = 0``."""

    u: int
    v: int
    w: int

    def __post_init__(self):
        if self.w <= 0:
            raise NonPositiveW(f"w must be positive (w > 0), got w={self.w}")
        if gcd(gcd(self.u, self.v), self.w) != 1:
            raise NotCoprime(
                f"(u, v, w) = ({self.u}, {self.v}, {self.w}) is not coprime (gcd(u, v, w) = 1)"
            )
        if self.disc >= 0:
            raise NonNegativeDiscriminant(
                f"discriminant u^2 - 4vw = {self.disc} must be negative (u^2 - 4vw < 0)"
            )

    @property
    def disc(self) -> int:
        return self.u * self.u - 4 * self.v * self.w

    @property
    def vw(self) -> int:
        return self.v * self.w

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)


@dataclass(frozen=True)
class NoCm:
    """Marker selecting the End(E) = Z mode (ordinary curves only)."""


NO_CM = NoCm()


def validate_cm(u: int, v: int, w: int) -> CmParams:
    return CmParams(int(u), int(v), int(w))


@dataclass(frozen=True)
class LatticeVector:
    real: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "real", tuple(int(x) for x in self.real))
        object.__setattr__(self, "tau", tuple(int(x) for x in self.tau))
        if len(self.real) != len(self.tau):
            raise DimensionMismatch("real and tau parts must have the same length")

    @classmethod
    def from_coords(cls, coords) -> "LatticeVector":
        coords = tuple(coords)
        if len(coords) % 2:
            raise DimensionMismatch("a lattice vector has an even number of coordinates")
        g = len(coords) // 2
        return cls(coords[:g], coords[g:])

    @classmethod
    def zero(cls, g: int) -> "LatticeVector":
        return cls((0,) * g, (0,) * g)

    @property
    def g(self) -> int:
        return len(self.real)

    @property
    def coords(self) -> tuple[int, ...]:
        return self.real + self.tau

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _same_dim(self, other)
        return LatticeVector.from_coords(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _same_dim(self, other)
        return LatticeVector.from_coords(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector.from_coords(-a for a in self.coords)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector.from_coords(k * a for a in self.coords)

    def __str__(self):
        return f"({', '.join(map(str, self.real))} | {', '.join(map(str, self.tau))})"


@dataclass(frozen=True)
class Polarization:
    """Product polarization with multipliers ``(m_1, ..., m_g)``."""

    multipliers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multipliers", tuple(int(m) for m in self.multipliers))
        if not self.multipliers:
            raise DimensionMismatch("a polarization needs at least one multiplier")
        if any(m < 1 for m in self.multipliers):
            raise InvalidPolarization(f"polarization multipliers must be >= 1 (m_i >= 1), got {self.multipliers}")

    @property
    def g(self) -> int:
        return len(self.multipliers)

    @classmethod
    def principal(cls, g: int) -> "Polarization":
        return cls((1,) * g)


def _same_dim(lam: LatticeVector, mu: LatticeVector) -> None:
    if lam.g != mu.g:
        raise DimensionMismatch(f"dimension mismatch: {lam.g} != {mu.g}")


def bar(cm: CmParams, lam: LatticeVector) -> LatticeVector:
    """Multiplication by ``w tau``: ``(l1 | l2) -> (-v l2 | w l1 - u l2)``."""
    real = tuple(-cm.v * y for y in lam.tau)
    tau = tuple(cm.w * x - cm.u * y for x, y in zip(lam.real, lam.tau))
    return LatticeVector(real, tau)


def q2(cm: CmParams, x: int, y: int) -> int:
    """``w x^2 - u x y + v y^2``, the norm-type form on one coordinate of the lattice."""
    return cm.w * x * x - cm.u * x * y + cm.v * y * y


def qform(cm: CmParams, x: int, y: int) -> int:
    """``x^2 + u x y + v w y^2``; its representations of ``alpha*beta`` give the classes."""
    return x * x + cm.u * x * y + cm.vw * y * y


def degree_numerator(cm: CmParams, pol: Polarization, lam: LatticeVector) -> int:
    if pol.g != lam.g:
        raise DimensionMismatch(f"polarization has g={pol.g}, vector has g={lam.g}")
    return sum(m * q2(cm, x, y) for m, x, y in zip(pol.multipliers, lam.real, lam.tau))


def rational_line_membership(
    cm: CmParams, lam: LatticeVector, mu: LatticeVector
) -> tuple[Fraction, Fraction] | None:
    """Write ``mu = (x + tau*y) * lam`` with rational x, y, if possible.

    Equivalently ``mu = x*lam + (y/w)*bar(lam)``.  Returns ``None`` when mu is
    not on the complex line through lam.
    """
    _same_dim(lam, mu)
    if lam.is_zero():
        raise ZeroVector("lambda must be nonzero")
    lb = bar(cm, lam).coords
    lc, mc = lam.coords, mu.coords
    n = len(lc)
    # lam and bar(lam) are Q-independent, so some 2x2 minor is invertible
    for i in range(n):
        for j in range(i + 1, n):
            det = lc[i] * lb[j] - lc[j] * lb[i]
            if det:
                x = Fraction(mc[i] * lb[j] - mc[j] * lb[i], det)
                yb = Fraction(lc[i] * mc[j] - lc[j] * mc[i], det)
                if all(x * a + yb * b == c for a, b, c in zip(lc, lb, mc)):
                    return x, yb * cm.w
                return None
    raise AssertionError("lambda and bar(lambda) are dependent; tau would be real")
