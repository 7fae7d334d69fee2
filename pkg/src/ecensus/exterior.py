"""Integer wedge products, content and the elliptic-sublattice test."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd

from .cm import CmParams, LatticeVector, rational_line_membership
from .errors import DependentVectors, DimensionMismatch, NotPrimitive, ZeroVector


def pair_order(g: int) -> list[tuple[int, int]]:
    """Coordinate order of a bivector: pairs ``(i, j)``, ``i < j``, lexicographic."""
    return list(combinations(range(2 * g), 2))


@dataclass(frozen=True)
class Bivector:
    g: int
    coords: tuple[int, ...]

    def __post_init__(self):
        expected = (2 * self.g) * (2 * self.g - 1) // 2
        if len(self.coords) != expected:
            raise DimensionMismatch(f"bivector for g={self.g} needs {expected} coordinates")

    def __getitem__(self, pair: tuple[int, int]) -> int:
        """Coordinate for a 0-based index pair; ``(j, i)`` gives the negative."""
        i, j = pair
        if i == j:
            return 0
        if i > j:
            return -self[j, i]
        return self.coords[pair_order(self.g).index((i, j))]

    def __neg__(self) -> "Bivector":
        return Bivector(self.g, tuple(-c for c in self.coords))


def wedge(lam: LatticeVector, mu: LatticeVector) -> Bivector:
    if lam.g != mu.g:
        raise DimensionMismatch(f"dimension mismatch: {lam.g} != {mu.g}")
    a, b = lam.coords, mu.coords
    return Bivector(lam.g, tuple(a[i] * b[j] - a[j] * b[i] for i, j in pair_order(lam.g)))


def content(v) -> int:
    c = reduce(gcd, v, 0)
    if c == 0:
        raise ZeroVector("content is undefined for the zero vector")
    return c


def is_primitive(v) -> bool:
    return reduce(gcd, v, 0) == 1


def quotient_content(lam: LatticeVector, mu: LatticeVector) -> int:
    """Content of the class of ``mu`` in ``Lambda / Z lam``.

    Column operations (extended Euclid) carry ``lam`` to the first unit vector;
    applying the same unimodular change of basis to ``mu``, the quotient
    coordinates of ``mu`` are everything but the first.
    """
    if lam.g != mu.g:
        raise DimensionMismatch(f"dimension mismatch: {lam.g} != {mu.g}")
    if not is_primitive(lam.coords):
        raise NotPrimitive(f"{lam} is not primitive")
    x = list(lam.coords)
    y = list(mu.coords)
    n = len(x)
    # gather the gcd of x into column 0 by pairwise Euclid steps
    for j in range(1, n):
        while x[j]:
            q = x[0] // x[j]
            x[0], x[j] = x[j], x[0] - q * x[j]
            y[0], y[j] = y[j], y[0] - q * y[j]
    if x[0] < 0:
        x[0], y[0] = -x[0], -y[0]
    assert x[0] == 1 and not any(x[1:])
    rest = y[1:]
    if not any(rest):
        raise DependentVectors("mu is a multiple of lambda")
    return content(rest)


def is_elliptic_basis(cm: CmParams, lam: LatticeVector, mu: LatticeVector) -> bool:
    """Do ``lam, mu`` span the full lattice of a one-dimensional subtorus?"""
    if rational_line_membership(cm, lam, mu) is None:
        return False
    return is_primitive(wedge(lam, mu).coords)
