"""Elliptic curves in E^2 as primitive solutions of ``ab - c(c + u h) = vw h^2``.

A curve is identified by its class ``(alpha, beta, gamma, eta)``: the
content-normalized essential coordinates of ``lam ^ bar(lam)`` for any
primitive ``lam`` in the curve's lattice.  ``alpha, beta >= 0`` fixes the sign.
"""
from __future__ import annotations

from functools import reduce
from math import gcd
from typing import NamedTuple

from . import kernels
from ._exact import det, integer_nullspace, rank
from ._parallel import map_strata, resolve_threads, split_range
from .cm import CmParams, LatticeVector, NoCm, Polarization, bar, q2, rational_line_membership
from .errors import DimensionMismatch, InvalidClass, NotPrimitive
from .exterior import Bivector, content, is_primitive, pair_order
from .records import CurveRecord, Kind, sorted_records


class SurfaceClass(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    eta: int


def essential_coords(cm: CmParams, lam: LatticeVector) -> tuple[int, ...]:
    """Unnormalized essentials of ``lam ^ bar(lam)``: diagonal, upper entries, minors."""
    a, d = lam.real, lam.tau
    g = lam.g
    diag = [q2(cm, a[i], d[i]) for i in range(g)]
    upper, minors = [], []
    for i in range(g):
        for j in range(i + 1, g):
            upper.append(cm.w * a[i] * a[j] - cm.u * a[i] * d[j] + cm.v * d[i] * d[j])
            minors.append(a[i] * d[j] - a[j] * d[i])
    return tuple(diag + upper + minors)


def full_bivector(cm: CmParams, ess, g: int) -> Bivector:
    """Rebuild all ``C(2g, 2)`` wedge coordinates from the essential ones.

    Real/real pairs carry ``-v * minor``, tau/tau pairs ``-w * minor``; the
    mixed block is the matrix whose lower entries exceed the upper ones by
    ``u * minor``.
    """
    k = g * (g - 1) // 2
    diag, upper, minors = ess[:g], ess[g:g + k], ess[g + k:]
    idx = {pair: n for n, pair in enumerate((i, j) for i in range(g) for j in range(i + 1, g))}
    coords = []
    for p, q in pair_order(g):
        if q < g:
            coords.append(-cm.v * minors[idx[p, q]])
        elif p >= g:
            coords.append(-cm.w * minors[idx[p - g, q - g]])
        else:
            i, j = p, q - g
            if i == j:
                coords.append(diag[i])
            elif i < j:
                coords.append(upper[idx[i, j]])
            else:
                coords.append(upper[idx[j, i]] + cm.u * minors[idx[j, i]])
    return Bivector(g, tuple(coords))


def check_class2(cm: CmParams, s) -> bool:
    a, b, c, h = s
    if a < 0 or b < 0 or reduce(gcd, s, 0) != 1:
        return False
    return a * b - c * (c + cm.u * h) == cm.vw * h * h


def class_from_lambda2(cm: CmParams, lam: LatticeVector) -> SurfaceClass:
    if lam.g != 2:
        raise DimensionMismatch("class_from_lambda2 needs g = 2")
    if not is_primitive(lam.coords):
        raise NotPrimitive(f"{lam} is not primitive")
    ess = essential_coords(cm, lam)
    r = content(ess)
    return SurfaceClass(*(x // r for x in ess))


def degree2(pol: Polarization, s) -> int:
    m, n = pol.multipliers
    return m * s[0] + n * s[1]


def classify2(s) -> Kind:
    return Kind.ORDINARY if s[3] == 0 else Kind.EXTRA_ORDINARY


def matrix2(cm: CmParams, s) -> list[list[int]]:
    """Coefficient matrix of the linear system cutting out the curve's lattice."""
    a, b, c, h = s
    u, v, w = cm.as_tuple()
    return [
        [w * h, 0, c, -a],
        [-c - u * h, a, v * h, 0],
        [0, w * h, b, -c - u * h],
        [-b, c, 0, v * h],
    ]


def det_identity2(cm: CmParams, s) -> tuple[int, int]:
    a, b, c, h = s
    defect = a * b - c * (c + cm.u * h) - cm.vw * h * h
    return det(matrix2(cm, s)), -defect * defect


def _bezout_vector(x) -> list[int]:
    """Integer ``c`` with ``sum(c_i x_i) == gcd(x)``."""
    g, coeffs = 0, []
    for xi in x:
        # extended Euclid on (g, xi)
        r0, r1, s0, s1, t0, t1 = g, xi, 1, 0, 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0 < 0:
            r0, s0, t0 = -r0, -s0, -t0
        coeffs = [s0 * cc for cc in coeffs] + [t0]
        g = r0
    return coeffs


def curve_basis(cm: CmParams, lam: LatticeVector) -> tuple[LatticeVector, LatticeVector]:
    """Positively oriented basis ``(lam, mu)`` of the curve lattice through primitive ``lam``.

    ``bar(lam)`` is congruent to a multiple of ``lam`` modulo ``r``, the content of
    ``lam ^ bar(lam)``; ``mu = (bar(lam) - k lam) / r`` with ``0 <= k < r``.
    """
    if not is_primitive(lam.coords):
        raise NotPrimitive(f"{lam} is not primitive")
    lb = bar(cm, lam)
    r = content(essential_coords(cm, lam))
    c = _bezout_vector(lam.coords)
    k = sum(ci * bi for ci, bi in zip(c, lb.coords)) % r
    diff = lb - lam.scale(k)
    assert all(x % r == 0 for x in diff.coords)
    mu = LatticeVector.from_coords(x // r for x in diff.coords)
    _, y = rational_line_membership(cm, lam, mu)
    if y < 0:
        mu = -mu
    return lam, mu


def _normalize_sign(vec):
    first = next(x for x in vec if x)
    return tuple(-x for x in vec) if first < 0 else tuple(vec)


def kernel_lambda(matrix, expected_rank: int | None = None) -> tuple[int, ...]:
    """First primitive kernel vector (fixed pivot order), first nonzero entry positive."""
    kern = integer_nullspace(matrix)
    if not kern or (expected_rank is not None and rank(matrix) != expected_rank):
        raise InvalidClass("linear system does not have the expected rank")
    return _normalize_sign(kern[0])


def reconstruct2(cm: CmParams, s) -> tuple[LatticeVector, LatticeVector]:
    if not check_class2(cm, s):
        raise InvalidClass(f"{tuple(s)} is not a valid class for {cm.as_tuple()}")
    lam = LatticeVector.from_coords(kernel_lambda(matrix2(cm, s), 2))
    if class_from_lambda2(cm, lam) != tuple(s):
        raise InvalidClass(f"kernel vector of {tuple(s)} has a different class")
    return curve_basis(cm, lam)


def _check_t(pol: Polarization, g: int, t: int) -> None:
    if pol.g != g:
        raise DimensionMismatch(f"polarization has {pol.g} multipliers, expected {g}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")


def enumerate2(cm, pol: Polarization, t: int, *, threads: int | None = None,
               with_basis: bool = False) -> list[CurveRecord]:
    """All curves of degree <= t in E^2, sorted by ``(degree, coords)``."""
    _check_t(pol, 2, t)
    if isinstance(cm, NoCm):
        from .ordinary import ordinary_records

        return ordinary_records(2, pol, t, with_basis=with_basis)
    m, n = pol.multipliers
    nthreads = resolve_threads(threads)
    tuples = map_strata(
        lambda lo, hi: kernels.census2_classes(cm.u, cm.vw, m, n, t, lo, hi),
        split_range(0, t // m + 1, nthreads), nthreads,
    )
    records = []
    for tup in tuples:
        s = SurfaceClass(*tup)
        basis = reconstruct2(cm, s) if with_basis else None
        records.append(CurveRecord(s, degree2(pol, s), classify2(s), basis))
    return sorted_records(records)
