"""Elliptic curves in E^3: three binary-form conditions plus one cubic."""
from __future__ import annotations

from functools import reduce
from math import gcd
from typing import NamedTuple

from . import kernels
from ._exact import det
from ._parallel import map_strata, resolve_threads, split_range
from ._pykernels import cubic_defect
from .cm import CmParams, LatticeVector, NoCm, Polarization
from .census2 import (
    _check_t,
    curve_basis,
    essential_coords,
    full_bivector,
    kernel_lambda,
    matrix2,
)
from .errors import DimensionMismatch, InvalidClass, NotPrimitive, PreconditionViolated
from .exterior import content, is_primitive, wedge
from .records import CurveRecord, Kind, sorted_records


class ThreefoldClass(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    delta: int
    epsilon: int
    zeta: int
    eta: int
    theta: int
    iota: int


def quadratics_hold(cm: CmParams, s) -> bool:
    a, b, c, d, e, z, h, th, io = s
    u, vw = cm.u, cm.vw
    return (
        a * b - d * (d + u * h) == vw * h * h
        and b * c - z * (z + u * io) == vw * io * io
        and a * c - e * (e + u * th) == vw * th * th
    )


def check_class3(cm: CmParams, s) -> bool:
    if min(s[:3]) < 0 or reduce(gcd, s, 0) != 1:
        return False
    return quadratics_hold(cm, s) and cubic_defect(cm.u, cm.vw, *s) == 0


def class_from_lambda3(cm: CmParams, lam: LatticeVector) -> ThreefoldClass:
    if lam.g != 3:
        raise DimensionMismatch("class_from_lambda3 needs g = 3")
    if not is_primitive(lam.coords):
        raise NotPrimitive(f"{lam} is not primitive")
    ess = essential_coords(cm, lam)
    r = content(ess)
    return ThreefoldClass(*(x // r for x in ess))


def degree3(pol: Polarization, s) -> int:
    m, n, p = pol.multipliers
    return m * s[0] + n * s[1] + p * s[2]


def classify3(s) -> Kind:
    return Kind.ORDINARY if s[6] == s[7] == s[8] == 0 else Kind.EXTRA_ORDINARY


def matrix3(cm: CmParams, s) -> list[list[int]]:
    """Stacked leading rows of the three principal-minor systems (unknowns a..f)."""
    a, b, c, d, e, z, h, th, io = s
    u, v, w = cm.as_tuple()
    return [
        [w * h, 0, 0, d, -a, 0],
        [-d - u * h, a, 0, v * h, 0, 0],
        [0, w * io, 0, 0, z, -b],
        [0, -z - u * io, b, 0, v * io, 0],
        [-c, 0, e, 0, 0, v * th],
        [0, 0, w * th, c, 0, -e - u * th],
    ]


def det_identity3(cm: CmParams, s) -> tuple[int, int]:
    if not quadratics_hold(cm, s):
        raise PreconditionViolated(f"{tuple(s)} violates the three quadratic conditions")
    a, b, c = s[:3]
    return det(matrix3(cm, s)), a * b * c * cubic_defect(cm.u, cm.vw, *s)


# (zero diagonal index) -> (remaining pair, index of upper entry / minor)
_SUBPAIRS = {0: ((1, 2), 2), 1: ((0, 2), 1), 2: ((0, 1), 0)}


def _kernel_vector3(cm: CmParams, s) -> tuple[int, ...]:
    if all(s[:3]):
        return kernel_lambda(matrix3(cm, s))
    # a zero diagonal entry forces that coordinate of lam to vanish; solve the
    # g = 2 system on the other two coordinates
    (i, j), k = _SUBPAIRS[s[:3].index(0)]
    sub = (s[i], s[j], s[3 + k], s[6 + k])
    x1, x2, y1, y2 = kernel_lambda(matrix2(cm, sub), 2)
    real, tau = [0, 0, 0], [0, 0, 0]
    real[i], real[j], tau[i], tau[j] = x1, x2, y1, y2
    return tuple(real + tau)


def reconstruct3(cm: CmParams, s) -> tuple[LatticeVector, LatticeVector]:
    if not check_class3(cm, s):
        raise InvalidClass(f"{tuple(s)} is not a valid class for {cm.as_tuple()}")
    lam = LatticeVector.from_coords(_kernel_vector3(cm, tuple(s)))
    if class_from_lambda3(cm, lam) != tuple(s):
        raise InvalidClass(f"kernel vector of {tuple(s)} has a different class")
    lam, mu = curve_basis(cm, lam)
    assert wedge(lam, mu) == full_bivector(cm, tuple(s), 3)
    return lam, mu


def enumerate3(cm, pol: Polarization, t: int, *, threads: int | None = None,
               with_basis: bool = False) -> list[CurveRecord]:
    """All curves of degree <= t in E^3, sorted by ``(degree, coords)``."""
    _check_t(pol, 3, t)
    if isinstance(cm, NoCm):
        from .ordinary import ordinary_records

        return ordinary_records(3, pol, t, with_basis=with_basis)
    m, n, p = pol.multipliers
    nthreads = resolve_threads(threads)
    tuples = map_strata(
        lambda lo, hi: kernels.census3_classes(cm.u, cm.vw, m, n, p, t, lo, hi),
        split_range(0, t // m + 1, nthreads), nthreads,
    )
    records = []
    for tup in tuples:
        s = ThreefoldClass(*tup)
        basis = reconstruct3(cm, s) if with_basis else None
        records.append(CurveRecord(s, degree3(pol, s), classify3(s), basis))
    return sorted_records(records)
