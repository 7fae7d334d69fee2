"""Explicit upper bounds for lattice-point and curve counts.

Everything here is floating point.  Perimeters, surface areas and total mean
curvatures come from adaptive quadrature and are then multiplied by
``1 + SAFETY`` so that the returned constants over-estimate the true values;
the bounds built from them stay valid upper bounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, isqrt, pi, sin, sqrt

from scipy import integrate

from .cm import CmParams, NoCm, Polarization
from .errors import DimensionMismatch

SAFETY = 1e-6
_EPSREL = 1e-11


@dataclass(frozen=True)
class BoundReport:
    kind: str
    t: int
    value: float
    constants: dict = field(default_factory=dict)
    multipliers: tuple[int, ...] = ()
    cm: tuple[int, int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": {
                "cm": None if self.cm is None else dict(zip("uvw", self.cm)),
                "pol": list(self.multipliers),
            },
            "t": self.t,
            "constants": dict(self.constants),
            "value": self.value,
        }


def _ellipse_perimeter(a: float, b: float) -> float:
    val, _ = integrate.quad(
        lambda th: sqrt((a * sin(th)) ** 2 + (b * cos(th)) ** 2),
        0.0, pi / 2, epsabs=0.0, epsrel=1e-13, limit=200,
    )
    return 4.0 * val


def ellipse_constants(a: int, b: int, c: int) -> tuple[float, float]:
    """Area and (inflated) perimeter of ``{a x^2 + b x y + c y^2 <= 1}``."""
    det4 = 4 * a * c - b * b
    if a <= 0 or det4 <= 0:
        raise ValueError(f"form ({a}, {b}, {c}) is not positive definite")
    area = 2 * pi / sqrt(det4)
    half_tr = (a + c) / 2
    rad = sqrt(((a - c) / 2) ** 2 + (b / 2) ** 2)
    hi = half_tr + rad
    # the small eigenvalue via the determinant, avoiding cancellation
    lo = (det4 / 4) / hi
    return area, _ellipse_perimeter(1 / sqrt(lo), 1 / sqrt(hi)) * (1 + SAFETY)


def ellipse_geometry(cm: CmParams) -> tuple[float, float]:
    """``(A, L)`` for the region ``x^2 + u x y + vw y^2 <= 1``."""
    area = pi / sqrt(cm.vw - cm.u * cm.u / 4)
    _, perim = ellipse_constants(1, cm.u, cm.vw)
    return area, perim


def ellipsoid_geometry(pol: Polarization) -> tuple[float, float, float]:
    """Volume, surface area and total mean curvature of ``{m x^2 + n y^2 + p z^2 <= 1}``.

    S and M are integrated over one octant of the usual angular
    parameterization; the mean curvature is the standard closed form in terms
    of the support-like quantity ``h = |grad|^-1``.
    """
    if pol.g != 3:
        raise DimensionMismatch("ellipsoid_geometry needs three multipliers")
    m, n, p = pol.multipliers
    a, b, c = 1 / sqrt(m), 1 / sqrt(n), 1 / sqrt(p)
    vol = (4 * pi / 3) / sqrt(m * n * p)

    def area_element(th, ph):
        sp, cp, st, ct = sin(ph), cos(ph), sin(th), cos(th)
        return sp * sqrt((b * c * sp * ct) ** 2 + (a * c * sp * st) ** 2 + (a * b * cp) ** 2)

    def mean_curv(th, ph):
        sp, cp, st, ct = sin(ph), cos(ph), sin(th), cos(th)
        x, y, z = a * sp * ct, b * sp * st, c * cp
        h = 1 / sqrt(x * x / a ** 4 + y * y / b ** 4 + z * z / c ** 4)
        return h ** 3 * (a * a + b * b + c * c - x * x - y * y - z * z) / (2 * (a * b * c) ** 2)

    def octant(fn):
        val, _ = integrate.dblquad(fn, 0.0, pi / 2, 0.0, pi / 2, epsabs=0.0, epsrel=_EPSREL)
        return 8.0 * val

    surf = octant(area_element)
    mean = octant(lambda th, ph: mean_curv(th, ph) * area_element(th, ph))
    return vol, surf * (1 + SAFETY), mean * (1 + SAFETY)


def nosarzewska_bound(area: float, perimeter: float, t: float) -> float:
    """Lattice points in ``sqrt(t) K`` for a planar convex K: ``A t + (L/2) sqrt(t) + 1``."""
    return area * t + perimeter / 2 * sqrt(t) + 1


def overhagen_bound(vol: float, surf: float, mean: float, t: float) -> float:
    """Lattice points in ``sqrt(t) K`` for a C^2 convex body in R^3."""
    return vol * t ** 1.5 + surf / 2 * t + mean / pi * sqrt(t) + 1


def trapz_sqrt_bound(t: int) -> float:
    """Upper bound for ``sum_{n=0}^{t} sqrt(n (t - n))``."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return pi / 8 * t * t - (t - 2) / (6 * t)


def _first_factor(area: float, perim: float, tp: int, tail: int) -> float:
    if tp == 0:
        return 0.0
    return (area * (tp ** 3 / 6 - tp / 6)
            + perim / 2 * (pi / 8 * tp * tp - (tp - 2) / (6 * tp))
            + tail * tp)


def census2_bound(cm, pol: Polarization, t: int) -> BoundReport:
    if pol.g != 2:
        raise DimensionMismatch("census2_bound needs two multipliers")
    m, n = sorted(pol.multipliers)
    if isinstance(cm, NoCm):
        area, perim = ellipse_constants(m, 0, n)
        value = nosarzewska_bound(area, perim, t)
        return BoundReport("nosarzewska", t, value, {"A": area, "L": perim, "C": area},
                           pol.multipliers)
    area, perim = ellipse_geometry(cm)
    tp = t // m
    value = _first_factor(area, perim, tp, 1)
    consts = {"A": area, "L": perim, "C": area / (6 * m ** 3), "t_prime": tp}
    return BoundReport("census2_bound", t, value, consts, pol.multipliers, cm.as_tuple())


def census3_bound(cm, pol: Polarization, t: int) -> BoundReport:
    if pol.g != 3:
        raise DimensionMismatch("census3_bound needs three multipliers")
    m, n, p = sorted(pol.multipliers)
    if isinstance(cm, NoCm):
        vol, surf, mean = ellipsoid_geometry(Polarization((m, n, p)))
        value = overhagen_bound(vol, surf, mean, t)
        return BoundReport("overhagen", t, value, {"V": vol, "S": surf, "M": mean, "C": vol},
                           pol.multipliers)
    area, perim = ellipse_geometry(cm)
    tp = t // m
    r = (t // n) * (t // p)
    first = _first_factor(area, perim, tp, 2)
    second = area * r + perim / 2 * sqrt(r) + 1
    consts = {
        "A": area, "L": perim, "C": area * area / (3 * m ** 3 * n * p),
        "t_prime": tp, "r": r, "first_factor": first, "second_factor": second,
    }
    return BoundReport("census3_bound", t, 2 * first * second, consts, pol.multipliers, cm.as_tuple())


def count_ellipse_points(a: int, b: int, c: int, t: int) -> int:
    """Exact number of integer ``(x, y)`` with ``a x^2 + b x y + c y^2 <= t``."""
    det4 = 4 * a * c - b * b
    if a <= 0 or det4 <= 0:
        raise ValueError(f"form ({a}, {b}, {c}) is not positive definite")
    if t < 0:
        return 0
    ymax = isqrt(4 * a * t // det4)
    total = 0
    for y in range(-ymax, ymax + 1):
        # (2 a x + b y)^2 <= 4 a t - det4 y^2
        disc = 4 * a * t - det4 * y * y
        if disc < 0:
            continue
        s = isqrt(disc)
        lo = -((s + b * y) // (2 * a))  # ceil((-s - b y) / 2a)
        hi = (s - b * y) // (2 * a)
        total += max(0, hi - lo + 1)
    return total


def count_ellipsoid_points(m: int, n: int, p: int, t: int) -> int:
    """Exact number of integer points with ``m x^2 + n y^2 + p z^2 <= t``."""
    if t < 0:
        return 0
    total = 0
    xm = isqrt(t // m)
    for x in range(-xm, xm + 1):
        rx = t - m * x * x
        ym = isqrt(rx // n)
        for y in range(-ym, ym + 1):
            total += 2 * isqrt((rx - n * y * y) // p) + 1
    return total
