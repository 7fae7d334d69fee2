"""Ordinary curves ``E_v = {(v_1 x, ..., v_g x)}`` and curves from endomorphism vectors."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt

from .cm import CmParams, LatticeVector, Polarization
from .errors import DimensionMismatch, ZeroMap
from .exterior import content, is_primitive
from .records import CurveRecord, Kind, sorted_records


@dataclass(frozen=True, order=True)
class OrdinaryCurve:
    v: tuple[int, ...]

    def __post_init__(self):
        if not is_primitive(self.v):
            raise ValueError(f"{self.v} is not primitive")
        if next(x for x in self.v if x) < 0:
            raise ValueError(f"{self.v} is not sign-normalized")

    @property
    def g(self) -> int:
        return len(self.v)

    def degree(self, pol: Polarization) -> int:
        return sum(m * x * x for m, x in zip(pol.multipliers, self.v))


def enumerate_ordinary(g: int, pol: Polarization, t: int) -> list[OrdinaryCurve]:
    """Sign-normalized primitive ``v`` with ``sum m_i v_i^2 <= t``, sorted by (degree, v)."""
    if pol.g != g:
        raise DimensionMismatch(f"polarization has {pol.g} multipliers, expected {g}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    ranges = [range(-isqrt(t // m), isqrt(t // m) + 1) for m in pol.multipliers]
    out = []
    for v in product(*ranges):
        if not is_primitive(v) or next(x for x in v if x) < 0:
            continue
        if sum(m * x * x for m, x in zip(pol.multipliers, v)) <= t:
            out.append(OrdinaryCurve(v))
    return sorted(out, key=lambda c: (c.degree(pol), c.v))


def ordinary_class(cm, curve: OrdinaryCurve) -> tuple[int, ...]:
    """Class of ``E_v``: ``(v_i^2 ; v_i v_j ; 0 ...)``.

    The content of ``lam ^ bar(lam)`` for ``lam = (v | 0)`` is exactly ``w``, so
    the class does not depend on the CM data (or its absence).
    """
    v = curve.v
    g = len(v)
    upper = [v[i] * v[j] for i in range(g) for j in range(i + 1, g)]
    ess = tuple([x * x for x in v] + upper + [0] * len(upper))
    if g == 2:
        from .census2 import SurfaceClass

        return SurfaceClass(*ess)
    if g == 3:
        from .census3 import ThreefoldClass

        return ThreefoldClass(*ess)
    return ess


def ordinary_records(g: int, pol: Polarization, t: int, *, with_basis: bool = False) -> list[CurveRecord]:
    records = []
    for curve in enumerate_ordinary(g, pol, t):
        basis = None
        if with_basis:
            zero = (0,) * g
            basis = (LatticeVector(curve.v, zero), LatticeVector(zero, curve.v))
        records.append(CurveRecord(ordinary_class(None, curve), curve.degree(pol), Kind.ORDINARY, basis))
    return sorted_records(records)


@dataclass(frozen=True)
class EndomorphismReport:
    lam: LatticeVector
    cls: tuple[int, ...]
    formula_degree: int
    class_degree: int

    @property
    def degrees_match(self) -> bool:
        return self.formula_degree == self.class_degree


def endomorphism_degree(cm: CmParams, x: int, y: int) -> int:
    """Degree (norm) of the endomorphism ``x + y * (w tau)``."""
    return x * x - cm.u * x * y + cm.vw * y * y


def class_from_endomorphism_vector(cm: CmParams, phi, pol: Polarization | None = None) -> EndomorphismReport:
    """Curve swept out by ``z -> (phi_1 z, ..., phi_g z)`` with ``phi_i = x_i + y_i (w tau)``.

    ``formula_degree`` is ``sum m_i deg(phi_i)``; it equals the curve's degree
    only when ``phi`` embeds E onto its image.
    """
    phi = [(int(x), int(y)) for x, y in phi]
    g = len(phi)
    if pol is None:
        pol = Polarization.principal(g)
    if pol.g != g:
        raise DimensionMismatch(f"polarization has {pol.g} multipliers, phi has {g} entries")
    raw = LatticeVector(tuple(x for x, _ in phi), tuple(cm.w * y for _, y in phi))
    if raw.is_zero():
        raise ZeroMap("phi is identically zero")
    r = content(raw.coords)
    lam = LatticeVector.from_coords(c // r for c in raw.coords)
    if g == 2:
        from .census2 import class_from_lambda2, degree2

        cls = class_from_lambda2(cm, lam)
        deg = degree2(pol, cls)
    elif g == 3:
        from .census3 import class_from_lambda3, degree3

        cls = class_from_lambda3(cm, lam)
        deg = degree3(pol, cls)
    else:
        raise DimensionMismatch("only g = 2 and g = 3 are supported")
    formula = sum(m * endomorphism_degree(cm, x, y) for m, (x, y) in zip(pol.multipliers, phi))
    return EndomorphismReport(lam, cls, formula, deg)
