"""Brute-force ground truth from primitive lattice vectors in a coordinate box."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from ._parallel import map_strata, resolve_threads, split_range
from .cm import CmParams, Polarization
from .census2 import check_class2, class_from_lambda2, enumerate2, reconstruct2
from .census3 import check_class3, class_from_lambda3, enumerate3, reconstruct3
from .errors import CensusError, DimensionMismatch
from .exterior import is_elliptic_basis

_BY_G = {
    2: (check_class2, class_from_lambda2, enumerate2, reconstruct2),
    3: (check_class3, class_from_lambda3, enumerate3, reconstruct3),
}


def _dispatch(g: int):
    try:
        return _BY_G[g]
    except KeyError:
        raise DimensionMismatch(f"g must be 2 or 3, got {g}") from None


def oracle_enumerate(cm: CmParams, g: int, pol: Polarization, t: int, box: int,
                     *, threads: int | None = None) -> set[tuple[int, ...]]:
    """Classes of all primitive ``lam`` in ``[-box, box]^(2g)`` with degree <= t."""
    _dispatch(g)
    if pol.g != g:
        raise DimensionMismatch(f"polarization has {pol.g} multipliers, expected {g}")
    if box < 1:
        raise ValueError(f"box radius must be >= 1, got {box}")
    nthreads = resolve_threads(threads)
    found = map_strata(
        lambda lo, hi: kernels.oracle_scan(cm.u, cm.v, cm.w, g, box, pol.multipliers, t, lo, hi - 1),
        split_range(-box, box + 1, nthreads), nthreads,
    )
    return set(found)


@dataclass
class OracleReport:
    cm: CmParams
    g: int
    pol: Polarization
    t: int
    box: int
    oracle_classes: set = field(repr=False)
    census_classes: set = field(repr=False)
    # oracle classes the census lacks, or that fail the class equations
    missing_from_census: list = field(default_factory=list)
    # census classes with no generator in the box (informational)
    extra_in_census_unwitnessed: list = field(default_factory=list)
    # census classes whose reconstruction does not round-trip
    reconstruction_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_from_census and not self.reconstruction_failures

    def as_dict(self) -> dict:
        return {
            "params": {
                "g": self.g,
                "cm": {"u": self.cm.u, "v": self.cm.v, "w": self.cm.w, "disc": self.cm.disc},
                "pol": list(self.pol.multipliers),
            },
            "t": self.t,
            "box": self.box,
            "oracle_count": len(self.oracle_classes),
            "census_count": len(self.census_classes),
            "missing_from_census": [list(c) for c in self.missing_from_census],
            "extra_in_census_unwitnessed": [list(c) for c in self.extra_in_census_unwitnessed],
            "reconstruction_failures": [list(c) for c in self.reconstruction_failures],
            "ok": self.ok,
        }


def oracle_compare(cm: CmParams, g: int, pol: Polarization, t: int, box: int,
                   *, threads: int | None = None) -> OracleReport:
    check, from_lambda, enumerate_, reconstruct = _dispatch(g)
    oracle = oracle_enumerate(cm, g, pol, t, box, threads=threads)
    census = {tuple(r.coords) for r in enumerate_(cm, pol, t, threads=threads)}
    report = OracleReport(cm, g, pol, t, box, oracle, census)
    report.missing_from_census = sorted(c for c in oracle if c not in census or not check(cm, c))
    for c in sorted(census):
        try:
            lam, mu = reconstruct(cm, c)
            good = tuple(from_lambda(cm, lam)) == c and is_elliptic_basis(cm, lam, mu)
        except CensusError:
            good = False
        if not good:
            report.reconstruction_failures.append(c)
        elif c not in oracle:
            report.extra_in_census_unwitnessed.append(c)
    return report
