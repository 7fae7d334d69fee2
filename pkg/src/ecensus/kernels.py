"""Backend selection for the hot loops.

The compiled module ``ecensus._ckernels`` is used when it imports and when the
inputs are small enough for 64-bit arithmetic; otherwise the pure-Python
versions run with arbitrary precision.  Set ``ECENSUS_PURE_PYTHON=1`` to force
the Python path.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("ECENSUS_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# keep every intermediate well inside signed 64-bit range
_LIMIT = 1 << 60


def _census_fits(u: int, vw: int, t: int) -> bool:
    # representation targets are <= t^2; every class entry is O((1 + |u|) t),
    # cubic terms are O((1 + |u|)^3 (1 + vw)^2 t^3)
    a = (abs(u) + 1) * (t + 1) * 4
    return a ** 3 * (vw + 1) ** 2 < _LIMIT and 4 * (t + 1) ** 2 * (vw + u * u + 1) < _LIMIT


def _oracle_fits(u: int, v: int, w: int, bound: int, mults, t: int) -> bool:
    entry = (abs(u) + abs(v) + abs(w) + 2) * bound * bound
    return entry * max(mults) * len(mults) < _LIMIT and abs(t) < _LIMIT


def _pick(fits: bool):
    return _ckernels if (_ckernels is not None and fits) else _pykernels


def represent(n: int, u: int, vw: int) -> list[tuple[int, int]]:
    fits = 4 * abs(n) * (vw + u * u + 1) < _LIMIT
    return _pick(fits).represent(n, u, vw)


def census2_classes(u, vw, m, n, t, alpha_lo, alpha_hi):
    return _pick(_census_fits(u, vw, t)).census2_classes(u, vw, m, n, t, alpha_lo, alpha_hi)


def census3_classes(u, vw, m, n, p, t, alpha_lo, alpha_hi):
    return _pick(_census_fits(u, vw, t)).census3_classes(u, vw, m, n, p, t, alpha_lo, alpha_hi)


def oracle_scan(u, v, w, g, bound, mults, t, first_lo, first_hi):
    impl = _pick(g <= 3 and _oracle_fits(u, v, w, bound, mults, t))
    return impl.oracle_scan(u, v, w, g, bound, tuple(mults), t, first_lo, first_hi)
