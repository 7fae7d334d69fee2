"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors these function by function."""
from __future__ import annotations

from functools import reduce
from itertools import product
from math import gcd, isqrt


def represent(n: int, u: int, vw: int) -> list[tuple[int, int]]:
    """All ``(x, y)`` with ``x^2 + u x y + vw y^2 == n``, sorted by ``(y, x)``."""
    if n < 0:
        return []
    if n == 0:
        return [(0, 0)]
    d = 4 * vw - u * u
    h = isqrt(4 * n // d)
    out = []
    for y in range(-h, h + 1):
        disc = 4 * n - d * y * y
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        # x = (-u y +- s) / 2
        for num in sorted({-u * y - s, -u * y + s}):
            if num % 2 == 0:
                out.append((num // 2, y))
    return out


def cubic_defect(u, vw, a, b, c, d, e, z, h, th, io) -> int:
    """``2 abc - [delta(eps+u theta)zeta + ...]``; zero exactly on valid g=3 classes."""
    rhs = (
        d * (e + u * th) * z
        + (d + u * h) * e * (z + u * io)
        + vw * ((2 * d + u * h) * th * io - (2 * e + u * th) * h * io + (2 * z + u * io) * h * th)
    )
    return 2 * a * b * c - rhs


def census2_classes(u, vw, m, n, t, alpha_lo, alpha_hi):
    out = []
    for a in range(alpha_lo, min(alpha_hi, t // m + 1)):
        for b in range((t - m * a) // n + 1):
            for c, h in represent(a * b, u, vw):
                if gcd(gcd(a, b), gcd(c, h)) == 1:
                    out.append((a, b, c, h))
    return out


def census3_classes(u, vw, m, n, p, t, alpha_lo, alpha_hi):
    cache = {}

    def reps(k):
        r = cache.get(k)
        if r is None:
            r = cache[k] = represent(k, u, vw)
        return r

    out = []
    for a in range(alpha_lo, min(alpha_hi, t // m + 1)):
        for b in range((t - m * a) // n + 1):
            rab = reps(a * b)
            for c in range((t - m * a - n * b) // p + 1):
                rbc = reps(b * c)
                rac = reps(a * c)
                for d, h in rab:
                    for z, io in rbc:
                        for e, th in rac:
                            if cubic_defect(u, vw, a, b, c, d, e, z, h, th, io):
                                continue
                            if reduce(gcd, (a, b, c, d, e, z, h, th, io)) == 1:
                                out.append((a, b, c, d, e, z, h, th, io))
    return out


def lambda_class(u, v, w, real, tau):
    """Content-normalized essential coordinates of ``lam ^ bar(lam)`` (any g)."""
    g = len(real)
    diag = [w * x * x - u * x * y + v * y * y for x, y in zip(real, tau)]
    upper = []
    minors = []
    for i in range(g):
        for j in range(i + 1, g):
            upper.append(w * real[i] * real[j] - u * real[i] * tau[j] + v * tau[i] * tau[j])
            minors.append(real[i] * tau[j] - real[j] * tau[i])
    ess = diag + upper + minors
    r = reduce(gcd, ess, 0)
    return tuple(x // r for x in ess)


def oracle_scan(u, v, w, g, bound, mults, t, first_lo, first_hi):
    """Classes of primitive vectors in ``[-bound, bound]^(2g)`` with degree <= t.

    Only vectors whose first coordinate lies in ``[first_lo, first_hi]`` are
    visited, so callers can split the box into slabs.
    """
    found = set()
    rng = range(-bound, bound + 1)
    for first in range(max(first_lo, -bound), min(first_hi, bound) + 1):
        for rest in product(rng, repeat=2 * g - 1):
            coords = (first,) + rest
            if reduce(gcd, coords, 0) != 1:
                continue
            cls = lambda_class(u, v, w, coords[:g], coords[g:])
            if sum(mi * x for mi, x in zip(mults, cls[:g])) <= t:
                found.add(cls)
    return sorted(found)
