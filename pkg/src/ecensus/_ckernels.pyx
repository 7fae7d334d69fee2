# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the loops in ``_pykernels``.

Arithmetic is in 64-bit integers.  ``ecensus.kernels`` only routes a call
here after checking that every intermediate fits; otherwise the pure-Python
path (arbitrary precision) is used.
"""
from libc.math cimport sqrt
from libcpp.vector cimport vector


cdef inline long long _isqrt(long long n) noexcept nogil:
    cdef long long r
    if n < 0:
        return -1
    r = <long long>sqrt(<double>n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long tmp
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        tmp = a % b
        a = b
        b = tmp
    return a


cdef void _represent(long long n, long long u, long long vw, vector[long long]& out) noexcept nogil:
    # appends x, y pairs with x^2 + u x y + vw y^2 == n, in (y, x) order
    cdef long long d, h, y, disc, s, lo, hi
    if n < 0:
        return
    if n == 0:
        out.push_back(0)
        out.push_back(0)
        return
    d = 4 * vw - u * u
    h = _isqrt((4 * n) / d)
    for y in range(-h, h + 1):
        disc = 4 * n - d * y * y
        if disc < 0:
            continue
        s = _isqrt(disc)
        if s * s != disc:
            continue
        lo = -u * y - s
        hi = -u * y + s
        if (lo & 1) == 0:
            out.push_back(lo / 2)
            out.push_back(y)
        if s != 0 and (hi & 1) == 0:
            out.push_back(hi / 2)
            out.push_back(y)


def represent(long long n, long long u, long long vw):
    cdef vector[long long] out
    with nogil:
        _represent(n, u, vw, out)
    return [(out[i], out[i + 1]) for i in range(0, out.size(), 2)]


def census2_classes(long long u, long long vw, long long m, long long n, long long t,
                    long long alpha_lo, long long alpha_hi):
    cdef vector[long long] reps
    cdef vector[long long] out
    cdef long long a, b, c, h, amax
    cdef size_t k
    amax = t / m + 1
    if alpha_hi < amax:
        amax = alpha_hi
    with nogil:
        for a in range(alpha_lo, amax):
            for b in range((t - m * a) / n + 1):
                reps.clear()
                _represent(a * b, u, vw, reps)
                k = 0
                while k < reps.size():
                    c = reps[k]
                    h = reps[k + 1]
                    if _gcd(_gcd(a, b), _gcd(c, h)) == 1:
                        out.push_back(a)
                        out.push_back(b)
                        out.push_back(c)
                        out.push_back(h)
                    k += 2
    cdef list flat = out
    return [tuple(flat[i:i + 4]) for i in range(0, len(flat), 4)]


cdef inline long long _cubic_defect(long long u, long long vw, long long a, long long b, long long c,
                                    long long d, long long e, long long z, long long h,
                                    long long th, long long io) noexcept nogil:
    cdef long long rhs
    rhs = (d * (e + u * th) * z
           + (d + u * h) * e * (z + u * io)
           + vw * ((2 * d + u * h) * th * io - (2 * e + u * th) * h * io + (2 * z + u * io) * h * th))
    return 2 * a * b * c - rhs


def census3_classes(long long u, long long vw, long long m, long long n, long long p, long long t,
                    long long alpha_lo, long long alpha_hi):
    cdef vector[long long] rab, rbc, rac
    cdef vector[long long] out
    cdef long long a, b, c, amax, g
    cdef size_t i, j, k
    amax = t / m + 1
    if alpha_hi < amax:
        amax = alpha_hi
    with nogil:
        for a in range(alpha_lo, amax):
            for b in range((t - m * a) / n + 1):
                rab.clear()
                _represent(a * b, u, vw, rab)
                for c in range((t - m * a - n * b) / p + 1):
                    rbc.clear()
                    rac.clear()
                    _represent(b * c, u, vw, rbc)
                    _represent(a * c, u, vw, rac)
                    i = 0
                    while i < rab.size():
                        j = 0
                        while j < rbc.size():
                            k = 0
                            while k < rac.size():
                                if _cubic_defect(u, vw, a, b, c, rab[i], rac[k], rbc[j],
                                                 rab[i + 1], rac[k + 1], rbc[j + 1]) == 0:
                                    g = _gcd(_gcd(_gcd(a, b), _gcd(c, rab[i])),
                                             _gcd(_gcd(rac[k], rbc[j]),
                                                  _gcd(_gcd(rab[i + 1], rac[k + 1]), rbc[j + 1])))
                                    if g == 1:
                                        out.push_back(a)
                                        out.push_back(b)
                                        out.push_back(c)
                                        out.push_back(rab[i])
                                        out.push_back(rac[k])
                                        out.push_back(rbc[j])
                                        out.push_back(rab[i + 1])
                                        out.push_back(rac[k + 1])
                                        out.push_back(rbc[j + 1])
                                k += 2
                            j += 2
                        i += 2
    cdef list flat = out
    return [tuple(flat[i:i + 9]) for i in range(0, len(flat), 9)]


def oracle_scan(long long u, long long v, long long w, int g, long long bound, mults,
                long long t, long long first_lo, long long first_hi):
    cdef long long x[6]
    cdef long long mm[3]
    cdef long long ess[9]
    cdef vector[long long] out
    cdef int nc = 2 * g
    cdef int ne = g + g * (g - 1)
    cdef int i, j, q, pos
    cdef long long r, deg, lo, hi
    if g < 1 or g > 3:
        raise ValueError("oracle_scan supports g <= 3")
    for i in range(g):
        mm[i] = mults[i]
    lo = first_lo if first_lo > -bound else -bound
    hi = first_hi if first_hi < bound else bound
    if lo > hi:
        return []
    with nogil:
        x[0] = lo
        for i in range(1, nc):
            x[i] = -bound
        while True:
            r = 0
            for i in range(nc):
                r = _gcd(r, x[i])
            if r == 1:
                for i in range(g):
                    ess[i] = w * x[i] * x[i] - u * x[i] * x[g + i] + v * x[g + i] * x[g + i]
                q = g
                for i in range(g):
                    for j in range(i + 1, g):
                        ess[q] = w * x[i] * x[j] - u * x[i] * x[g + j] + v * x[g + i] * x[g + j]
                        ess[q + g * (g - 1) // 2] = x[i] * x[g + j] - x[j] * x[g + i]
                        q += 1
                r = 0
                for i in range(ne):
                    r = _gcd(r, ess[i])
                deg = 0
                for i in range(g):
                    deg += mm[i] * (ess[i] / r)
                if deg <= t:
                    for i in range(ne):
                        out.push_back(ess[i] / r)
            # odometer step
            pos = nc - 1
            while pos >= 0:
                if (pos == 0 and x[0] < hi) or (pos > 0 and x[pos] < bound):
                    x[pos] += 1
                    break
                x[pos] = -bound
                pos -= 1
            if pos < 0:
                break
    cdef list flat = out
    return sorted({tuple(flat[i:i + ne]) for i in range(0, len(flat), ne)})
