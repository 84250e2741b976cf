"""Independent classical-polynomial generators used as test oracles."""

import math
from fractions import Fraction as F

from pcpoly.exactpoly import scale, trim


def pad_zip(a, b):
    m = max(len(a), len(b))
    return zip(tuple(a) + (0,) * (m - len(a)), tuple(b) + (0,) * (m - len(b)))


def hermite_prob(n):
    """Probabilists' Hermite polynomial, ascending integer coefficients."""
    polys = [(1,), (0, 1)]
    for k in range(1, n):
        x_times = (0,) + polys[k]
        polys.append(trim(tuple(a - b for a, b in pad_zip(x_times, scale(polys[k - 1], k)))))
    return polys[n] if n >= 1 else polys[0]


def chebyshev_2tn_half(n):
    """2 T_n(x/2), ascending integer coefficients."""
    a, b = (2,), (0, 1)
    for _ in range(n - 1):
        a, b = b, trim(tuple(x - y for x, y in pad_zip((0,) + tuple(b), a)))
    return b if n >= 1 else a


def laguerre_scaled(n):
    """n! L_n(y), ascending integer coefficients in y."""
    a, b = (F(1),), (F(1), F(-1))
    if n == 0:
        lag = a
    else:
        for k in range(1, n):
            term = tuple(x - y for x, y in pad_zip(scale(b, F(2 * k + 1)), (0,) + tuple(b)))
            nxt = tuple((x - y) / (k + 1) for x, y in pad_zip(term, scale(a, F(k))))
            a, b = b, trim(nxt)
        lag = b
    return trim(tuple(int(c * math.factorial(n)) for c in lag))
