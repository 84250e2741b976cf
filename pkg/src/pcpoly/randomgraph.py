"""Expected clique-count polynomials of binomial random graphs.

The degree-n recurrence polynomial with c_k replaced by C(n,k) p^{C(k,2)} has
all roots real, simple and positive; this module isolates them, evaluates the
printed radical closed forms for n <= 5, computes the limiting root ladder
through the factorial truncation polynomials, and stores the series data for
the two largest scaled roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import (
    AlgebraicReal,
    RatInterval,
    RootEnclosure,
    clear_denominators,
    count_nonreal_roots,
    dominant_real_root,
    eval_at,
    isolate_real_roots,
    trim,
)

DEFAULT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class RandomPC:
    """Expected recurrence polynomial of G(n, p), exact rational coefficients."""

    n: int
    p: Fraction
    poly: tuple  # ascending Fractions, degree n

    def coefficient(self, power: int) -> Fraction:
        return self.poly[power]


def pc_random(n: int, p) -> RandomPC:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * math.comb(n, k) * p ** (k * (k - 1) // 2)
    return RandomPC(n, p, tuple(coeffs))


def clique_random(n: int, p) -> tuple:
    """Expected clique polynomial, ascending rational coefficients."""
    p = Fraction(p)
    return tuple(math.comb(n, k) * p ** (k * (k - 1) // 2) for k in range(n + 1))


# ---------------------------------------------------------------------------
# closed forms for n <= 5


def _closed_form_interval(n: int, p: Fraction, eps: Fraction) -> RatInterval:
    one = RatInterval.point(1)
    pi = RatInterval.point(p)
    if n == 1:
        return one
    if n == 2:
        return one + (one - pi).sqrt(eps)
    if n == 3:
        return one + (one - pi) / 2 + (3 * (1 - pi) * (3 + pi)).sqrt(eps) / 2
    if n == 4:
        root2 = RatInterval.point(2).sqrt(eps)
        first = (one - pi) * ((2 + pi) / 2).sqrt(eps)
        inner = (one - pi) * (4 + pi + pi * pi + 2 * root2 * (2 + pi).sqrt(eps)) / 2
        return one + first + inner.sqrt(eps)
    if n == 5:
        root5 = RatInterval.point(5).sqrt(eps)
        root2 = RatInterval.point(2).sqrt(eps)
        t = (5 + 2 * pi + pi * pi).sqrt(eps)
        second = (one - pi * pi) / 4
        third = root5 * (one - pi) * t / 4
        inner = 5 * (5 + pi + pi * pi + pi * pi * pi) + (5 - pi * pi) * root5 * t
        fourth = (one - pi).sqrt(eps) * inner.sqrt(eps) / (2 * root2)
        return one + second + third + fourth
    raise ValueError("closed forms cover n <= 5 only")


def beta_random(n: int, p, width: Fraction = DEFAULT_WIDTH):
    """(enclosure of the dominant root, closed-form interval or None).

    For n <= 5 the printed radical expression is evaluated with certified
    interval arithmetic and must agree with the isolated root within width.
    """
    rpc = pc_random(n, p)
    p = rpc.p
    if p == 0:
        enc = RootEnclosure(Fraction(n), Fraction(n), 1)
    elif p == 1:
        enc = RootEnclosure(Fraction(1), Fraction(1), n)
    else:
        enc = dominant_real_root(rpc.poly, width)
    closed = None
    if n <= 5:
        closed = _closed_form_interval(n, p, min(width / 8, Fraction(1, 10**16)))
        assert closed.lo <= enc.hi + width and enc.lo - width <= closed.hi, (
            "closed form drifted from the isolated dominant root"
        )
    return enc, closed


def random_root_ladder(n: int, p, r: int, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclosure of the r-th largest root, with the full structure asserted.

    Asserts: all n roots real and simple, consecutive-root domination
    (next < p * previous), the exact middle root for odd n, and the exact
    p^(n-1)-inversion symmetry pairing the roots.
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("ladder structure needs 0 < p < 1")
    if not 1 <= r <= n:
        raise ValueError("root index out of range")
    rpc = pc_random(n, p)
    ipoly = clear_denominators(rpc.poly)
    assert count_nonreal_roots(ipoly) == 0, "roots must all be real"
    roots = isolate_real_roots(ipoly, min(width, Fraction(1, 10**14)))
    assert len(roots) == n and all(e.multiplicity == 1 for e in roots), (
        "roots must be simple"
    )
    # descending-order interlacing: beta_{i+1} < p * beta_i
    for low, high in zip(roots, roots[1:]):
        scaled_hi = p * high.hi
        assert low.hi < scaled_hi or AlgebraicReal.from_enclosure(
            ipoly, low
        ).compare_fraction(p * high.lo) < 0, "domination chain violated"
    # inversion symmetry: x^n PC(p^(n-1)/x) = (-1)^n p^C(n,2) PC(x)
    shift = p ** (n - 1)
    lhs = tuple(
        rpc.poly[n - j] * shift ** (n - j) for j in range(n + 1)
    )
    rhs = tuple((-1) ** n * p ** (n * (n - 1) // 2) * c for c in rpc.poly)
    assert trim(lhs) == trim(rhs), "p^(n-1)-inversion symmetry failed"
    if n % 2 == 1:
        mid = p ** ((n - 1) // 2)
        assert eval_at(rpc.poly, mid) == 0, "odd-n middle root must be exact"
        below = sum(1 for e in roots if e.hi < mid)
        above = sum(1 for e in roots if e.lo > mid)
        assert below == above == (n - 1) // 2
        idx = (n - 1) // 2  # ascending position of the middle root
        roots[idx] = RootEnclosure(mid, mid, 1)
    return roots[n - r]


# ---------------------------------------------------------------------------
# truncation-polynomial ladder and the limiting constant


def truncation_poly(t: int, b: Fraction) -> tuple:
    """P_t(x) = sum_{i<=t} (-1)^i x^(t-i) / (i! b^C(i,2)), ascending rationals."""
    coeffs = [Fraction(0)] * (t + 1)
    for i in range(t + 1):
        coeffs[t - i] = Fraction((-1) ** i, math.factorial(i)) / b ** (i * (i - 1) // 2)
    return tuple(coeffs)


def _positive_roots_descending(ipoly, how_many: int, width: Fraction):
    """Bracket the largest positive roots by a descending multiplicative scan."""
    brackets = []
    hi = Fraction(3, 2)
    sign_hi = _sgn(eval_at(ipoly, hi))
    if sign_hi == 0:
        hi += Fraction(1, 97)
        sign_hi = _sgn(eval_at(ipoly, hi))
    lo = hi
    floor = Fraction(1, 10**7)
    while len(brackets) < how_many and lo > floor:
        lo = lo * Fraction(63, 64)
        sign_lo = _sgn(eval_at(ipoly, lo))
        if sign_lo == 0:
            brackets.append((lo, lo))
            sign_hi = -sign_hi if sign_hi else sign_hi
            hi = lo
            continue
        if sign_lo != sign_hi:
            brackets.append((lo, hi))
            sign_hi = sign_lo
        hi = lo
    out = []
    for a, b_ in brackets[:how_many]:
        if a == b_:
            out.append(RootEnclosure(a, a, 1))
            continue
        sa = _sgn(eval_at(ipoly, a))
        while b_ - a > width:
            mid = (a + b_) / 2
            v = _sgn(eval_at(ipoly, mid))
            if v == 0:
                a = b_ = mid
                break
            if v == sa:
                a = mid
            else:
                b_ = mid
        out.append(RootEnclosure(a, b_, 1))
    return out


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def ladder_limit_roots(r: int, p, t: int, width: Fraction = Fraction(1, 10**9)) -> RootEnclosure:
    """r-th largest positive root of the degree-t truncation polynomial.

    This is the limit of the r-th scaled root of the random-graph recurrence
    polynomial as the vertex count grows.
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    if t < 2 * r:
        raise ValueError("truncation degree must be at least 2r")
    b = 1 / p
    ipoly = clear_denominators(truncation_poly(t, b))
    roots = _positive_roots_descending(ipoly, r, width)
    if len(roots) < r:
        raise ValueError(f"fewer than {r} positive roots found for t={t}")
    return roots[r - 1]


def beta0_constant(width: Fraction = Fraction(1, 10**10)) -> RootEnclosure:
    """The limiting scaled growth rate at p = 1/2, two independent ways.

    (i) dominant positive roots of the even/odd truncation polynomials, which
    sandwich the limit; (ii) the reciprocal of the unique small-modulus root
    of the entire series F(x) = sum x^m / (m! 2^C(m,2)), located by certified
    bisection with an explicit tail bound.  The enclosures must intersect.
    """
    if width < Fraction(1, 10**30):
        raise ValueError("width below the supported precision floor")
    half = Fraction(1, 2)
    lower_t, upper_t = 60, 61
    enc_even = ladder_limit_roots(1, half, lower_t, width / 8)
    enc_odd = ladder_limit_roots(1, half, upper_t, width / 8)
    method_i = (min(enc_even.lo, enc_odd.lo), max(enc_even.hi, enc_odd.hi))

    n_trunc = 40
    coeffs = [
        Fraction(1, math.factorial(m) * 2 ** (m * (m - 1) // 2)) for m in range(n_trunc + 1)
    ]
    tail = Fraction(2 ** (n_trunc + 1), math.factorial(n_trunc + 1) * 2
                    ** (n_trunc * (n_trunc + 1) // 2)) * 2
    lo_x, hi_x = Fraction(-2), Fraction(-1)
    flo = eval_at(coeffs, lo_x)
    fhi = eval_at(coeffs, hi_x)
    assert flo < -tail and fhi > tail, "bracket must certify opposite signs"
    target = width / 16
    while hi_x - lo_x > target:
        mid = (lo_x + hi_x) / 2
        v = eval_at(coeffs, mid)
        if v > tail:
            hi_x = mid
        elif v < -tail:
            lo_x = mid
        else:  # pragma: no cover - tail bound is astronomically small
            raise ArithmeticError("truncation too short to certify the sign")
    method_ii = (-1 / lo_x, -1 / hi_x)

    lo = max(method_i[0], method_ii[0])
    hi = min(method_i[1], method_ii[1])
    if lo > hi:
        raise ArithmeticError("the two constant computations disagree")
    assert hi - lo <= width
    return RootEnclosure(lo, hi, 1)


# ---------------------------------------------------------------------------
# series data for the scaled roots


@dataclass(frozen=True)
class SeriesCoeffs:
    """Stored series of the r-th scaled root in the edge probability."""

    r: int
    coeffs: tuple  # coeffs[j] multiplies p^j

    def eval(self, p) -> Fraction:
        p = Fraction(p)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc


_BETA1_COEFFS = (
    Fraction(1),
    Fraction(-1, 2),
    Fraction(-1, 4),
    Fraction(-1, 12),
    Fraction(-1, 16),
    Fraction(-1, 48),
    Fraction(-7, 288),
    Fraction(-1, 96),
    Fraction(-7, 768),
    Fraction(-49, 6912),
    Fraction(-113, 23040),
    Fraction(-17, 4608),
    Fraction(-293, 92160),
    Fraction(-737, 276480),
    Fraction(-3107, 1658880),
)

_BETA2_COEFFS = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 12),
    Fraction(-5, 36),
    Fraction(-29, 432),
    Fraction(-85, 1296),
    Fraction(-163, 7776),
    Fraction(-1387, 38880),
)


def beta_series(r: int) -> SeriesCoeffs:
    """Stored series coefficients for the largest (r=1) or second (r=2) root."""
    if r == 1:
        return SeriesCoeffs(1, _BETA1_COEFFS)
    if r == 2:
        return SeriesCoeffs(2, _BETA2_COEFFS)
    raise ValueError("series data covers r in {1, 2}")


# ---------------------------------------------------------------------------
# the clique-count generating polynomial in the edge probability


def f_n_polynomial(n: int) -> tuple:
    """f_n(z) = sum_k C(n,k) z^C(k,2), ascending integer coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    size = n * (n - 1) // 2 + 1
    coeffs = [0] * size
    for k in range(n + 1):
        coeffs[k * (k - 1) // 2] += math.comb(n, k)
    return trim(coeffs)


def f_n_divisible_by(n: int, divisor: tuple) -> bool:
    """Exact divisibility test of f_n by the given integer polynomial."""
    from .exactpoly import divmod_exact

    try:
        divmod_exact(f_n_polynomial(n), divisor)
        return True
    except ArithmeticError:
        return False


def ladder_curve_csv(r: int, t: int, grid) -> str:
    """CSV rows p,value for the r-th limiting scaled root on a probability grid."""
    lines = ["p,beta_over_n"]
    for p in grid:
        p = Fraction(p)
        enc = ladder_limit_roots(r, p, t)
        lines.append(f"{p},{float(enc.midpoint):.12f}")
    return "\n".join(lines) + "\n"
