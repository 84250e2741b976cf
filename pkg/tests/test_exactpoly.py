"""Root counting, isolation, and exact algebraic comparisons."""

import random
from fractions import Fraction as F

import pytest

from pcpoly.exactpoly import (
    AlgebraicReal,
    QuadSurd,
    RatInterval,
    count_nonreal_roots,
    degree,
    descartes_no_root_above,
    dominant_real_root,
    eval_at,
    is_root_surd,
    isolate_real_roots,
    mul,
    real_root_count,
    shift_poly,
    sqrt_interval,
    trim,
)


def test_real_root_count_examples():
    assert real_root_count((-2, 0, 1), (F(0), F(2))) == 1
    assert real_root_count((-1, 3, -3, 1), (F(0), F(2))) == 1  # triple root, distinct
    assert real_root_count((1, 0, 1), (F(-10), F(10))) == 0


def test_real_root_count_halfopen_endpoints():
    p = (-2, 1)  # x - 2
    assert real_root_count(p, (F(0), F(2))) == 1  # right endpoint included
    assert real_root_count(p, (F(2), F(3))) == 0  # left endpoint excluded


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        real_root_count((), (F(0), F(1)))
    with pytest.raises(ValueError):
        isolate_real_roots((0,))


def test_isolate_multiplicities():
    p = mul((1, -2, 1), (-3, 1))  # (x-1)^2 (x-3)
    encs = isolate_real_roots(p)
    assert [(e.lo, e.hi, e.multiplicity) for e in encs] == [
        (F(1), F(1), 2),
        (F(3), F(3), 1),
    ]


def test_isolate_pc_k23():
    # (x-2)(x-3)
    encs = isolate_real_roots((6, -5, 1))
    assert [(e.lo, e.multiplicity) for e in encs] == [(F(2), 1), (F(3), 1)]


def _bisect_oracle(p, lo, hi, iters=80):
    f = lambda x: eval_at(tuple(float(c) for c in p), x)
    for _ in range(iters):
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def test_cuberoot_enclosure_matches_bisection():
    enc = dominant_real_root((-2, 0, 0, 1), F(1, 10**12))
    assert enc.width <= F(1, 10**12)
    oracle = _bisect_oracle((-2, 0, 0, 1), 1.0, 2.0)
    assert abs(float(enc.midpoint) - oracle) < 1e-9


def test_dominant_root_exact_hits():
    assert dominant_real_root((-5, 1)).lo == 5
    p = mul(mul((-1, 1), (-1, 1)), mul((-1, 1), (-1, 1)))  # (x-1)^4
    enc = dominant_real_root(p)
    assert enc.lo == enc.hi == 1 and enc.multiplicity == 4


def test_count_nonreal():
    assert count_nonreal_roots((-1, 3, -3, 1)) == 0
    assert count_nonreal_roots((1, 0, 1)) == 2
    assert count_nonreal_roots((1, -4, 6, -100, 1)) == 2


def test_random_total_count_invariant():
    rng = random.Random(20240809)
    for _ in range(1000):
        deg = rng.randint(1, 10)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        p = trim(coeffs)
        if degree(p) < 1:
            continue
        encs = isolate_real_roots(p, F(1, 10**6))
        for e1, e2 in zip(encs, encs[1:]):
            assert e1.hi < e2.lo or e1.is_exact() or e2.is_exact()
        assert sum(e.multiplicity for e in encs) + count_nonreal_roots(p) == degree(p)


def test_enclosures_certified_by_sign_change():
    from pcpoly.exactpoly import squarefree_part

    rng = random.Random(55)
    for _ in range(200):
        deg = rng.randint(2, 8)
        p = trim([rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 6)])
        if degree(p) < 2:
            continue
        sq = squarefree_part(p)
        for enc in isolate_real_roots(p, F(1, 10**4)):
            if enc.is_exact():
                assert eval_at(p, enc.lo) == 0
            else:
                assert eval_at(sq, enc.lo) * eval_at(sq, enc.hi) < 0


def test_random_dominant_vs_float_oracle():
    rng = random.Random(7)
    for _ in range(50):
        roots = sorted(rng.sample(range(-30, 30), rng.randint(1, 5)))
        p = (1,)
        for r in roots:
            p = mul(p, (-r, 1))
        enc = dominant_real_root(p, F(1, 10**9))
        assert enc.lo <= roots[-1] <= enc.hi


def test_algebraic_compare():
    sqrt2 = AlgebraicReal.dominant_root((-2, 0, 1))
    assert sqrt2.compare_fraction(F(3, 2)) < 0
    assert sqrt2.compare_fraction(F(7, 5)) > 0
    other = AlgebraicReal.dominant_root((-4, 0, 0, 0, 1))  # x^4 = 4
    assert sqrt2.compare(other) == 0
    bigger = AlgebraicReal.dominant_root((-3, 0, 1))
    assert sqrt2.compare(bigger) < 0
    assert AlgebraicReal.from_rational(F(2)).compare(sqrt2) > 0


def test_quad_surd():
    s = QuadSurd.make(5, 5, 2)  # (5 + sqrt 5)/2
    assert is_root_surd((5, -5, 1), s)
    assert s.compare_fraction(F(36, 10)) > 0
    assert s.compare_fraction(F(37, 10)) < 0
    alg = s.to_algebraic()
    assert alg.compare(AlgebraicReal.dominant_root((5, -5, 1))) == 0
    rationalized = QuadSurd.make(1, 4, 2)  # (1 + 2)/2
    assert rationalized.is_rational() and rationalized.as_fraction() == F(3, 2)


def test_descartes_shift_filter():
    p = (-2, 0, 1)  # x^2 - 2
    assert descartes_no_root_above(p, F(2))
    assert not descartes_no_root_above(p, F(14, 10))
    assert not descartes_no_root_above(p, F(1414213562373095, 10**15))


def test_shift_poly():
    assert shift_poly((0, 0, 1), 1) == (F(1), F(2), F(1))
    p = (3, -1, 4, 2)
    for t in (F(1, 3), F(-2, 7)):
        shifted = shift_poly(p, t)
        assert eval_at(shifted, F(5, 11)) == eval_at(p, F(5, 11) + t)


def test_sqrt_interval_and_ratinterval():
    lo, hi = sqrt_interval(F(2), F(1, 10**12))
    assert lo * lo <= 2 <= hi * hi and hi - lo <= F(1, 10**12)
    assert sqrt_interval(F(9, 4), F(1, 10))[0] == F(3, 2)
    iv = (RatInterval.point(2).sqrt() + 1) * 2
    assert float(iv.lo) == pytest.approx(2 * (1 + 2**0.5), abs=1e-9)
    assert F(2) in RatInterval.point(2)
