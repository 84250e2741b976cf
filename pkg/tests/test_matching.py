"""Matching and adjoint polynomials against classical families and identities."""

import math
import random
from fractions import Fraction as F

import pytest

from pcpoly.cliquepoly import beta_algebraic
from pcpoly.exactpoly import (
    count_nonreal_roots,
    eval_at,
    mul,
    scale,
    to_fraction_poly,
    trim,
)
from pcpoly.graphs import (
    complement,
    complete_multipartite,
    edge_slots,
    graph_from_edge_mask,
    iter_all_graphs,
    line_graph,
    parse_graph,
)
from pcpoly.matching import (
    adjoint_identity_holds,
    adjoint_polynomial,
    adjoint_unsigned,
    gamma_algebraic,
    hat_graph,
    matching_counts,
    matching_polynomials,
    t_largest,
    t_squared_algebraic,
)


from oracles import chebyshev_2tn_half as _chebyshev_2tn_half
from oracles import hermite_prob as _hermite
from oracles import laguerre_scaled as _laguerre_scaled
from oracles import pad_zip as _pad


def test_matching_polynomial_families():
    for n in range(1, 7):
        mu = matching_polynomials(parse_graph(f"K{n}", "named")).mu
        assert mu == _hermite(n)
    for n in range(3, 7):
        mu = matching_polynomials(parse_graph(f"C{n}", "named")).mu
        assert mu == _chebyshev_2tn_half(n)
    for n in range(1, 4):
        # mu(K_{n,n}, x) = (-1)^n n! L_n(x^2)
        mu = matching_polynomials(complete_multipartite([n, n])).mu
        lag = _laguerre_scaled(n)
        lifted = [0] * (2 * n + 1)
        for j, c in enumerate(lag):
            lifted[2 * j] = (-1) ** n * c
        assert mu == trim(lifted)


def test_matching_path_recursion():
    # mu(P_n) = x mu(P_{n-1}) - mu(P_{n-2})
    mus = {1: (0, 1), 2: (-1, 0, 1)}
    for n in range(3, 8):
        prev = mus[n - 1]
        prev2 = mus[n - 2]
        mus[n] = trim(tuple(a - b for a, b in _pad((0,) + prev, prev2)))
        assert matching_polynomials(parse_graph(f"P{n}", "named")).mu == mus[n]


def test_matching_counts_examples():
    assert matching_counts(parse_graph("K4", "named")) == [1, 6, 3]
    assert matching_counts(parse_graph("C4", "named")) == [1, 4, 2]
    assert matching_counts(parse_graph("Kbar3", "named")) == [1]


def test_line_graph_crosscheck_runs():
    rng = random.Random(15)
    slots = edge_slots(6)
    for _ in range(40):
        g = graph_from_edge_mask(6, rng.randrange(1 << len(slots)), slots)
        matching_polynomials(g)  # identity asserted internally


def test_t_largest():
    assert t_largest(parse_graph("K2", "named")).lo == 1
    enc = t_largest(parse_graph("K4", "named"))
    # largest root of x^4 - 6x^2 + 3: sqrt(3 + sqrt 6)
    assert float(enc.midpoint) == pytest.approx((3 + 6**0.5) ** 0.5, abs=1e-9)
    with pytest.raises(ValueError):
        t_largest(parse_graph("Kbar3", "named"))


def test_t_bounds_small():
    for n in range(2, 6):
        for g in iter_all_graphs(n):
            k = g.edge_count
            if k == 0:
                continue
            t2 = t_squared_algebraic(g)
            delta = g.max_degree()
            assert t2.compare_fraction(F(4 * k, n) - 1) >= 0
            if delta > 1:
                assert t2.compare_fraction(F(delta)) >= 0
                assert t2.compare_fraction(F(4 * (delta - 1))) <= 0


def test_heilmann_lieb_small():
    for n in range(1, 6):
        for g in iter_all_graphs(n):
            assert count_nonreal_roots(matching_polynomials(g).mu) == 0


def test_chudnovsky_seymour_small():
    from pcpoly.cliquepoly import clique_type_polynomial
    from pcpoly.graphs import is_claw_free

    for n in range(1, 6):
        for g in iter_all_graphs(n):
            if is_claw_free(g):
                ind = clique_type_polynomial(g, "independence")
                assert count_nonreal_roots(ind) == 0


def test_adjoint_examples():
    assert adjoint_polynomial(parse_graph("K3", "named")) == (0, 1, -3, 1)
    assert adjoint_unsigned(parse_graph("K3", "named")) == (0, 1, 3, 1)
    for n in range(1, 6):
        kbar = parse_graph(f"Kbar{n}", "named")
        expected = [0] * (n + 1)
        expected[n] = 1
        assert adjoint_unsigned(kbar) == trim(expected)


def test_adjoint_identity_all_small():
    for n in range(1, 6):
        for g in iter_all_graphs(n):
            assert adjoint_identity_holds(g)


def test_hat_graph_spanning_subgraph_of_line_graph():
    rng = random.Random(44)
    slots = edge_slots(6)
    for _ in range(30):
        g = graph_from_edge_mask(6, rng.randrange(1 << len(slots)), slots)
        if g.edge_count == 0:
            continue
        hg = hat_graph(g)
        lg = line_graph(g)
        assert hg.n == lg.n
        assert all(hg.adj[i] & ~lg.adj[i] == 0 for i in range(hg.n))


def test_gamma_bounded_by_t_squared():
    for n in range(2, 6):
        for g in iter_all_graphs(n):
            if g.edge_count == 0:
                continue
            gamma = gamma_algebraic(g)
            t2 = t_squared_algebraic(g)
            assert gamma.compare(t2) <= 0


def test_gamma_dominates_other_roots():
    import numpy as np

    rng = random.Random(90)
    slots = edge_slots(6)
    for _ in range(40):
        g = graph_from_edge_mask(6, rng.randrange(1 << len(slots)), slots)
        if g.edge_count == 0:
            continue
        h = adjoint_polynomial(g)
        gamma = gamma_algebraic(g)
        gf = float(gamma)
        roots = np.roots([float(c) for c in reversed(h)])
        assert sum(abs(r) > gf + 1e-7 for r in roots) == 0


def test_regular_bipartite_spot_check():
    # matching counts of K_{d,d} for d <= 3: m_k = C(d,k)^2 k!
    for d in (1, 2, 3):
        counts = matching_counts(complete_multipartite([d, d]))
        assert counts == [math.comb(d, k) ** 2 * math.factorial(k) for k in range(d + 1)]
