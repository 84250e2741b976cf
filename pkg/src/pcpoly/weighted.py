"""Weighted dependence polynomials, matrix realizations, and local-lemma checks.

Vertex v carries a weight alpha_v * x^(d_v) with positive rationals alpha_v,
d_v; fractional exponents are handled by substituting s = x^(1/L) for the
common denominator L, never by transcendental evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cliquepoly import beta
from .exactpoly import (
    RootEnclosure,
    clear_denominators,
    eval_at,
    isolate_real_roots,
    trim,
)
from .graphs import Graph, complement

DEFAULT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    alpha: tuple  # positive Fractions per vertex
    d: tuple  # positive Fractions per vertex

    def __post_init__(self):
        if len(self.alpha) != self.graph.n or len(self.d) != self.graph.n:
            raise ValueError("weight vectors must match the vertex count")
        if any(a <= 0 for a in self.alpha) or any(w <= 0 for w in self.d):
            raise ValueError("weights must be positive")

    @staticmethod
    def uniform(graph: Graph, alpha=1, d=1) -> "WeightedGraph":
        a = Fraction(alpha)
        w = Fraction(d)
        return WeightedGraph(graph, (a,) * graph.n, (w,) * graph.n)


@dataclass(frozen=True)
class FractionalPoly:
    """Polynomial in s = x^(1/L); substituting x = s^L recovers the weighted sum."""

    L: int
    poly: tuple  # ascending Fractions in s

    def eval_x(self, s_value: Fraction) -> Fraction:
        return eval_at(self.poly, s_value)


def weighted_dependence(gw: WeightedGraph) -> FractionalPoly:
    """Alternating clique sum with weights, as a polynomial in s = x^(1/L)."""
    n = gw.graph.n
    L = 1
    for w in gw.d:
        L = L * w.denominator // math.gcd(L, w.denominator)
    exps = [int(w * L) for w in gw.d]
    terms: dict[int, Fraction] = {0: Fraction(1)}
    adj = gw.graph.adj
    stack = [(((1 << n) - 1), 0, Fraction(1), 0)] if n else []
    while stack:
        cand, size, weight, expo = stack.pop()
        s1 = size + 1
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            w2 = weight * gw.alpha[v]
            e2 = expo + exps[v]
            sign = -1 if s1 % 2 else 1
            terms[e2] = terms.get(e2, Fraction(0)) + sign * w2
            nxt = cand & adj[v] & ~((b << 1) - 1)
            if nxt:
                stack.append((nxt, s1, w2, e2))
    top = max(terms)
    coeffs = [Fraction(0)] * (top + 1)
    for e, c in terms.items():
        coeffs[e] = c
    return FractionalPoly(L, trim(coeffs))


def matrix_to_weighted_graph(matrix: Sequence[Sequence[Fraction]]) -> WeightedGraph:
    """Vertices are the simple directed cycles of the matrix digraph.

    Two cycles commute iff vertex-disjoint; each carries the product of its
    entries and its length.  The weighted alternating clique sum then equals
    det(I - x M), which is verified exactly before returning.
    """
    m = len(matrix)
    if m > 8:
        raise ValueError("cycle enumeration capped at order 8")
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(r) != m for r in rows):
        raise ValueError("matrix must be square")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("matrix entries must be nonnegative")
    cycles = []  # (vertex mask, length, weight)
    for start in range(m):
        stack = [(start, start, 1 << start, Fraction(1))]
        while stack:
            s, cur, mask, weight = stack.pop()
            for nxt in range(s, m):
                w = rows[cur][nxt]
                if w == 0:
                    continue
                if nxt == s:
                    cycles.append((mask, mask.bit_count(), weight * w))
                elif not mask >> nxt & 1:
                    stack.append((s, nxt, mask | (1 << nxt), weight * w))
    k = len(cycles)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if not cycles[i][0] & cycles[j][0]:
                edges.append((i, j))
    if k == 0:
        graph = Graph(1, (0,))
        gw = WeightedGraph(graph, (Fraction(1),), (Fraction(1),))
        dep = FractionalPoly(1, (Fraction(1),))
    else:
        adj = [0] * k
        for i, j in edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        graph = Graph(k, tuple(adj))
        gw = WeightedGraph(
            graph,
            tuple(Fraction(c[2]) for c in cycles),
            tuple(Fraction(c[1]) for c in cycles),
        )
        dep = weighted_dependence(gw)
    det = _det_identity_minus_x(rows)
    lhs = dep.poly if k else (Fraction(1),)
    assert trim(lhs) == trim(det), "weighted sum must reproduce det(I - xM)"
    return gw


def _det_identity_minus_x(rows) -> tuple:
    """det(I - x M) by fraction-free expansion over polynomial entries."""
    m = len(rows)
    # polynomial entries: I - xM
    ent = [[(Fraction(1 if i == j else 0), -rows[i][j]) for j in range(m)] for i in range(m)]

    def pmul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def det_expand(active_rows, active_cols):
        if not active_rows:
            return [Fraction(1)]
        r = active_rows[0]
        acc = [Fraction(0)]
        for idx, c in enumerate(active_cols):
            e = ent[r][c]
            if all(x == 0 for x in e):
                continue
            minor = det_expand(active_rows[1:], active_cols[:idx] + active_cols[idx + 1:])
            term = pmul(list(e), minor)
            if idx % 2:
                term = [-x for x in term]
            if len(term) > len(acc):
                acc, term = term, acc
            for i, x in enumerate(term):
                acc[i] += x
        return acc

    return trim(det_expand(list(range(m)), list(range(m))))


def mcmullen_growth(gw: WeightedGraph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Growth rate: reciprocal of the smallest positive root of the weighted sum.

    Works on the s = x^(1/L) scale and raises the enclosure back via x = s^L.
    """
    dep = weighted_dependence(gw)
    s_width = Fraction(1, 10**6)
    while True:
        # the constant term is 1, so 0 is never a root and signs decide
        roots = [e for e in isolate_real_roots(dep.poly, s_width) if e.hi > 0]
        if any(e.lo <= 0 for e in roots):
            s_width /= 2**8
            continue
        if not roots:
            raise ArithmeticError("weighted sum has no positive root")
        smallest = roots[0]
        # x = s^L is monotone on s > 0
        lo_x = smallest.lo**dep.L
        hi_x = smallest.hi**dep.L
        lam_lo = 1 / hi_x
        lam_hi = 1 / lo_x
        if lam_hi - lam_lo <= width:
            return RootEnclosure(lam_lo, lam_hi, smallest.multiplicity)
        s_width /= 2**8


def lll_threshold(g: Graph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Exact uniform-probability threshold of the dependency graph: 1/beta of
    the complement."""
    s_width = width / 4
    while True:
        enc = beta(complement(g), s_width)
        lo = 1 / enc.hi
        hi = 1 / enc.lo
        if hi - lo <= width:
            return RootEnclosure(lo, hi, enc.multiplicity)
        s_width /= 2**4


@dataclass(frozen=True)
class LLLResult:
    feasible: bool
    bound: Fraction | None = None  # P(no event) lower bound when feasible
    witness_lo: Fraction | None = None
    witness_hi: Fraction | None = None


def lll_check(g: Graph, probs) -> LLLResult:
    """Certified local-lemma check for per-event probabilities.

    Builds the weighted independent-set sum of the dependency graph (weights
    p_i, unit exponents, complement convention) and certifies positivity on
    [0, 1] by root isolation.  A root at t = 1 is reported as a witness.
    """
    probs = [Fraction(p) for p in probs]
    if len(probs) != g.n:
        raise ValueError("one probability per vertex required")
    if any(p < 0 or p >= 1 for p in probs):
        raise ValueError("probabilities must lie in [0, 1)")
    keep = [v for v in range(g.n) if probs[v] > 0]
    if not keep:
        return LLLResult(True, Fraction(1))
    sub = complement(g)
    from .graphs import induced_subgraph

    comp_sub = induced_subgraph(sub, keep)  # complement graph on surviving events
    gw = WeightedGraph(
        comp_sub,
        tuple(probs[v] for v in keep),
        (Fraction(1),) * len(keep),
    )
    iw = weighted_dependence(gw)  # polynomial in t (L = 1)
    ipoly = clear_denominators(iw.poly)
    from .exactpoly import real_root_count

    # I_w(0) = 1, so positivity on [0, 1] fails iff a root lands in (0, 1]
    if real_root_count(ipoly, (Fraction(0), Fraction(1))) == 0:
        bound = eval_at(iw.poly, Fraction(1))
        assert bound > 0
        return LLLResult(True, bound)
    roots = [
        e
        for e in isolate_real_roots(ipoly, Fraction(1, 10**15))
        if e.hi > 0 and e.lo <= 1
    ]
    w = roots[0]
    return LLLResult(False, None, max(w.lo, Fraction(0)), min(w.hi, Fraction(1)))
