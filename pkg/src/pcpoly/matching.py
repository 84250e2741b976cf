"""Matching and adjoint polynomials with their structural cross-checks.

The matching-generating polynomial is computed by subset dynamic programming
and cross-checked against the independence polynomial of the line graph; the
adjoint polynomial counts partitions of the vertex set into cliques and is
checked exactly against the independence polynomial of the derived
edge-conflict graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cliquepoly import beta_algebraic, independence_polynomial
from .exactpoly import (
    AlgebraicReal,
    RootEnclosure,
    dominant_real_root,
    trim,
)
from .graphs import Graph, complement, line_graph

DEFAULT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class MatchingPair:
    """Signed matching polynomial mu (degree n) and generating polynomial M."""

    mu: tuple  # ascending integer coefficients, degree n
    generating: tuple  # m_0, m_1, ..., m_nu

    @property
    def matching_number(self) -> int:
        return len(self.generating) - 1


_PACK_SHIFT = 24  # per-size limb width; counts stay below 2^24 for n <= 12


def matching_counts_from_adj(adj, n: int) -> list[int]:
    """Matchings by size via subset DP, coefficients packed into one integer.

    f[mask] encodes the generating polynomial of the induced subgraph with
    the size-k count in limb k; adding a matched edge is a single shift.
    """
    size = 1 << n
    f = [0] * size
    f[0] = 1
    shift = _PACK_SHIFT
    for mask in range(1, size):
        b = mask & -mask
        rest = mask ^ b
        acc = f[rest]
        m = adj[b.bit_length() - 1] & rest
        while m:
            ub = m & -m
            m ^= ub
            acc += f[rest ^ ub] << shift
        f[mask] = acc
    packed = f[size - 1]
    counts = []
    while packed:
        counts.append(packed & ((1 << shift) - 1))
        packed >>= shift
    return counts or [1]


def matching_counts(g: Graph) -> list[int]:
    """Matchings by size, exact; packed DP for small n, tuple DP beyond."""
    if g.n <= 12:
        return matching_counts_from_adj(g.adj, g.n)
    size = 1 << g.n
    f: list = [None] * size
    f[0] = (1,)
    for mask in range(1, size):
        b = mask & -mask
        rest = mask ^ b
        acc = list(f[rest]) + [0]
        m = g.adj[b.bit_length() - 1] & rest
        while m:
            ub = m & -m
            m ^= ub
            for k, c in enumerate(f[rest ^ ub]):
                acc[k + 1] += c
        while len(acc) > 1 and acc[-1] == 0:
            acc.pop()
        f[mask] = tuple(acc)
    return list(f[size - 1])


def matching_polynomials(g: Graph) -> MatchingPair:
    """Both matching polynomials; the line-graph identity is asserted."""
    counts = matching_counts(g)
    n = g.n
    mu = [0] * (n + 1)
    for k, c in enumerate(counts):
        mu[n - 2 * k] = (-1) ** k * c
    if g.edge_count:
        line_ind = independence_polynomial(line_graph(g))
        assert tuple(counts) == line_ind, "matching counts must match L(G) independence"
    return MatchingPair(trim(mu), tuple(counts))


def matching_even_part(pair: MatchingPair) -> tuple:
    """g with mu(x) = x^(n mod 2) g(x^2); real-rootedness of mu reduces to g."""
    mu = pair.mu
    n = len(mu) - 1
    parity = n % 2
    return trim(mu[parity::2])


def t_largest(g: Graph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Largest root of the signed matching polynomial.

    Its square is the growth rate of the complement of the line graph, which
    is asserted by enclosure overlap.
    """
    if g.edge_count == 0:
        raise ValueError("needs at least one edge")
    pair = matching_polynomials(g)
    enc = dominant_real_root(pair.mu, width)
    lo2, hi2 = sorted((enc.lo * enc.lo, enc.hi * enc.hi))
    target = beta_algebraic(complement(line_graph(g)))
    assert target.compare_fraction(lo2) >= 0 and target.compare_fraction(hi2) <= 0, (
        "t^2 must be the complement line-graph growth rate"
    )
    return enc


def t_squared_algebraic(g: Graph) -> AlgebraicReal:
    """t(G)^2 exactly, as the dominant root of the even part."""
    pair = matching_polynomials(g)
    even = matching_even_part(pair)
    # even part has sign (-1)^nu leading; dominant root of mu squared is its
    # largest root
    return AlgebraicReal.dominant_root(even)


# ---------------------------------------------------------------------------
# adjoint polynomial


def clique_partition_counts(g: Graph) -> list[int]:
    """a_k = number of partitions of V into exactly k nonempty cliques."""
    n = g.n
    counts = [0] * (n + 1)

    def rec(remaining: int, used: int):
        if remaining == 0:
            counts[used] += 1
            return
        v_bit = remaining & -remaining
        v = v_bit.bit_length() - 1
        rest = remaining ^ v_bit
        # enumerate cliques containing v inside `remaining`
        stack = [(v_bit, g.adj[v] & rest)]
        while stack:
            clique_mask, cand = stack.pop()
            rec(remaining & ~clique_mask, used + 1)
            m = cand
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if (g.adj[u] & clique_mask) == clique_mask:
                    stack.append((clique_mask | b, cand & g.adj[u] & ~((b << 1) - 1)))

    rec((1 << n) - 1, 0)
    return counts


def adjoint_polynomial(g: Graph) -> tuple:
    """Signed adjoint polynomial sum (-1)^(n-k) a_k x^k, ascending integers."""
    counts = clique_partition_counts(g)
    n = g.n
    return trim((-1) ** (n - k) * counts[k] for k in range(n + 1))


def adjoint_unsigned(g: Graph) -> tuple:
    return trim(clique_partition_counts(g))


def hat_graph(g: Graph) -> Graph:
    """Edge-conflict graph: vertices are edges; two edges clash unless they
    are disjoint or share their smaller endpoint with adjacent upper ends.

    Compatible pairs are exactly those that can appear together in the
    minimum-rooted star encoding of a partition into cliques, which makes the
    independent sets of the result count clique partitions.
    """
    edges = g.edges()
    m = len(edges)
    if m > 64:
        raise ValueError("edge-conflict graph capped at 64 edges")
    adj = [0] * max(m, 1)
    for a in range(m):
        i, j = edges[a]
        for b in range(a + 1, m):
            k, l = edges[b]
            shared = len({i, j} & {k, l}) > 0
            if not shared:
                continue
            if i == k and g.has_edge(j, l):
                continue  # common smaller endpoint, adjacent upper ends
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    if m == 0:
        raise ValueError("graph has no edges")
    return Graph(m, tuple(adj))


def adjoint_identity_holds(g: Graph) -> bool:
    """Exact check: unsigned adjoint = x^n I(hat, 1/x) coefficientwise."""
    unsigned = adjoint_unsigned(g)
    n = g.n
    if g.edge_count == 0:
        expected = [0] * (n + 1)
        expected[n] = 1
        return unsigned == trim(expected)
    hat = hat_graph(g)
    ind = independence_polynomial(hat)
    # x^n I(1/x): coefficient of x^(n - j) is ind[j]
    lifted = [0] * (n + 1)
    for j, c in enumerate(ind):
        lifted[n - j] = c
    return unsigned == trim(lifted)


def gamma_adjoint(g: Graph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Dominant positive root of the adjoint polynomial."""
    unsigned = adjoint_unsigned(g)
    # roots of the signed polynomial are the negated roots of the unsigned one;
    # work with the signed version directly
    return dominant_real_root(adjoint_polynomial(g), width)


def gamma_algebraic(g: Graph) -> AlgebraicReal:
    return AlgebraicReal.dominant_root(adjoint_polynomial(g))
