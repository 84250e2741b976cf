"""Clique counting and the unweighted clique-type polynomials.

Provides the clique profile, the four clique-type polynomials, the monoid
growth rate beta(G) as a certified enclosure, the hard-core occupancy
fraction, I(G, -1) with the decycling number, and the adjacency spectral
radius, all in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactpoly import (
    AlgebraicReal,
    RootEnclosure,
    derivative,
    dominant_real_root,
    eval_at,
    to_fraction_poly,
    trim,
)
from .graphs import Graph, bits, complement

DEFAULT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class CliqueProfile:
    """Counts (c_0=1, c_1, ..., c_omega) of complete subgraphs by size."""

    counts: tuple[int, ...]

    @property
    def clique_number(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if k < len(self.counts) else 0

    def total(self) -> int:
        """Number of all cliques, the empty one included."""
        return sum(self.counts)


def clique_counts(adj: tuple[int, ...], n: int) -> list[int]:
    """Clique counts by size via bitset recursion; each clique visited once."""
    counts = [0] * (n + 1)
    counts[0] = 1
    if n:
        stack = [((1 << n) - 1, 0)]
    else:
        stack = []
    while stack:
        cand, size = stack.pop()
        s1 = size + 1
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            counts[s1] += 1
            nxt = cand & adj[v] & ~((b << 1) - 1)
            if nxt:
                stack.append((nxt, s1))
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def clique_profile(g: Graph) -> CliqueProfile:
    return CliqueProfile(tuple(clique_counts(g.adj, g.n)))


def dependence_poly_from_counts(counts) -> tuple:
    """D(G, x) = sum (-1)^k c_k x^k, ascending integer coefficients."""
    return trim((-1) ** k * c for k, c in enumerate(counts))


def pc_poly_from_counts(counts) -> tuple:
    """Characteristic polynomial of the word-count recurrence, ascending."""
    w = len(counts) - 1
    return tuple((-1) ** (w - j) * counts[w - j] for j in range(w + 1))


def clique_type_polynomial(g: Graph, kind: str) -> tuple:
    """One of the clique-type polynomials as an ascending integer tuple.

    kind: "pc" | "dependence" | "clique" | "independence".  The independence
    polynomial is the clique polynomial of the complement.
    """
    if kind == "independence":
        return clique_type_polynomial(complement(g), "clique")
    counts = clique_counts(g.adj, g.n)
    if kind == "pc":
        return pc_poly_from_counts(counts)
    if kind == "dependence":
        return dependence_poly_from_counts(counts)
    if kind == "clique":
        return tuple(counts)
    raise ValueError(f"unknown polynomial kind {kind!r}")


def pc_polynomial(g: Graph) -> tuple:
    return pc_poly_from_counts(clique_counts(g.adj, g.n))


def beta(g: Graph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclosure of the dominant real root of the recurrence polynomial."""
    return dominant_real_root(pc_polynomial(g), width)


def beta_algebraic(g: Graph) -> AlgebraicReal:
    """beta(G) as an exactly comparable algebraic number."""
    pc = pc_polynomial(g)
    enc = dominant_real_root(pc, Fraction(1, 2**24))
    return AlgebraicReal.from_enclosure(pc, enc)


def compare_beta(g1: Graph, g2: Graph) -> str:
    """Exact three-way comparison of two growth rates.

    Refines both enclosures until disjoint; ties are settled by a shared
    common factor of the defining polynomials, so "equal" is certified and
    never a numerically-equal guess.
    """
    c = beta_algebraic(g1).compare(beta_algebraic(g2))
    return "less" if c < 0 else "greater" if c > 0 else "equal"


def independence_polynomial(g: Graph) -> tuple:
    return clique_type_polynomial(g, "independence")


def occupancy_fraction(g: Graph, x) -> Fraction:
    """Expected fraction of vertices in a hard-core independent set at fugacity x."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("fugacity must be nonnegative")
    ind = to_fraction_poly(independence_polynomial(g))
    num = x * eval_at(derivative(ind), x)
    den = g.n * eval_at(ind, x)
    return num / den


def independence_at_minus_one(g: Graph) -> tuple[int, int]:
    """(I(G, -1), decycling number), both exact."""
    if g.n > 20:
        raise ValueError("decycling brute force capped at 20 vertices")
    value = eval_at(independence_polynomial(g), -1)
    return value, decycling_number(g)


def _is_forest_mask(g: Graph, mask: int) -> bool:
    verts = bits(mask)
    edge_cnt = 0
    for v in verts:
        edge_cnt += (g.adj[v] & mask).bit_count()
    edge_cnt //= 2
    # acyclic iff every component is a tree; equivalent to |E| = |V| - #components
    comp = 0
    remaining = mask
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= g.adj[b.bit_length() - 1] & mask
                m ^= b
            frontier = nxt & ~seen
            seen |= frontier
        comp += 1
        remaining &= ~seen
    return edge_cnt == len(verts) - comp


def decycling_number(g: Graph) -> int:
    """Minimum vertices whose removal leaves a forest; smallest subsets first."""
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        for removal in combinations(range(g.n), k):
            mask = full
            for v in removal:
                mask ^= 1 << v
            if mask == 0 or _is_forest_mask(g, mask):
                return k
    return g.n


def adjacency_char_poly(g: Graph) -> tuple:
    """Characteristic polynomial det(xI - A), ascending integer coefficients.

    Faddeev-LeVerrier over exact integers; the trace divisions are exact.
    """
    n = g.n
    a = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M <- A (M + c I)
        for i in range(n):
            m[i][i] += c
        nm = [[0] * n for _ in range(n)]
        for i in range(n):
            ai = a[i]
            for l in range(n):
                ail = ai[l]
                if ail:
                    ml = m[l]
                    row = nm[i]
                    for j in range(n):
                        row[j] += ail * ml[j]
        m = nm
        tr = sum(m[i][i] for i in range(n))
        assert tr % k == 0, "Faddeev-LeVerrier trace division must be exact"
        c = -tr // k
        coeffs[n - k] = c
    return trim(coeffs)


def spectral_radius(g: Graph, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Largest eigenvalue of the adjacency matrix as a certified enclosure."""
    return dominant_real_root(adjacency_char_poly(g), width)


def spectral_radius_algebraic(g: Graph) -> AlgebraicReal:
    p = adjacency_char_poly(g)
    enc = dominant_real_root(p, Fraction(1, 2**24))
    return AlgebraicReal.from_enclosure(p, enc)


def is_complete_multipartite_equal_parts(g: Graph) -> bool:
    """True iff the complement is a disjoint union of equal-size cliques."""
    from .graphs import connected_components, induced_subgraph_mask

    comp = complement(g)
    comps = connected_components(comp)
    sizes = {m.bit_count() for m in comps}
    if len(sizes) != 1:
        return False
    size = sizes.pop()
    for mask in comps:
        sub = induced_subgraph_mask(comp, mask)
        if sub.edge_count != size * (size - 1) // 2:
            return False
    return True
