"""ADE root lattices, exact root enumeration, root sublattice decomposition.

Simple-root bases follow the usual Bourbaki ordering: A_n is the chain
a_1 - ... - a_n; D_n is the chain d_1 - ... - d_{n-2} with both d_{n-1} and
d_n attached to d_{n-2}; E_n has the chain 1-3-4-...-n with node 2 attached
to node 4.  All lattices are negative definite with roots of norm -2.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .intmat import rank_int
from .lattice import IntegerLattice, LatticeError


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise LatticeError(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise LatticeError("A_n needs n >= 1")
        if self.family == "D":
            if self.rank == 3:
                object.__setattr__(self, "family", "A")  # D3 = A3
            elif self.rank < 4:
                raise LatticeError("D_n needs n >= 4 (D3 is canonicalized to A3)")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise LatticeError("E_n needs n in {6, 7, 8}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def root_count(self):
        """Total number of roots (both signs)."""
        n = self.rank
        if self.family == "A":
            return n * (n + 1)
        if self.family == "D":
            return 2 * n * (n - 1)
        return {6: 72, 7: 126, 8: 240}[n]

    @property
    def det_abs(self):
        n = self.rank
        if self.family == "A":
            return n + 1
        if self.family == "D":
            return 4
        return {6: 3, 7: 2, 8: 1}[n]


def ade(spec):
    """Parse 'A5', 'D8', 'E7' (or pass an ADEType through)."""
    if isinstance(spec, ADEType):
        return spec
    s = spec.strip()
    return ADEType(s[0].upper(), int(s[1:]))


def _edges(t):
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]


def standard_gram(t):
    n = t.rank
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        g[i][j] = g[j][i] = 1
    return g


def standard_root_lattice(t):
    """Negative-definite ADE root lattice in the Bourbaki simple-root basis."""
    t = ade(t)
    return IntegerLattice(standard_gram(t), name=str(t))


def short_vectors(gram, bound):
    """All nonzero v with |v^2| <= bound in a negative definite lattice.

    Exact branch-and-bound on the rational LDL decomposition of the negated
    Gram matrix.  Deterministic (sorted) output of coordinate tuples.
    """
    n = len(gram)
    if n == 0:
        return []
    g = [[Fraction(-gram[i][j]) for j in range(n)] for i in range(n)]
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = g[j][j] - sum(D[k] * L[j][k] * L[j][k] for k in range(j))
        if D[j] <= 0:
            raise LatticeError("short_vectors needs a negative definite Gram")
        L[j][j] = Fraction(1)
        for i in range(j + 1, n):
            L[i][j] = (g[i][j] - sum(D[k] * L[i][k] * L[j][k] for k in range(j))) / D[j]
    found = []
    x = [0] * n

    def descend(j, remaining, shifts):
        # Q(x) = sum_j D_j (x_j + shifts_j)^2, filled from coordinate n-1 down
        if j < 0:
            if any(x):
                found.append(tuple(x))
            return
        center = -shifts[j]
        radius2 = remaining / D[j]
        m = isqrt(radius2.numerator // radius2.denominator) + 2
        lo = (center.numerator // center.denominator) - m
        hi = -((-center.numerator) // center.denominator) + m
        for xi in range(lo, hi + 1):
            contrib = D[j] * (xi - center) * (xi - center)
            if contrib <= remaining:
                x[j] = xi
                new_shifts = shifts[:]
                for i in range(j):
                    new_shifts[i] += L[j][i] * xi
                descend(j - 1, remaining - contrib, new_shifts)
                x[j] = 0

    descend(n - 1, Fraction(bound), [Fraction(0)] * n)
    found.sort()
    return found


def enumerate_roots(lat):
    """All vectors of norm -2 in a negative definite lattice, both signs."""
    n = lat.rank
    if n == 0:
        return []
    if n > 24:
        raise LatticeError("root enumeration limited to rank <= 24")
    if not lat.is_negative_definite():
        raise LatticeError("root enumeration requires a negative definite lattice")
    cands = short_vectors([list(r) for r in lat.gram], 2)
    return [v for v in cands if lat.norm(v) == -2]


@dataclass(frozen=True)
class RootDecomposition:
    components: tuple          # ADETypes, sorted
    component_bases: tuple     # per component: tuple of simple-root vectors

    @property
    def rank(self):
        return sum(t.rank for t in self.components)

    def type_multiset(self):
        return tuple(sorted(self.components))

    def __str__(self):
        if not self.components:
            return "-"
        return "+".join(str(t) for t in self.components)


def _identify_component(rank, count):
    if rank == 1 and count == 2:
        return ADEType("A", 1)
    if count == rank * (rank + 1):
        return ADEType("A", rank)
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return ADEType("D", rank)
    if (rank, count) in ((6, 72), (7, 126), (8, 240)):
        return ADEType("E", rank)
    raise LatticeError(f"cannot identify root component (rank {rank}, {count} roots)")


def _simple_system(vectors, pair, seed=11):
    """A simple system for one irreducible component (positive indecomposables)."""
    rng = random.Random(seed)
    n = len(vectors[0])
    for _ in range(100):
        weights = [rng.randint(1, 10 ** 6) for _ in range(n)]
        vals = [sum(w * x for w, x in zip(weights, v)) for v in vectors]
        if all(v != 0 for v in vals):
            break
    else:
        raise LatticeError("could not find a functional avoiding all roots")
    pos = [v for v, val in zip(vectors, vals) if val > 0]
    pos_set = set(map(tuple, pos))
    simple = []
    for r in pos:
        if not any(tuple(a - b for a, b in zip(r, p)) in pos_set for p in pos):
            simple.append(tuple(r))
    return simple


def _bourbaki_order(simple, pair):
    """Reorder a simple system so its Gram equals the standard ADE Gram."""
    k = len(simple)
    adj = {i: [j for j in range(k) if j != i and pair(simple[i], simple[j]) != 0]
           for i in range(k)}
    branch = [i for i in range(k) if len(adj[i]) == 3]
    if len(branch) > 1:
        raise LatticeError("not an ADE diagram (multiple branch nodes)")
    if not branch:
        if k == 1:
            return [simple[0]]
        ends = [i for i in range(k) if len(adj[i]) == 1]
        start = min(ends, key=lambda i: simple[i])
        order = _walk_chain(start, adj, k)
        return [simple[i] for i in order]
    b = branch[0]
    legs = []
    for nb in adj[b]:
        leg = [nb]
        prev = b
        while True:
            nxt = [x for x in adj[leg[-1]] if x != prev]
            if not nxt:
                break
            prev = leg[-1]
            leg.append(nxt[0])
        legs.append(leg)
    legs.sort(key=lambda leg: (len(leg), [simple[i] for i in leg]))
    if len(legs[1]) == 1:
        # D_n: long tail, branch node, two prongs
        order = legs[2][::-1] + [b] + [legs[0][0], legs[1][0]]
    else:
        # E_n: legs (node2), (node3, node1), (node5, ..., node n)
        leg2, leg13, leg5 = legs[0], legs[1], legs[2]
        if len(leg2) != 1 or len(leg13) != 2:
            raise LatticeError("not an ADE diagram (bad leg lengths)")
        order = [leg13[1], leg2[0], leg13[0], b] + leg5
    return [simple[i] for i in order]


def _walk_chain(start, adj, k):
    order = [start]
    seen = {start}
    while len(order) < k:
        nxt = [x for x in adj[order[-1]] if x not in seen]
        order.append(nxt[0])
        seen.add(nxt[0])
    return order


def decompose_root_set(root_vectors, pair, pair_matrix=None):
    """Decompose a full set of roots into irreducible ADE components.

    `root_vectors` must be all norm -2 vectors of a lattice (both signs);
    `pair` is the ambient pairing function.  An optional precomputed pairing
    matrix (list of lists aligned with `root_vectors`) avoids the quadratic
    pairing cost for large sets.
    """
    if not root_vectors:
        return RootDecomposition((), ())
    vecs = [tuple(v) for v in root_vectors]
    n = len(vecs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        row = pair_matrix[i] if pair_matrix is not None else None
        for j in range(i + 1, n):
            p = row[j] if row is not None else pair(vecs[i], vecs[j])
            if p != 0:
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(vecs[i])
    comps = []
    for comp_vecs in groups.values():
        rank = rank_int(comp_vecs)
        t = _identify_component(rank, len(comp_vecs))
        simple = _bourbaki_order(_simple_system(comp_vecs, pair), pair)
        expected = standard_gram(t)
        got = [[pair(u, v) for v in simple] for u in simple]
        if got != expected:
            raise LatticeError(f"simple system of {t} does not match its standard Gram")
        comps.append((t, tuple(simple)))
    comps.sort(key=lambda c: (c[0], c[1]))
    return RootDecomposition(tuple(c[0] for c in comps), tuple(c[1] for c in comps))


def root_sublattice(lat):
    """Root decomposition of the sublattice generated by the roots of `lat`."""
    roots = enumerate_roots(lat)
    return decompose_root_set(roots, lat.pairing)
