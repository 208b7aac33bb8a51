"""Primitive embeddings of A1, A5 and A5+A1 into ADE components.

The catalog lists one representative per Weyl-equivalence class of images,
with explicit integer vectors on the component's simple-root basis.  An
independent brute-force oracle enumerates all root subsystems of the given
type in small components (rank <= 10) and groups them into genuine Weyl
orbits by closing under all root reflections.
"""

from dataclasses import dataclass

import numpy as np

from .intmat import gram_of, hnf, left_kernel, mat_mul, smith_diagonal, transpose
from .lattice import LatticeError, is_primitive
from .roots import (ADEType, ade, enumerate_roots, standard_gram,
                    standard_root_lattice)

A5_GRAM = [[-2, 1, 0, 0, 0],
           [1, -2, 1, 0, 0],
           [0, 1, -2, 1, 0],
           [0, 0, 1, -2, 1],
           [0, 0, 0, 1, -2]]


def highest_root(t):
    """Coefficients of the highest root on the simple-root basis."""
    t = ade(t)
    n = t.rank
    if t.family == "A":
        return [1] * n
    if t.family == "D":
        return [1] + [2] * (n - 3) + [1, 1]
    return {6: [1, 2, 2, 3, 2, 1],
            7: [2, 2, 3, 4, 3, 2, 1],
            8: [2, 3, 4, 6, 5, 4, 3, 2]}[n]


@dataclass(frozen=True)
class DnVectors:
    """Distinguished vectors in D_n used to present orthogonal complements."""

    x3: tuple
    x7: tuple
    x7p: tuple
    z6: tuple
    z6t: tuple


def dn_vectors(n):
    def vec(pairs):
        v = [0] * n
        for idx, c in pairs:
            v[idx - 1] = c
        return tuple(v)

    x3 = vec([(n - 3, 1), (n - 2, 2), (n - 1, 1), (n, 1)])
    x7 = vec([(n - 7, 1)] + [(j, 2) for j in range(n - 6, n - 1)] + [(n - 1, 1), (n, 1)])
    x7p = vec([(j, 2) for j in range(n - 6, n - 1)] + [(n - 1, 1), (n, 1)])
    z6 = vec([(n - 5, 1), (n - 4, 2), (n - 3, 3), (n - 2, 4), (n - 1, 3), (n, 2)])
    z6t = vec([(n - 5, 1), (n - 4, 2), (n - 3, 3), (n - 2, 4), (n - 1, 2), (n, 3)])
    return DnVectors(x3, x7, x7p, z6, z6t)


@dataclass(frozen=True)
class EpVectors:
    """Distinguished vectors in E_p used to present orthogonal complements."""

    x: tuple
    y: tuple


def ep_vectors(p):
    x = [1, 1, 2, 2, 1] + [0] * (p - 5)
    y = [1, 2, 2, 3, 2, 1] + [0] * (p - 6)
    return EpVectors(tuple(x), tuple(y))


@dataclass(frozen=True)
class EmbeddingFragment:
    """Image of A1, A5 or A5+A1 in a single ADE component."""

    sub: str                  # "A1", "A5" or "A5+A1"
    target: ADEType
    a5_rows: tuple            # () when sub == "A1"
    a1_row: tuple             # () when sub == "A5"
    label: str

    def rows(self):
        out = [list(r) for r in self.a5_rows]
        if self.a1_row:
            out.append(list(self.a1_row))
        return out


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


def _check_fragment(frag):
    g = standard_gram(frag.target)
    rows = frag.rows()
    got = gram_of(rows, g)
    k = len(frag.a5_rows)
    expected = [[0] * len(rows) for _ in rows]
    for i in range(k):
        for j in range(k):
            expected[i][j] = A5_GRAM[i][j]
    if frag.a1_row:
        expected[k][k] = -2
    if got != expected:
        raise LatticeError(f"catalog image does not realize its Gram: {frag.label}")
    if not is_primitive(rows):
        raise LatticeError(f"catalog image is not primitive: {frag.label}")
    return frag


def catalog_embeddings(sub, target):
    """Primitive embeddings of `sub` into one component, up to Weyl equivalence.

    Returns one EmbeddingFragment per class (possibly empty).  The class
    counts agree with the brute-force oracle on every target of rank <= 10.
    """
    t = ade(target)
    n = t.rank
    frags = []

    def add(a5, a1, label):
        frags.append(_check_fragment(EmbeddingFragment(
            sub, t, tuple(tuple(r) for r in a5), tuple(a1), label)))

    if sub == "A1":
        if t.family in ("A", "D"):
            add([], _unit(n, 0), f"A1 in {t} (simple root)")
        else:
            add([], tuple(highest_root(t)), f"A1 in {t} (highest root)")
        return frags

    chain_a = [_unit(n, i) for i in range(5)] if n >= 5 else []
    if sub == "A5":
        if t.family == "A" and n >= 5:
            add(chain_a, (), f"A5 in {t} (leading chain)")
        elif t.family == "D" and n >= 6:
            chain = [_unit(n, n - 2), _unit(n, n - 3), _unit(n, n - 4),
                     _unit(n, n - 5), _unit(n, n - 6)]
            add(chain, (), f"A5 in {t} (tail chain)")
            if n == 6:
                add([_unit(6, 0), _unit(6, 1), _unit(6, 2), _unit(6, 3), _unit(6, 5)],
                    (), "A5 in D6 (fork chain)")
        elif t.family == "E":
            if n == 6:
                add([_unit(6, 0), _unit(6, 2), _unit(6, 3), _unit(6, 4), _unit(6, 5)],
                    (), "A5 in E6")
            elif n == 7:
                add([_unit(7, 0), _unit(7, 2), _unit(7, 3), _unit(7, 4),
                     (1, 2, 2, 3, 2, 2, 1)], (), "A5 in E7 (complement A1)")
                add([_unit(7, 1), _unit(7, 3), _unit(7, 4), _unit(7, 5), _unit(7, 6)],
                    (), "A5 in E7 (complement A2)")
            else:
                add([_unit(8, 1), _unit(8, 3), _unit(8, 4), _unit(8, 5), _unit(8, 6)],
                    (), "A5 in E8")
        return frags

    if sub != "A5+A1":
        raise LatticeError(f"unknown sublattice spec {sub!r}")

    if t.family == "A" and n >= 7:
        add(chain_a, _unit(n, 6), f"A5+A1 in {t}")
    elif t.family == "D" and n >= 8:
        chain = [_unit(n, n - 2), _unit(n, n - 3), _unit(n, n - 4),
                 _unit(n, n - 5), _unit(n, n - 6)]
        x7 = dn_vectors(n).x7
        if n == 8:
            add(chain, _unit(8, 0), "A5+A1 in D8 (tail root)")
            add(chain, x7, "A5+A1 in D8 (pair-sum root)")
        else:
            add(chain, x7, f"A5+A1 in {t}")
    elif t.family == "E" and n in (7, 8):
        for a5_frag in catalog_embeddings("A5", t):
            root = _orthogonal_primitive_root(t, a5_frag.a5_rows)
            if root is not None:
                add(a5_frag.a5_rows, root,
                    a5_frag.label.replace("A5", "A5+A1", 1))
    return frags


def _orthogonal_primitive_root(t, a5_rows):
    """First root orthogonal to the A5 image making a primitive joint image."""
    lat = standard_root_lattice(t)
    g = [list(r) for r in lat.gram]
    rows = [list(r) for r in a5_rows]
    for r in enumerate_roots(lat):
        if all(sum(r[i] * g[i][j] * v[j] for i in range(t.rank) for j in range(t.rank)) == 0
               for v in rows):
            if is_primitive(rows + [list(r)]):
                return tuple(r)
    return None


# ---------------------------------------------------------------------------
# Brute-force oracle: all subsystems of a given type, grouped into Weyl orbits.
# ---------------------------------------------------------------------------

class _RootContext:
    def __init__(self, t):
        self.t = ade(t)
        self.lat = standard_root_lattice(self.t)
        self.roots = enumerate_roots(self.lat)
        self.index = {r: i for i, r in enumerate(self.roots)}
        self.R = np.array(self.roots, dtype=np.int64)
        g = np.array(self.lat.gram, dtype=np.int64)
        self.RG = self.R @ g
        self.P = self.RG @ self.R.T
        self.neg = np.array([self.index[tuple(-x for x in r)] for r in self.roots])
        # reflection in root a permutes the root list
        self.refl = []
        for a in range(len(self.roots)):
            imgs = self.R + np.outer(self.P[:, a], self.R[a])
            self.refl.append(np.array([self.index[tuple(v)] for v in imgs]))


_CTX = {}


def _ctx(t):
    t = ade(t)
    if t not in _CTX:
        _CTX[t] = _RootContext(t)
    return _CTX[t]


def _span_closure(ctx, root_indices, basis=None):
    """All root indices lying in the rational span of the given roots."""
    if basis is None:
        rows = [list(ctx.roots[i]) for i in root_indices]
        basis = hnf(rows)
    g = [list(r) for r in ctx.lat.gram]
    comp = left_kernel(mat_mul(g, transpose(basis)))
    if comp:
        inside = np.all(ctx.RG @ np.array(comp, dtype=np.int64).T == 0, axis=1)
        idx = np.nonzero(inside)[0]
    else:
        idx = np.arange(len(ctx.roots))
    return tuple(sorted(int(i) for i in idx)), len(basis)


def _a_chains(ctx, length):
    """All subsystems of type A_length as sorted index tuples."""
    n_roots = len(ctx.roots)
    level = {}
    for i in range(n_roots):
        key = tuple(sorted((i, int(ctx.neg[i]))))
        level[key] = hnf([list(ctx.roots[i])])
    target_counts = {k: k * (k + 1) for k in range(1, length + 1)}
    for k in range(2, length + 1):
        nxt = {}
        span_cache = {}
        for closure, basis in level.items():
            member = np.zeros(n_roots, dtype=bool)
            member[list(closure)] = True
            pairs = ctx.P[:, list(closure)]
            cand = np.nonzero((~member) & np.any(pairs != 0, axis=1))[0]
            for j in cand:
                new_basis = hnf(basis + [list(ctx.roots[int(j)])])
                if len(new_basis) != k:
                    continue
                bkey = tuple(map(tuple, new_basis))
                hit = span_cache.get(bkey)
                if hit is None:
                    hit = _span_closure(ctx, None, basis=new_basis)
                    span_cache[bkey] = hit
                new_closure, new_rank = hit
                if new_rank == k and len(new_closure) == target_counts[k]:
                    nxt.setdefault(new_closure, new_basis)
        level = nxt
    return list(level)


def _orbit_classes(ctx, keys):
    """Group subsystem keys (sorted root-index tuples) into Weyl orbits."""
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    keyset = set(keys)
    for k in keys:
        arr = np.array(k)
        for refl in ctx.refl:
            img = tuple(sorted(int(x) for x in refl[arr]))
            if img in keyset:
                ra, rb = find(k), find(img)
                if ra != rb:
                    parent[ra] = rb
    classes = {}
    for k in keys:
        classes.setdefault(find(k), []).append(k)
    return list(classes.values())


def bruteforce_embeddings(sub, target):
    """Enumerate all primitive images of `sub` in `target` up to Weyl orbits.

    Valid for targets of rank <= 10.  Returns a list of orbits, each a list
    of subsystem keys (sorted root-index tuples, both signs included).
    """
    t = ade(target)
    if t.rank > 10:
        raise LatticeError("brute-force oracle limited to rank <= 10")
    ctx = _ctx(t)
    if sub == "A1":
        keys = _a_chains(ctx, 1)
    elif sub == "A5":
        keys = _a_chains(ctx, 5) if t.rank >= 5 else []
    elif sub == "A5+A1":
        if t.rank < 6:
            keys = []
        else:
            a5 = _a_chains(ctx, 5)
            keys = []
            seen = set()
            for key in a5:
                ortho = np.nonzero(np.all(ctx.P[:, list(key)] == 0, axis=1))[0]
                for j in ortho:
                    pair = tuple(sorted((int(j), int(ctx.neg[j]))))
                    joint = tuple(sorted(set(key) | set(pair)))
                    if joint not in seen:
                        seen.add(joint)
                        keys.append(joint)
    else:
        raise LatticeError(f"unknown sublattice spec {sub!r}")
    # primitivity filter on the generated span
    primitive = []
    for key in keys:
        rows = [list(ctx.roots[i]) for i in key]
        if all(d == 1 for d in smith_diagonal(hnf(rows))):
            primitive.append(key)
    return _orbit_classes(ctx, primitive)


def fragment_subsystem_key(frag):
    """Oracle key (root-closure index tuple) of a catalog fragment."""
    ctx = _ctx(frag.target)
    idx = []
    for row in frag.rows():
        r = tuple(row)
        if r not in ctx.index:
            raise LatticeError("fragment vector is not a root")
        idx.append(ctx.index[r])
    closure, _ = _span_closure(ctx, idx)
    return closure
