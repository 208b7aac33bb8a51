"""End-to-end classification of the elliptic fibrations.

For each rank-24 even unimodular lattice L with roots, every primitive
embedding of A5+A1 into L_root is classified: N is the orthogonal complement
in L_root, W (the frame) the complement in L.  The reducible fibers are the
root types of W, the Mordell-Weil rank is rank(W) - rank(W_root), and the
torsion is the torsion of W / W_root.  Frames are separated (and duplicate
assignments merged) by an isometry-invariant fingerprint built from the glue
of W over its root part.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .embeddings import catalog_embeddings
from .heights import group_within_bound, torsion_bound
from .intmat import (bareiss_det, gram_of, hnf, left_kernel, mat_mul,
                     smith_diagonal, snf_with_transforms, solve_left, transpose)
from .lattice import (FiniteAbelianGroup, IntegerLattice, LatticeError,
                      TRIVIAL_GROUP, discriminant_form, dual_basis_classes,
                      orthogonal_complement)
from .niemeier import NIEMEIER_NAMES, NiemeierLattice, build_niemeier
from .reference import CLASSIFICATION_LATTICE_ORDER, REFERENCE_ROWS
from .roots import (ADEType, decompose_root_set, standard_gram,
                    standard_root_lattice)

NS_RANK = 20          # Picard number of the surface
CHI = 2               # holomorphic Euler characteristic
FRAME_RANK = NS_RANK - 2
FRAME_DET = 12        # |det NS| = |det T| for this surface


@dataclass(frozen=True)
class TranscendentalData:
    ts: IntegerLattice      # positive definite, rank 2
    t: IntegerLattice       # negative definite root lattice of rank 6


def verify_T():
    """Build the transcendental lattice and its rank-6 negative partner."""
    ts = IntegerLattice([[2, 0], [0, 6]], name="<2>+<6>")
    t = standard_root_lattice("A5").direct_sum(standard_root_lattice("A1"))
    if t.rank != ts.rank + 4:
        raise LatticeError("rank condition rank(T) = rank(T_S) + 4 fails")
    if not t.is_negative_definite():
        raise LatticeError("T must be negative definite")
    if not discriminant_form(t).is_isometric(discriminant_form(ts)):
        raise LatticeError("discriminant forms of T and T_S differ")
    return TranscendentalData(ts, t)


@dataclass(frozen=True)
class Assignment:
    """A placement of A5 and A1 into components of one Niemeier lattice.

    This is the concrete form of a primitive embedding of A5+A1: `images`
    gives the six root-coordinate vectors (five chain roots plus the
    orthogonal root).
    """

    niemeier: str
    kind: str            # "joint" or "split"
    parts: tuple         # ((comp_idx, EmbeddingFragment), ...)
    label: str
    sort_key: tuple

    @property
    def target(self):
        return self.niemeier

    @property
    def assignment_label(self):
        return self.label

    def images(self, nl):
        return _images_in_root_coords(nl, self)


def enumerate_assignments(nl):
    """All raw placements, before merging equivalent ones.

    Joint placements put A5+A1 into a single component; split placements put
    A5 into component i and A1 into component j != i.  Components are NOT
    collapsed by type here; equivalent placements merge downstream by frame
    fingerprint.
    """
    out = []
    comps = nl.root_components
    for i, t in enumerate(comps):
        for ci, frag in enumerate(catalog_embeddings("A5+A1", t)):
            label = f"A5+A1 in {t}"
            out.append(Assignment(nl.name, "joint", ((i, frag),),
                                  label, (0, ci, i)))
    for i, ti in enumerate(comps):
        a5_frags = catalog_embeddings("A5", ti)
        if not a5_frags:
            continue
        for j, tj in enumerate(comps):
            if i == j:
                continue
            a1_frags = catalog_embeddings("A1", tj)
            for ci, f5 in enumerate(a5_frags):
                for f1 in a1_frags:
                    label = f"A5 in {ti}; A1 in {tj}"
                    out.append(Assignment(nl.name, "split",
                                          ((i, f5), (j, f1)),
                                          label, (1, i, j, ci)))
    out.sort(key=lambda a: a.sort_key)
    return out


@dataclass
class FibrationRecord:
    id: str
    niemeier: str
    assignment_label: str
    n_lattice: IntegerLattice        # complement of the image in L_root
    n_root_types: tuple              # sorted ADETypes
    w_index: int                     # index [W : N]
    mw_rank: int
    mw_torsion: FiniteAbelianGroup
    frame_fingerprint: tuple
    sort_key: tuple

    @property
    def n_root_string(self):
        return "+".join(str(t) for t in self.n_root_types)

    @property
    def torsion_string(self):
        return str(self.mw_torsion)

    def content_key(self):
        return (self.niemeier, self.n_root_string, self.mw_rank, self.torsion_string)


class _LatticeContext:
    def __init__(self, nl):
        self.nl = nl
        self.G_L = np.array(nl.full_lattice.gram, dtype=np.int64)
        self.roots = np.array(nl.roots_in_L, dtype=np.int64)
        self.RG = self.roots @ self.G_L
        self.root_lattice = IntegerLattice(
            [list(r) for r in nl.root_gram], name=nl.name + " roots")


_LCTX = {}


def _lctx(nl):
    if nl.name not in _LCTX:
        _LCTX[nl.name] = _LatticeContext(nl)
    return _LCTX[nl.name]


def _images_in_root_coords(nl, assignment):
    rows = []
    a1 = None
    for comp_idx, frag in assignment.parts:
        for r in frag.a5_rows:
            full = [0] * 24
            off = nl.offsets[comp_idx]
            for k, v in enumerate(r):
                full[off + k] = v
            rows.append(full)
        if frag.a1_row:
            full = [0] * 24
            off = nl.offsets[comp_idx]
            for k, v in enumerate(frag.a1_row):
                full[off + k] = v
            a1 = full
    if len(rows) != 5 or a1 is None:
        raise LatticeError("assignment does not cover A5 and A1")
    return rows + [a1]


A5A1_GRAM = [[-2, 1, 0, 0, 0, 0],
             [1, -2, 1, 0, 0, 0],
             [0, 1, -2, 1, 0, 0],
             [0, 0, 1, -2, 1, 0],
             [0, 0, 0, 1, -2, 0],
             [0, 0, 0, 0, 0, -2]]


def _quotient_with_reps(ambient_rows, sub_rows):
    """Quotient span(ambient)/span(sub) for integral rows in shared coords.

    Returns (invariant factors > 1, generator vectors in shared coords,
    free rank).  sub must lie inside ambient integrally.
    """
    coords = solve_left(ambient_rows, sub_rows)
    if coords is None or any(x.denominator != 1 for row in coords for x in row):
        raise LatticeError("sublattice does not lie in the ambient lattice")
    c = [[int(x) for x in row] for row in coords]
    d, s, t, tinv = snf_with_transforms(c)
    k = min(len(c), len(c[0]))
    diag = [d[i][i] for i in range(k)]
    rank = sum(1 for x in diag if x != 0)
    factors, reps = [], []
    for i in range(rank):
        if diag[i] > 1:
            factors.append(diag[i])
            rep = [sum(tinv[i][a] * ambient_rows[a][b] for a in range(len(ambient_rows)))
                   for b in range(len(ambient_rows[0]))]
            reps.append(tuple(rep))
    return factors, reps, len(ambient_rows) - rank


def _short_vector_counts(gram, max_abs_norm=12):
    """Counts of vectors by norm in a small negative definite lattice."""
    if not gram:
        return ()
    from .roots import short_vectors
    counts = {}
    n = len(gram)
    for v in short_vectors(gram, max_abs_norm):
        norm = -sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))
        counts[norm] = counts.get(norm, 0) + 1
    return tuple(sorted(counts.items()))


def _part_invariants(basis_rows, gram_part, pair_vec):
    """Discriminant class of the projection of a vector onto one summand.

    basis_rows: summand basis (shared coords); gram_part: its Gram;
    pair_vec: pairings of the vector against basis_rows.
    Returns (order, q mod 2).
    """
    coeffs = solve_left(transpose(gram_part), [pair_vec])[0]
    order = 1
    for cf in coeffs:
        order = order * cf.denominator // gcd(order, cf.denominator)
    q = Fraction(0)
    k = len(coeffs)
    for a in range(k):
        for b in range(k):
            q += coeffs[a] * coeffs[b] * gram_part[a][b]
    return order, q % 2


def classify_assignment(nl, assignment):
    """Run the complement computations for one placement and build a record."""
    ctx = _lctx(nl)
    img_root = _images_in_root_coords(nl, assignment)
    img_L = [list(nl.to_L(r)) for r in img_root]
    if gram_of(img_L, [list(r) for r in ctx.nl.full_lattice.gram]) != A5A1_GRAM:
        raise LatticeError(f"{assignment.label}: image does not realize A5+A1")
    if any(d != 1 for d in smith_diagonal(hnf([r[:] for r in img_L]))):
        raise LatticeError(f"{assignment.label}: image is not primitive in L")

    # N: complement in the root lattice (root coordinates)
    n_lat = orthogonal_complement(ctx.root_lattice, img_root)
    if n_lat.rank != FRAME_RANK:
        raise LatticeError(f"{assignment.label}: rank(N) != {FRAME_RANK}")
    det_n = abs(n_lat.det())

    # W: complement in the full lattice (L coordinates)
    w_lat = orthogonal_complement(nl.full_lattice, img_L)
    w_rows = [list(r) for r in w_lat.basis_in_ambient]
    det_w = abs(w_lat.det())
    if det_w != FRAME_DET:
        raise LatticeError(f"{assignment.label}: |det W| = {det_w} != {FRAME_DET}")

    # roots of W = roots of L orthogonal to the image
    img_np = np.array(img_L, dtype=np.int64)
    w_root_mask = np.all(ctx.RG @ img_np.T == 0, axis=1)
    w_root_idx = np.nonzero(w_root_mask)[0]
    w_roots = [tuple(int(v) for v in ctx.roots[i]) for i in w_root_idx]
    pair_matrix = (ctx.RG[w_root_idx] @ ctx.roots[w_root_idx].T).tolist()
    decomp = decompose_root_set(w_roots, nl.full_lattice.pairing, pair_matrix)

    mw_rank = FRAME_RANK - decomp.rank
    root_span = [list(r) for comp in decomp.component_bases for r in comp]

    # torsion of W / W_root and the index [W : N]
    factors, _, free = _quotient_with_reps(w_rows, root_span) if root_span \
        else ([], [], FRAME_RANK)
    torsion = FiniteAbelianGroup(tuple(factors)) if factors else TRIVIAL_GROUP
    if free != mw_rank:
        raise LatticeError(f"{assignment.label}: free rank mismatch")
    n_rows_L = [list(nl.to_L(r)) for r in n_lat.basis_in_ambient]
    idx_factors, _, idx_free = _quotient_with_reps(w_rows, n_rows_L)
    if idx_free != 0:
        raise LatticeError(f"{assignment.label}: N does not have finite index in W")
    w_index = 1
    for f in idx_factors:
        w_index *= f
    if w_index * w_index * FRAME_DET != det_n:
        raise LatticeError(f"{assignment.label}: [W:N]^2 * 12 != |det N|")

    fingerprint = _frame_fingerprint(ctx, w_rows, n_rows_L, n_lat, decomp,
                                     torsion, mw_rank)

    bound = torsion_bound([str(t) for t in decomp.components])
    if not group_within_bound(torsion, bound):
        raise LatticeError(f"{assignment.label}: torsion exceeds the fiber-type bound")

    return FibrationRecord(
        id="",
        niemeier=nl.name,
        assignment_label=assignment.label,
        n_lattice=n_lat,
        n_root_types=decomp.type_multiset(),
        w_index=w_index,
        mw_rank=mw_rank,
        mw_torsion=torsion,
        frame_fingerprint=fingerprint,
        sort_key=assignment.sort_key,
    )


def _frame_fingerprint(ctx, w_rows, n_rows, n_lat, decomp, torsion, mw_rank):
    """Dedup invariant of a classified placement.

    Built from the complement N and the glue W/N inside the discriminant
    group of N: Smith form of Gram(N), root types of N, invariant factors of
    W/N, and the multiset over elements of W/N of their per-part
    discriminant images (order and q-value on each root component and on the
    rootless part), canonicalized up to permutation of isomorphic parts.
    """
    g_l = [list(r) for r in ctx.nl.full_lattice.gram]
    comp_bases = [[list(r) for r in comp] for comp in decomp.component_bases]
    comp_types = [str(t) for t in decomp.components]
    comp_grams = [standard_gram(t) for t in decomp.components]
    root_span = [r for comp in comp_bases for r in comp]

    # rootless part of N: vectors of N orthogonal to every root
    if root_span:
        pair = mat_mul(mat_mul(n_rows, g_l), transpose(root_span))
        v_coeff = left_kernel(pair)
    else:
        v_coeff = [[1 if a == b else 0 for b in range(len(n_rows))]
                   for a in range(len(n_rows))]
    v_rows = [[sum(c[a] * n_rows[a][b] for a in range(len(n_rows)))
               for b in range(24)] for c in v_coeff]
    v_gram = gram_of(v_rows, g_l) if v_rows else []
    v_invariants = (
        len(v_rows),
        abs(bareiss_det(v_gram)) if v_rows else 1,
        tuple(smith_diagonal(v_gram)) if v_rows else (),
        _short_vector_counts(v_gram) if v_rows else (),
    )

    # glue group W/N with coset representatives
    factors, reps, free = _quotient_with_reps(w_rows, n_rows)
    if free != 0:
        raise LatticeError("N must have finite index in W")
    elements = [tuple([0] * 24)]
    for d, rep in zip(factors, reps):
        multiples = [tuple(k * x for x in rep) for k in range(d)]
        elements = [tuple(a + b for a, b in zip(e, m))
                    for e in elements for m in multiples]
    rowset = []
    for h in elements:
        gh = [sum(g_l[a][c] * h[c] for c in range(24)) for a in range(24)]
        comp_data = []
        for tstr, basis, gram_part in zip(comp_types, comp_bases, comp_grams):
            pair_vec = [sum(b[a] * gh[a] for a in range(24)) for b in basis]
            order, q = _part_invariants(basis, gram_part, pair_vec)
            comp_data.append((tstr, order, q))
        if v_rows:
            pair_vec = [sum(b[a] * gh[a] for a in range(24)) for b in v_rows]
            v_order, v_q = _part_invariants(v_rows, v_gram, pair_vec)
        else:
            v_order, v_q = 1, Fraction(0)
        rowset.append(((v_order, v_q), tuple(sorted(comp_data))))
    return (
        tuple(smith_diagonal([list(r) for r in n_lat.gram])),
        tuple(comp_types),
        tuple(factors),
        v_invariants,
        tuple(sorted(rowset)),
        mw_rank,
        torsion.invariant_factors,
    )


@dataclass
class ClassificationTable:
    records: list

    def by_id(self, rid):
        for r in self.records:
            if r.id == rid:
                return r
        raise KeyError(rid)


def distribute_assignments(nl):
    """Inequivalent placements of A5+A1 into one Niemeier lattice.

    Placements that produce isometric frames (equal frame fingerprints) are
    merged; in particular placements related by permuting isomorphic
    components collapse to one representative.
    """
    merged = _classify_lattice(nl)
    return [a for _, a in merged]


def _classify_lattice(nl):
    """Classify one lattice; returns [(record, assignment)] after merging."""
    out = []
    seen = {}
    for a in enumerate_assignments(nl):
        rec = classify_assignment(nl, a)
        key = rec.frame_fingerprint
        if key in seen:
            continue
        seen[key] = rec
        out.append((rec, a))
    return out


_TABLE_CACHE = None


def classify_all():
    """Produce the full classification across all 23 lattices with roots."""
    global _TABLE_CACHE
    if _TABLE_CACHE is not None:
        return _TABLE_CACHE
    verify_T()
    records = []
    for name in CLASSIFICATION_LATTICE_ORDER:
        nl = build_niemeier(name)
        merged = _classify_lattice(nl)
        recs = [rec for rec, _ in merged]
        _assign_reference_ids(name, recs)
        records.extend(recs)
    table = ClassificationTable(records)
    _check_census(table)
    _TABLE_CACHE = table
    return table


def _assign_reference_ids(name, recs):
    """Attach the published row ids by content matching within one lattice."""
    expected = [row for row in REFERENCE_ROWS if row[1] == name]
    by_content = {}
    for rid, _, _, nroot, rank, tors in expected:
        by_content.setdefault((nroot, rank, tors), []).append(rid)
    for rec in sorted(recs, key=lambda r: r.sort_key):
        key = (rec.n_root_string, rec.mw_rank, rec.torsion_string)
        ids = by_content.get(key)
        if ids:
            rec.id = ids.pop(0)
        else:
            rec.id = f"?{name}"


def _check_census(table):
    n = len(table.records)
    ranks = [r.mw_rank for r in table.records]
    fps = {r.frame_fingerprint for r in table.records}
    problems = []
    if n != 52:
        problems.append(f"expected 52 records, got {n}")
    if ranks.count(2) != 17:
        problems.append(f"expected 17 records of rank 2, got {ranks.count(2)}")
    if ranks.count(3) != 1:
        problems.append(f"expected 1 record of rank 3, got {ranks.count(3)}")
    if len(fps) != n:
        problems.append("frame fingerprints are not pairwise distinct")
    if problems:
        raise LatticeError("classification census failed: " + "; ".join(problems))


@dataclass
class TableDiff:
    missing: list      # reference rows not produced
    unexpected: list   # produced records with no reference partner

    def is_empty(self):
        return not self.missing and not self.unexpected

    def lines(self):
        out = []
        for row in self.missing:
            out.append(f"missing row: id={row[0]} {row[1]} {row[3]} r={row[4]} tors={row[5]}")
        for rec in self.unexpected:
            out.append(f"unexpected row: {rec.niemeier} {rec.n_root_string} "
                       f"r={rec.mw_rank} tors={rec.torsion_string}")
        return out


def compare_table(computed, reference_rows=None):
    """Multiset comparison of computed records against the reference rows."""
    rows = REFERENCE_ROWS if reference_rows is None else reference_rows
    remaining = list(rows)
    unexpected = []
    for rec in computed.records:
        key = (rec.niemeier, rec.n_root_string, rec.mw_rank, rec.torsion_string)
        for i, row in enumerate(remaining):
            if (row[1], row[3], row[4], row[5]) == key:
                remaining.pop(i)
                break
        else:
            unexpected.append(rec)
    return TableDiff(remaining, unexpected)
