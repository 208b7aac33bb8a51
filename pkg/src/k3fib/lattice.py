"""Integral lattices with exact arithmetic.

An IntegerLattice is a finitely generated free Z-module with a symmetric
integer Gram matrix.  Sublattices carry their basis in the coordinates of an
ambient lattice.  All operations are pure; instances are immutable.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .intmat import (bareiss_det, gram_of, hnf, left_kernel, mat_mul,
                     smith_diagonal, snf_with_transforms, transpose)


class LatticeError(ValueError):
    pass


def _freeze(m):
    return tuple(tuple(row) for row in m)


class IntegerLattice:
    """A nondegenerate integral lattice given by its Gram matrix.

    If `basis_in_ambient` is given, rows are coordinates of the basis inside
    `ambient`, and the Gram matrix is induced from the ambient pairing.
    """

    def __init__(self, gram, ambient=None, basis_in_ambient=None, name=None):
        gram = [list(r) for r in gram]
        n = len(gram)
        if any(len(r) != n for r in gram):
            raise LatticeError("gram matrix must be square")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("gram matrix must be symmetric")
        if n and bareiss_det(gram) == 0:
            raise LatticeError("degenerate lattice rejected")
        if (ambient is None) != (basis_in_ambient is None):
            raise LatticeError("ambient and basis_in_ambient go together")
        if ambient is not None:
            basis = [list(r) for r in basis_in_ambient]
            if len(basis) != n:
                raise LatticeError("basis size does not match rank")
            if any(len(r) != ambient.rank for r in basis):
                raise LatticeError("basis vectors do not fit ambient rank")
            if gram_of(basis, [list(r) for r in ambient.gram]) != gram:
                raise LatticeError("gram does not match induced pairing")
            self.basis_in_ambient = _freeze(basis)
        else:
            self.basis_in_ambient = None
        self.ambient = ambient
        self.gram = _freeze(gram)
        self.rank = n
        self.name = name

    def det(self):
        return bareiss_det([list(r) for r in self.gram])

    def pairing(self, v, w):
        """Pairing of two coordinate vectors in this lattice's own basis."""
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v):
        return self.pairing(v, v)

    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_negative_definite(self):
        # leading principal minors of -G must all be positive
        g = [[-x for x in row] for row in self.gram]
        for k in range(1, self.rank + 1):
            minor = bareiss_det([row[:k] for row in g[:k]])
            if minor <= 0:
                return False
        return True

    def direct_sum(self, other):
        n, m = self.rank, other.rank
        g = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                g[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                g[n + i][n + j] = other.gram[i][j]
        return IntegerLattice(g)

    def __repr__(self):
        label = self.name or f"lattice(rank={self.rank})"
        return f"<IntegerLattice {label} det={self.det()}>"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant-factor form d1 | d2 | ... (each > 1)."""

    invariant_factors: tuple

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d <= 1 for d in fs):
            raise LatticeError("invariant factors must exceed 1")
        if any(fs[i + 1] % fs[i] != 0 for i in range(len(fs) - 1)):
            raise LatticeError("invariant factors must form a divisibility chain")

    @property
    def order(self):
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def is_trivial(self):
        return not self.invariant_factors

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


TRIVIAL_GROUP = FiniteAbelianGroup(())


@dataclass
class Quotient:
    """Result of ambient/span(sub): torsion part, free rank, coset data."""

    torsion: FiniteAbelianGroup
    free_rank: int
    # one coordinate vector (in the ambient lattice's basis) per torsion generator
    torsion_generators: tuple

    @property
    def order(self):
        return self.torsion.order


def _coords_in(ambient_basis, vectors):
    """Integer coordinates of `vectors` w.r.t. `ambient_basis`, or raise."""
    from .intmat import solve_left
    sol = solve_left(ambient_basis, vectors)
    if sol is None:
        raise LatticeError("vector lies outside the ambient lattice span")
    out = []
    for row in sol:
        if any(x.denominator != 1 for x in row):
            raise LatticeError("vector is not an integral combination of the basis")
        out.append([int(x) for x in row])
    return out


def orthogonal_complement(ambient, sub_vectors):
    """Primitive orthogonal complement of span(sub_vectors) inside `ambient`.

    `sub_vectors` are rows in ambient coordinates.  The result carries its
    basis in ambient coordinates and the induced Gram matrix.
    """
    sub = [list(v) for v in sub_vectors]
    if any(len(v) != ambient.rank for v in sub):
        raise LatticeError("sub vector dimension mismatch")
    g = [list(r) for r in ambient.gram]
    pair = mat_mul(g, transpose(sub)) if sub else [[] for _ in range(ambient.rank)]
    ker = left_kernel([[row[j] for j in range(len(sub))] for row in pair]) if sub \
        else [[1 if i == j else 0 for j in range(ambient.rank)] for i in range(ambient.rank)]
    gram = gram_of(ker, g)
    return IntegerLattice(gram, ambient=ambient, basis_in_ambient=ker)


def quotient_group(ambient, sub_vectors):
    """Quotient ambient / <sub_vectors>: torsion invariant factors + free rank.

    `sub_vectors` are rows in ambient coordinates (must lie in the ambient
    lattice).  Torsion generators are returned as ambient coordinate vectors.
    """
    sub = [list(v) for v in sub_vectors]
    if any(len(v) != ambient.rank for v in sub):
        raise LatticeError("sub vector dimension mismatch")
    n = ambient.rank
    if not sub:
        return Quotient(TRIVIAL_GROUP, n, ())
    d, s, t, tinv = snf_with_transforms(sub)
    k = min(len(sub), n)
    diag = [d[i][i] for i in range(k)]
    rank = sum(1 for x in diag if x != 0)
    free_rank = n - rank
    factors = []
    gens = []
    # quotient Z^n / rowspace(sub) = + Z/d_i on coordinates z = v*t
    # generator for factor d_i is the i-th row of tinv (preimage of e_i)
    for i in range(rank):
        if diag[i] > 1:
            factors.append(diag[i])
            gens.append(tuple(tinv[i]))
    order = sorted(range(len(factors)), key=lambda j: factors[j])
    torsion = FiniteAbelianGroup(tuple(factors[j] for j in order))
    return Quotient(torsion, free_rank, tuple(gens[j] for j in order))


@dataclass(frozen=True)
class DiscriminantForm:
    """Finite quadratic form on the discriminant group L*/L of an even lattice.

    q_values are the quadratic form on the invariant-factor generators
    (rationals mod 2), b_values the pairings between generators (mod 1).
    """

    group: FiniteAbelianGroup
    q_values: tuple
    b_values: tuple  # matrix, b[i][j] mod 1

    def q_of(self, coeffs):
        """q of an element given as integer coefficients on the generators."""
        total = Fraction(0)
        for i, ci in enumerate(coeffs):
            total += ci * ci * self.q_values[i]
            for j in range(i + 1, len(coeffs)):
                total += 2 * ci * coeffs[j] * self.b_values[i][j]
        return total % 2

    def elements(self):
        """All group elements as coefficient tuples (small groups only)."""
        from itertools import product
        ranges = [range(d) for d in self.group.invariant_factors]
        return list(product(*ranges))

    def is_isometric(self, other):
        """Exhaustive isometry search between two small discriminant forms."""
        if self.group.invariant_factors != other.group.invariant_factors:
            return False
        facs = self.group.invariant_factors
        if not facs:
            return True
        elems = other.elements()

        def order_of(coeffs):
            o = 1
            for c, d in zip(coeffs, facs):
                k = d // gcd(c, d)
                o = o * k // gcd(o, k)
            return o

        def b_of(x, y):
            # b(g, g) = q(g) mod 1 for the bilinear form of a quadratic form
            total = Fraction(0)
            for i in range(len(facs)):
                for j in range(len(facs)):
                    bij = other.q_values[i] % 1 if i == j else other.b_values[i][j]
                    total += x[i] * y[j] * bij
            return total % 1

        picks = []

        def backtrack(i):
            if i == len(facs):
                # images must generate the whole group
                span = {(0,) * len(facs)}
                for img, d in zip(picks, facs):
                    new = set()
                    for s in span:
                        for k in range(d):
                            new.add(tuple((s[t] + k * img[t]) % facs[t]
                                          for t in range(len(facs))))
                    span = new
                return len(span) == self.group.order
            for cand in elems:
                if order_of(cand) != facs[i]:
                    continue
                if other.q_of(cand) != self.q_values[i]:
                    continue
                ok = True
                for j in range(i):
                    if b_of(picks[j], cand) != self.b_values[j][i] % 1:
                        ok = False
                        break
                if not ok:
                    continue
                picks.append(cand)
                if backtrack(i + 1):
                    return True
                picks.pop()
            return False

        return backtrack(0)


def dual_basis_classes(lat):
    """Generators of L*/L as rational vectors in the coordinates of `lat`.

    Returns (invariant_factors, generator_rows) where each generator row g
    satisfies order(g) = corresponding factor.
    """
    g = [list(r) for r in lat.gram]
    d, s, t, tinv = snf_with_transforms(g)
    n = lat.rank
    facs, gens = [], []
    for i in range(n):
        di = abs(d[i][i])
        if di > 1:
            # L* = G^{-1} Z^n; with S G T = D, generator columns are t / d_i
            col = [Fraction(t[r][i], di) for r in range(n)]
            facs.append(di)
            gens.append(col)
    order = sorted(range(len(facs)), key=lambda j: facs[j])
    return [facs[j] for j in order], [gens[j] for j in order]


def discriminant_form(lat):
    """Discriminant group and quadratic/bilinear form of an even lattice."""
    if not lat.is_even():
        raise LatticeError("discriminant form requires an even lattice")
    facs, gens = dual_basis_classes(lat)
    g = lat.gram
    n = lat.rank

    def pair(u, v):
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n))

    q = tuple(pair(v, v) % 2 for v in gens)
    b = tuple(tuple(pair(u, v) % 1 for v in gens) for u in gens)
    return DiscriminantForm(FiniteAbelianGroup(tuple(facs)), q, b)


@dataclass(frozen=True)
class LatticePredicates:
    even: bool
    unimodular: bool
    determinant: int
    negative_definite: bool


def lattice_predicates(lat):
    det = lat.det()
    return LatticePredicates(
        even=lat.is_even(),
        unimodular=abs(det) == 1,
        determinant=det,
        negative_definite=lat.is_negative_definite(),
    )


def saturation(ambient_rank, vectors):
    """Basis of the saturation (primitive closure) of span(vectors) in Z^n."""
    vecs = hnf([list(v) for v in vectors])
    if not vecs:
        return []
    # saturate: solve via kernel of kernel
    ker = left_kernel(transpose(vecs))
    if not ker:
        return [[1 if i == j else 0 for j in range(ambient_rank)]
                for i in range(ambient_rank)]
    sat = left_kernel(transpose(ker))
    return sat


def is_primitive(vectors):
    """True when span(vectors) is saturated in Z^n (torsion-free quotient)."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return True
    return all(d == 1 for d in smith_diagonal(vecs))
