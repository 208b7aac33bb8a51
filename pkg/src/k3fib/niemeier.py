"""The 23 rank-24 even unimodular lattices with roots, built from glue data.

Each lattice is the saturation of its root lattice together with explicit
glue vectors (rational combinations of simple roots lying in the dual).
Coordinates: "root coords" are coefficients on the concatenated simple-root
bases of the components; "L coords" are coefficients on a Z-basis of the
full lattice.  The change of basis is integral on the root side.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .intmat import (bareiss_det, gram_of, hnf, mat_mul, solve_left, transpose)
from .lattice import IntegerLattice, LatticeError, quotient_group
from .roots import ADEType, ade, decompose_root_set, enumerate_roots, standard_gram, standard_root_lattice


def glue_vector(symbol, component_type, multiplier=1):
    """Rational glue coordinates on one component's simple-root basis.

    Symbols: 'alpha' (A_n), 'delta'/'deltabar'/'deltatilde' (D_l),
    'eta' (E_6 or E_7).  The result lies in the dual of the component.
    """
    t = ade(component_type)
    n = t.rank
    if symbol == "alpha":
        if t.family != "A":
            raise LatticeError("alpha glue needs an A component")
        v = [Fraction(n - j + 1, n + 1) for j in range(1, n + 1)]
    elif symbol in ("delta", "deltabar", "deltatilde"):
        if t.family != "D":
            raise LatticeError("delta glue needs a D component")
        l = n
        if symbol == "delta":
            v = [Fraction(i, 2) for i in range(1, l - 1)] + \
                [Fraction(l - 2, 4), Fraction(l, 4)]
        elif symbol == "deltatilde":
            v = [Fraction(i, 2) for i in range(1, l - 1)] + \
                [Fraction(l, 4), Fraction(l - 2, 4)]
        else:
            v = [Fraction(1)] * (l - 2) + [Fraction(1, 2), Fraction(1, 2)]
    elif symbol == "eta":
        if t.family != "E" or n not in (6, 7):
            raise LatticeError("eta glue needs E6 or E7")
        if n == 6:
            v = [Fraction(-c, 3) for c in (2, 3, 4, 6, 5, 4)]
        else:
            v = [Fraction(-c, 2) for c in (2, 3, 4, 6, 5, 4, 3)]
    else:
        raise LatticeError(f"unknown glue symbol {symbol!r}")
    return [multiplier * x for x in v]


def _shifts(word):
    return [tuple(word[i:] + word[:i]) for i in range(len(word))]


def _code_gens(lead_mult, word):
    gens = []
    for shift in _shifts(list(word)):
        gen = [(0, "alpha", lead_mult)]
        gen += [(i + 1, "alpha", c) for i, c in enumerate(shift) if c]
        gens.append(gen)
    return gens


def _hexacode_gens():
    # Hexacode over F4 = {0, 1, w, w^2}: words (a, b, c, f(1), f(w), f(w^2))
    # with f(x) = a x^2 + b x + c.  F4 maps additively onto the D4
    # discriminant group via 0->0, 1->deltabar, w->delta, w^2->deltatilde.
    add = {  # F4 addition table on symbols 0..3 = {0, 1, w, w^2}
        (0, 0): 0, (0, 1): 1, (0, 2): 2, (0, 3): 3,
        (1, 1): 0, (1, 2): 3, (1, 3): 2, (2, 2): 0, (2, 3): 1, (3, 3): 0,
    }
    mul = {
        (0, 0): 0, (0, 1): 0, (0, 2): 0, (0, 3): 0,
        (1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 2): 3, (2, 3): 1, (3, 3): 2,
    }

    def f4_add(x, y):
        return add[(x, y)] if (x, y) in add else add[(y, x)]

    def f4_mul(x, y):
        return mul[(x, y)] if (x, y) in mul else mul[(y, x)]

    symbol = {1: "deltabar", 2: "delta", 3: "deltatilde"}
    gens = []
    for a, b, c in ((1, 0, 0), (0, 1, 0), (0, 0, 1),
                    (2, 0, 0), (0, 2, 0), (0, 0, 2)):
        word = [a, b, c]
        for x in (1, 2, 3):
            x2 = f4_mul(x, x)
            word.append(f4_add(f4_add(f4_mul(a, x2), f4_mul(b, x)), c))
        gens.append([(i, symbol[s], 1) for i, s in enumerate(word) if s])
    return gens


# name -> (component list, glue generators, expected glue invariant factors)
NIEMEIER_TABLE = {
    "E8^3": ("E8 E8 E8", [], ()),
    "E8 D16": ("E8 D16", [[(1, "delta", 1)]], (2,)),
    "E7^2 D10": ("E7 E7 D10",
                 [[(0, "eta", 1), (2, "delta", 1)],
                  [(0, "eta", 1), (1, "eta", 1), (2, "deltabar", 1)]],
                 (2, 2)),
    "E7 A17": ("E7 A17", [[(0, "eta", 1), (1, "alpha", 3)]], (6,)),
    "D24": ("D24", [[(0, "delta", 1)]], (2,)),
    "D12^2": ("D12 D12",
              [[(0, "delta", 1), (1, "deltabar", 1)],
               [(0, "deltabar", 1), (1, "delta", 1)]],
              (2, 2)),
    "D8^3": ("D8 D8 D8",
             [[(0, "delta", 1), (1, "deltabar", 1), (2, "deltabar", 1)],
              [(0, "deltabar", 1), (1, "delta", 1), (2, "deltabar", 1)],
              [(0, "deltabar", 1), (1, "deltabar", 1), (2, "delta", 1)]],
             (2, 2, 2)),
    "D9 A15": ("D9 A15", [[(0, "delta", 1), (1, "alpha", 2)]], (8,)),
    "E6^4": ("E6 E6 E6 E6",
             [[(0, "eta", 1), (1, "eta", 1), (2, "eta", 1)],
              [(0, "eta", -1), (2, "eta", 1), (3, "eta", 1)]],
             (3, 3)),
    "A11 E6 D7": ("A11 E6 D7",
                  [[(0, "alpha", 1), (1, "eta", 1), (2, "delta", 1)]],
                  (12,)),
    "D6^4": ("D6 D6 D6 D6",
             [[(1, "delta", 1), (2, "deltabar", 1), (3, "deltatilde", 1)],
              [(0, "deltabar", 1), (1, "deltatilde", 1), (3, "delta", 1)],
              [(0, "delta", 1), (1, "deltabar", 1), (3, "deltatilde", 1)],
              [(0, "delta", 1), (2, "deltatilde", 1), (3, "deltabar", 1)]],
             (2, 2, 2, 2)),
    "D6 A9^2": ("D6 A9 A9",
                [[(0, "deltatilde", 1), (2, "alpha", 5)],
                 [(0, "delta", 1), (1, "alpha", 1), (2, "alpha", 2)]],
                (2, 10)),
    # The second generator reads the first A7 glue with the opposite diagram
    # orientation (-alpha); the verification below pins the convention.
    "D5^2 A7^2": ("D5 D5 A7 A7",
                  [[(0, "delta", 1), (1, "delta", 1), (2, "alpha", 2)],
                   [(0, "delta", 1), (1, "delta", 2), (2, "alpha", -1), (3, "alpha", 1)]],
                  (4, 8)),
    "A8^3": ("A8 A8 A8",
             [[(0, "alpha", 3), (1, "alpha", 3)],
              [(0, "alpha", 1), (1, "alpha", 2), (2, "alpha", 2)]],
             (3, 9)),
    "A5^4 D4": ("A5 A5 A5 A5 D4",
                [[(0, "alpha", 5), (1, "alpha", 2), (2, "alpha", 1), (4, "deltabar", 1)],
                 [(0, "alpha", 5), (1, "alpha", 3), (2, "alpha", 2), (3, "alpha", 4), (4, "delta", 1)],
                 [(0, "alpha", 3), (3, "alpha", 3), (4, "deltatilde", 1)]],
                (2, 6, 6)),
    "A6^4": ("A6 A6 A6 A6",
             [[(0, "alpha", 1), (1, "alpha", 2), (2, "alpha", 1), (3, "alpha", 6)],
              [(0, "alpha", 1), (1, "alpha", 6), (2, "alpha", 2), (3, "alpha", 1)]],
             (7, 7)),
    "D4^6": ("D4 D4 D4 D4 D4 D4", _hexacode_gens(), (2,) * 6),
    "A24": ("A24", [[(0, "alpha", 5)]], (5,)),
    "A12^2": ("A12 A12", [[(0, "alpha", 2), (1, "alpha", 3)]], (13,)),
    "A4^6": ("A4 A4 A4 A4 A4 A4",
             [[(0, "alpha", 1), (1, "alpha", 1), (2, "alpha", 1), (3, "alpha", 4), (4, "alpha", 4)],
              [(0, "alpha", 1), (1, "alpha", 1), (2, "alpha", 4), (4, "alpha", 1), (5, "alpha", 4)],
              [(0, "alpha", 1), (2, "alpha", 4), (3, "alpha", 1), (4, "alpha", 4), (5, "alpha", 1)]],
             (5, 5, 5)),
    "A3^8": ("A3 A3 A3 A3 A3 A3 A3 A3",
             _code_gens(3, (2, 0, 0, 1, 0, 1, 1)), (4, 4, 4, 4)),
    "A2^12": ("A2 " * 11 + "A2",
              _code_gens(2, (1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2)), (3,) * 6),
    "A1^24": ("A1 " * 23 + "A1",
              _code_gens(1, (0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1)),
              (2,) * 12),
}

NIEMEIER_NAMES = list(NIEMEIER_TABLE)

# The 24th lattice has no roots, so it admits no embedding of a root lattice
# and contributes nothing to the classification.
ROOTLESS_NIEMEIER = "Leech"


@dataclass
class NiemeierLattice:
    name: str
    root_components: tuple        # ADETypes in declared order
    offsets: tuple                # starting coordinate of each component
    glue_generators: tuple        # rational vectors in root coords
    full_lattice: IntegerLattice  # rank 24, own coordinates, Gram integral
    root_gram: tuple              # 24x24 block Gram in root coords
    root_basis_in_L: tuple        # 24x24 integer: simple roots in L coords
    roots_in_L: tuple             # all roots, L coords
    roots_by_component: tuple     # index ranges into roots_in_L per component

    def component_span(self, idx):
        off = self.offsets[idx]
        return range(off, off + self.root_components[idx].rank)

    def to_L(self, root_vec):
        """Map a root-coordinate vector (len 24) to L coordinates."""
        x = self.root_basis_in_L
        return tuple(sum(root_vec[i] * x[i][j] for i in range(24)) for j in range(24))

    def component_vector_to_L(self, comp_idx, vec):
        """Map a vector on one component's simple-root basis to L coords."""
        full = [0] * 24
        off = self.offsets[comp_idx]
        for i, v in enumerate(vec):
            full[off + i] = v
        return self.to_L(full)


_CACHE = {}


def build_niemeier(name):
    """Construct one of the 23 root-full rank-24 even unimodular lattices."""
    if name in _CACHE:
        return _CACHE[name]
    if name == ROOTLESS_NIEMEIER:
        raise LatticeError("the rootless lattice is a named stub only; it admits "
                           "no A5+A1 and is excluded from classification")
    if name not in NIEMEIER_TABLE:
        raise LatticeError(f"unknown lattice name {name!r}")
    comp_str, glue_spec, expected = NIEMEIER_TABLE[name]
    comps = tuple(ade(s) for s in comp_str.split())
    offsets = []
    off = 0
    for t in comps:
        offsets.append(off)
        off += t.rank
    if off != 24:
        raise LatticeError(f"{name}: components total rank {off}, expected 24")
    # block Gram in root coordinates
    g_root = [[0] * 24 for _ in range(24)]
    for t, o in zip(comps, offsets):
        sg = standard_gram(t)
        for i in range(t.rank):
            for j in range(t.rank):
                g_root[o + i][o + j] = sg[i][j]
    # glue generators as rational root-coordinate vectors
    gens = []
    for spec in glue_spec:
        v = [Fraction(0)] * 24
        for comp_idx, symbol, mult in spec:
            local = glue_vector(symbol, comps[comp_idx], mult)
            o = offsets[comp_idx]
            for i, x in enumerate(local):
                v[o + i] += x
        gens.append(v)
    # dual membership: every generator pairs integrally with every simple root
    for v in gens:
        pr = [sum(v[i] * g_root[i][j] for i in range(24)) for j in range(24)]
        if any(x.denominator != 1 for x in pr):
            raise LatticeError(f"{name}: glue generator fails dual membership")
    # saturate: Z-span of root basis plus glue generators
    denom = 1
    for v in gens:
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    rows = [[denom if i == j else 0 for j in range(24)] for i in range(24)]
    rows += [[int(x * denom) for x in v] for v in gens]
    h = hnf(rows)
    basis = [[Fraction(x, denom) for x in row] for row in h]  # L basis, root coords
    gram_frac = mat_mul(mat_mul(basis, g_root), transpose(basis))
    if any(x.denominator != 1 for row in gram_frac for x in row):
        raise LatticeError(f"{name}: glued lattice is not integral")
    gram = [[int(x) for x in row] for row in gram_frac]
    full = IntegerLattice(gram, name=name)
    # simple roots in L coordinates (must be integral: L contains the roots)
    sol = solve_left(basis, [[1 if j == i else 0 for j in range(24)] for i in range(24)])
    if sol is None or any(x.denominator != 1 for row in sol for x in row):
        raise LatticeError(f"{name}: root lattice does not embed integrally")
    x_mat = tuple(tuple(int(v) for v in row) for row in sol)
    # all roots, in root coords per component, then mapped to L coords
    roots_L = []
    ranges = []
    for t, o in zip(comps, offsets):
        comp_roots = enumerate_roots(standard_root_lattice(t))
        start = len(roots_L)
        for r in comp_roots:
            full_vec = [0] * 24
            for i, v in enumerate(r):
                full_vec[o + i] = v
            roots_L.append(tuple(sum(full_vec[i] * x_mat[i][j] for i in range(24))
                                 for j in range(24)))
        ranges.append((start, len(roots_L)))
    nl = NiemeierLattice(
        name=name,
        root_components=comps,
        offsets=tuple(offsets),
        glue_generators=tuple(tuple(v) for v in gens),
        full_lattice=full,
        root_gram=tuple(tuple(r) for r in g_root),
        root_basis_in_L=x_mat,
        roots_in_L=tuple(roots_L),
        roots_by_component=tuple(ranges),
    )
    _CACHE[name] = nl
    return nl


def _component_class_min_norm(t, frac_vec):
    """Minimal norm of the dual-lattice coset given by fractional coordinates.

    `frac_vec` is the componentwise fractional part (in [0,1)) of a dual
    vector on the simple-root basis of component type `t`.  Closed forms.
    """
    if all(x == 0 for x in frac_vec):
        return Fraction(0)
    n = t.rank
    if t.family == "A":
        k = (frac_vec[-1] * (n + 1)) % (n + 1)
        if k.denominator != 1:
            raise LatticeError("invalid A-type discriminant class")
        k = int(k)
        return Fraction(-k * (n + 1 - k), n + 1)
    if t.family == "D":
        if all(x == 0 for x in frac_vec[: n - 2]) and \
           frac_vec[n - 2] == frac_vec[n - 1] == Fraction(1, 2):
            return Fraction(-1)          # vector class
        return Fraction(-n, 4)           # either spinor class
    if n == 6:
        return Fraction(-4, 3)
    if n == 7:
        return Fraction(-3, 2)
    raise LatticeError("E8 has no nontrivial discriminant class")


@dataclass
class NiemeierReport:
    name: str
    even: bool
    unimodular: bool
    rank24: bool
    negative_definite: bool
    glue_order_matches: bool
    glue_group: tuple
    expected_glue_group: tuple
    no_extra_roots: bool
    root_types_match: bool

    def ok(self):
        return all((self.even, self.unimodular, self.rank24, self.negative_definite,
                    self.glue_order_matches, self.no_extra_roots, self.root_types_match))


def verify_niemeier(nl):
    """Check the defining axioms and the declared glue structure."""
    lat = nl.full_lattice
    det = lat.det()
    det_root = 1
    for t in nl.root_components:
        det_root *= t.det_abs
    # glue group: quotient of L by the embedded root basis
    quot = quotient_group(lat, [list(r) for r in nl.root_basis_in_L])
    glue = quot.torsion.invariant_factors
    expected = NIEMEIER_TABLE[nl.name][2]
    order = quot.torsion.order
    glue_ok = (glue == expected and quot.free_rank == 0
               and order * order == det_root)
    # no new roots: scan all glue cosets via per-component class minimal norms
    no_extra = True
    elems = _glue_elements(nl)
    for classes in elems:
        if all(all(x == 0 for x in c) for c in classes):
            continue
        total = sum(_component_class_min_norm(t, c)
                    for t, c in zip(nl.root_components, classes))
        if total == -2:
            no_extra = False
            break
    types_ok = _root_types_match(nl)
    return NiemeierReport(
        name=nl.name,
        even=lat.is_even(),
        unimodular=abs(det) == 1,
        rank24=lat.rank == 24,
        negative_definite=lat.is_negative_definite(),
        glue_order_matches=glue_ok,
        glue_group=glue,
        expected_glue_group=expected,
        no_extra_roots=no_extra,
        root_types_match=types_ok,
    )


def _glue_elements(nl):
    """All elements of L/L_root as tuples of per-component fractional classes."""
    quot = quotient_group(nl.full_lattice, [list(r) for r in nl.root_basis_in_L])
    # generator vectors are in L coords; convert to root coords via the basis
    basis = _root_coord_basis(nl)
    gens_root = []
    for gen in quot.torsion_generators:
        v = [sum(Fraction(gen[i]) * basis[i][j] for i in range(24)) for j in range(24)]
        gens_root.append(v)
    factors = quot.torsion.invariant_factors
    vectors = [tuple(Fraction(0) for _ in range(24))]
    for d, g in zip(factors, gens_root):
        gk = [tuple((k * x) % 1 for x in g) for k in range(d)]
        vectors = [tuple((a + b) % 1 for a, b in zip(v, gv))
                   for v in vectors for gv in gk]
    elems = []
    for v in vectors:
        classes = tuple(tuple(v[o:o + t.rank])
                        for t, o in zip(nl.root_components, nl.offsets))
        elems.append(classes)
    return elems


def _root_coord_basis(nl):
    """L-basis vectors expressed in root coordinates (rational)."""
    # inverse of root_basis_in_L
    sol = solve_left([list(r) for r in nl.root_basis_in_L],
                     [[1 if j == i else 0 for j in range(24)] for i in range(24)])
    return sol


def _root_types_match(nl):
    """Roots of L are exactly the component roots (checked by the coset scan)
    and they decompose into the declared types."""
    pair = nl.full_lattice.pairing
    # pairing matrix via blocks: roots of one component pair to zero with others
    decomp = decompose_root_set(list(nl.roots_in_L), pair,
                                pair_matrix=_root_pair_matrix(nl))
    return decomp.type_multiset() == tuple(sorted(nl.root_components))


def _root_pair_matrix(nl):
    import numpy as np
    g = np.array(nl.full_lattice.gram, dtype=np.int64)
    roots = np.array(nl.roots_in_L, dtype=np.int64)
    return (roots @ g @ roots.T).tolist()
