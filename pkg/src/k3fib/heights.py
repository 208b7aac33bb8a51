"""Height pairing on sections, local correction terms, torsion bounds.

The height of a section P is h(P) = 2*chi + 2 P.O - sum of local corrections
over reducible fibers; the pairing of two sections replaces 2*chi + 2 P.O by
chi + P.O + Q.O + P.Q.  Torsion sections are exactly the height-zero ones.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import FiniteAbelianGroup, LatticeError
from .roots import ade

# component spec for D/E-type fibers: 0 (zero component), "near", "far", "far2"
NEAR, FAR, FAR2 = "near", "far", "far2"


@dataclass(frozen=True)
class FiberOnSection:
    """One reducible fiber together with the component a section meets.

    `dynkin` is the ADE type of the fiber ('A1', 'D8', 'E7', ...).  For
    A-type fibers read as I_n (n = rank+1), `component` is an integer index
    0..n-1 around the cycle.  An A1 or A2 fiber may instead be flagged
    additive (type III / IV) via kind='III'/'IV'.  For D-type fibers
    (I_{rank-4}*), `component` is 0, 'near', 'far' or 'far2'.  For E-type,
    component 0 or an index among the simple components.
    """

    dynkin: str
    component: object = 0
    kind: str = ""          # optional explicit Kodaira reading for A1/A2

    def fiber_type(self):
        t = ade(self.dynkin)
        if self.kind:
            return self.kind
        if t.family == "A":
            return f"I{t.rank + 1}"
        if t.family == "D":
            return f"I{t.rank - 4}*"
        return {6: "IV*", 7: "III*", 8: "II*"}[t.rank]


def local_contribution(fiber_dynkin, i, j=None, kind=""):
    """Local correction contr(i) or contr(i, j) for one reducible fiber.

    A-type (fiber I_n with n = rank+1): contr(i) = i(n-i)/n and
    contr(i, j) = min(i,j) * (n - max(i,j)) / n.  Additive readings III/IV
    and the D/E types use the standard constants.
    """
    t = ade(fiber_dynkin)
    if j is None:
        j = i
    if i == 0 or j == 0:
        return Fraction(0)
    if kind == "III":
        if t.rank != 1:
            raise LatticeError("type III fiber must carry A1")
        return Fraction(1, 2)
    if kind == "IV":
        if t.rank != 2:
            raise LatticeError("type IV fiber must carry A2")
        return Fraction(2, 3) if i == j else Fraction(1, 3)
    if t.family == "A":
        n = t.rank + 1
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
            raise LatticeError(f"invalid component index for I{n}")
        lo, hi = min(i, j), max(i, j)
        return Fraction(lo * (n - hi), n)
    if t.family == "D":
        m = t.rank - 4  # fiber I_m*
        for c in (i, j):
            if c not in (NEAR, FAR, FAR2):
                raise LatticeError(f"invalid component {c!r} for I{m}*")
        if i == j:
            return Fraction(1) if i == NEAR else Fraction(1) + Fraction(m, 4)
        if NEAR in (i, j):
            return Fraction(1, 2)
        return Fraction(m + 2, 4)  # two distinct far components
    if t.rank == 6:  # IV*
        return Fraction(4, 3) if i == j else Fraction(2, 3)
    if t.rank == 7:  # III*
        return Fraction(3, 2)
    raise LatticeError("II* fiber has no nontrivial simple component")


@dataclass(frozen=True)
class SectionData:
    """Intersection data of one section: P.O and the components it meets."""

    po: int
    fibers: tuple  # FiberOnSection entries, one per reducible fiber


def height_pairing(p, q=None, pq=0, chi=2):
    """Height h(P) (q omitted) or pairing <P, Q> of two sections.

    Both sections must list the same reducible fibers in the same order.
    """
    if q is None:
        total = Fraction(2 * chi + 2 * p.po)
        for f in p.fibers:
            total -= local_contribution(f.dynkin, f.component, kind=f.kind)
        return total
    if len(p.fibers) != len(q.fibers):
        raise LatticeError("sections disagree on the reducible fibers")
    total = Fraction(chi + p.po + q.po + pq)
    for fp, fq in zip(p.fibers, q.fibers):
        if fp.dynkin != fq.dynkin or fp.kind != fq.kind:
            raise LatticeError("sections disagree on the reducible fibers")
        total -= local_contribution(fp.dynkin, fp.component, fq.component, kind=fp.kind)
    return total


def is_torsion_section(p, chi=2):
    """Height-zero test: torsion sections are exactly the height-0 ones."""
    return height_pairing(p, chi=chi) == 0


# bound represented as (a, b): the group embeds in Z/a x Z/b; 0 means no bound
NO_BOUND = (0, 0)


def _meet(b1, b2):
    from math import gcd
    return (gcd(b1[0], b2[0]), gcd(b1[1], b2[1]))


def torsion_bound(fiber_dynkins):
    """Upper bound on the torsion group from the starred fibers present.

    Fibers are given by ADE type under the dictionary D_n -> I_{n-4}*,
    E6 -> IV*, E7 -> III*, E8 -> II*.  A-type fibers impose no bound here.
    Returns (a, b) meaning the torsion embeds in Z/a x Z/b ((0,0): no bound).
    """
    bound = NO_BOUND
    for spec in fiber_dynkins:
        t = ade(spec)
        if t.family == "A":
            continue
        if t.family == "D":
            m = t.rank - 4
            cap = (2, 2) if m % 2 == 0 else (1, 4)
        elif t.rank == 6:
            cap = (1, 3)
        elif t.rank == 7:
            cap = (1, 2)
        else:
            cap = (1, 1)
        bound = _meet(bound, cap)
    return bound


def group_within_bound(group, bound):
    """Does a FiniteAbelianGroup embed in Z/a x Z/b for bound (a, b)?"""
    if bound == NO_BOUND:
        return True
    fs = group.invariant_factors
    if len(fs) > 2:
        return False
    a, b = bound
    padded = (1,) * (2 - len(fs)) + fs
    return a % padded[0] == 0 and b % padded[1] == 0
