"""Exact integer and rational matrix routines used by the lattice engine.

Everything here works on plain Python ints / Fractions (arbitrary precision),
with matrices as lists of row lists.  No floating point.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def gram_of(basis, gram):
    """Gram matrix of row vectors `basis` under the pairing `gram`."""
    return mat_mul(mat_mul(basis, gram), transpose(basis))


def bareiss_det(m):
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_int(m):
    """Rank of a matrix with int or Fraction entries."""
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def hnf(rows):
    """Row-style Hermite normal form basis of the row space of an integer matrix.

    Returns a canonical basis (positive pivots, entries above pivots reduced)
    of the generated Z-module, not of its saturation.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []  # kept with strictly increasing pivot columns
    for vec in rows:
        v = vec[:]
        while True:
            p = next((i for i, x in enumerate(v) if x != 0), None)
            if p is None:
                break
            hit = next((b for b in basis
                        if next(i for i, x in enumerate(b) if x != 0) == p), None)
            if hit is None:
                basis.append(v)
                basis.sort(key=lambda r: next(i for i, x in enumerate(r) if x != 0))
                break
            if abs(v[p]) >= abs(hit[p]):
                q = v[p] // hit[p]
                v = [x - q * y for x, y in zip(v, hit)]
            else:
                hit[:], v = v[:], hit[:]
    for b in basis:
        p = next(i for i, x in enumerate(b) if x != 0)
        if b[p] < 0:
            b[:] = [-x for x in b]
    for i in range(len(basis) - 1, -1, -1):
        p = next(j for j, x in enumerate(basis[i]) if x != 0)
        for k in range(i):
            q = basis[k][p] // basis[i][p]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return basis


def left_kernel(a):
    """Saturated basis of {x in Z^n : x A = 0} for an integer matrix A (n x m)."""
    n = len(a)
    if n == 0:
        return []
    m = len(a[0])
    aug = [a[i][:] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red = hnf(aug)
    ker = [row[m:] for row in red if all(x == 0 for x in row[:m])]
    return hnf(ker)


def solve_left(basis, targets):
    """Solve X * basis = targets over Q for a full-row-rank `basis` (k x n).

    Returns the r x k Fraction matrix, or None if some target row lies
    outside the row span of `basis`.
    """
    k = len(basis)
    if k == 0:
        if all(all(x == 0 for x in t) for t in targets):
            return [[] for _ in targets]
        return None
    n = len(basis[0])
    # unknown x solves sum_i x_i basis_i = target: columns indexed by basis rows
    a = [[Fraction(basis[i][j]) for i in range(k)] for j in range(n)]
    rhs = [[Fraction(t[j]) for t in targets] for j in range(n)]
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("basis rows are linearly dependent")
        a[r], a[piv] = a[piv], a[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        rhs[r] = [x / inv for x in rhs[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                rhs[i] = [x - f * y for x, y in zip(rhs[i], rhs[r])]
        r += 1
    for i in range(r, n):
        if any(x != 0 for x in rhs[i]):
            return None
    return [[rhs[i][t] for i in range(k)] for t in range(len(targets))]


class _SnfState:
    """Mutable matrix with unimodular row/column transform tracking."""

    def __init__(self, a):
        self.m = [row[:] for row in a]
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0
        self.s = identity(self.rows)
        self.t = identity(self.cols)
        self.tinv = identity(self.cols)

    def row_op(self, i, j, q):  # R_i -= q R_j
        self.m[i] = [x - q * y for x, y in zip(self.m[i], self.m[j])]
        self.s[i] = [x - q * y for x, y in zip(self.s[i], self.s[j])]

    def row_swap(self, i, j):
        self.m[i], self.m[j] = self.m[j], self.m[i]
        self.s[i], self.s[j] = self.s[j], self.s[i]

    def col_op(self, j, i, q):  # C_j -= q C_i, so tinv row i += q * row j
        for r in range(self.rows):
            self.m[r][j] -= q * self.m[r][i]
        for r in range(self.cols):
            self.t[r][j] -= q * self.t[r][i]
        self.tinv[i] = [x + q * y for x, y in zip(self.tinv[i], self.tinv[j])]

    def col_swap(self, i, j):
        for r in range(self.rows):
            self.m[r][i], self.m[r][j] = self.m[r][j], self.m[r][i]
        for r in range(self.cols):
            self.t[r][i], self.t[r][j] = self.t[r][j], self.t[r][i]
        self.tinv[i], self.tinv[j] = self.tinv[j], self.tinv[i]

    def col_neg(self, i):
        for r in range(self.rows):
            self.m[r][i] = -self.m[r][i]
        for r in range(self.cols):
            self.t[r][i] = -self.t[r][i]
        self.tinv[i] = [-x for x in self.tinv[i]]


def snf_with_transforms(a):
    """Smith normal form with transforms: (d, s, t, tinv) with s*a*t = d.

    d is diagonal with d_1 | d_2 | ...; s and t are unimodular, tinv = t^{-1}.
    """
    st = _SnfState(a)
    m = st.m
    n = min(st.rows, st.cols)

    def diagonalize(k0):
        k = k0
        while k < n:
            piv = None
            for i in range(k, st.rows):
                for j in range(k, st.cols):
                    if m[i][j] != 0:
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                return
            if piv[0] != k:
                st.row_swap(k, piv[0])
            if piv[1] != k:
                st.col_swap(k, piv[1])
            while True:
                again = False
                for i in range(k + 1, st.rows):
                    while m[i][k] != 0:
                        q = m[i][k] // m[k][k]
                        st.row_op(i, k, q)
                        if m[i][k] != 0:
                            st.row_swap(i, k)
                            again = True
                for j in range(k + 1, st.cols):
                    while m[k][j] != 0:
                        q = m[k][j] // m[k][k]
                        st.col_op(j, k, q)
                        if m[k][j] != 0:
                            st.col_swap(j, k)
                            again = True
                if not again:
                    break
            if m[k][k] < 0:
                st.col_neg(k)
            k += 1

    diagonalize(0)
    while True:
        bad = None
        for i in range(n - 1):
            if m[i][i] != 0 and m[i + 1][i + 1] % m[i][i] != 0:
                bad = i
                break
            if m[i][i] == 0 and m[i + 1][i + 1] != 0:
                bad = i
                break
        if bad is None:
            break
        # fold column bad+1 into column bad and re-diagonalize from that block
        st.col_op(bad, bad + 1, -1)
        diagonalize(bad)
    return st.m, st.s, st.t, st.tinv


def smith_diagonal(a):
    """The nonzero Smith invariant factors of an integer matrix."""
    if not a or not a[0]:
        return []
    d, _, _, _ = snf_with_transforms(a)
    n = min(len(d), len(d[0]))
    return [d[i][i] for i in range(n) if d[i][i] != 0]
