"""Exact linear algebra: echelon/rank/kernel over a field, Smith normal
form with unimodular transforms over the integers.

Matrices are plain lists of lists (rows).  Over the rationals and over
function fields elimination postpones divisions Bareiss-style so
intermediate entries stay products of input data; over finite fields the
plain pivoting elimination is used.  Kernels come out echelon-normalized
(free coordinate set to one), so bases are deterministic.
"""

from __future__ import annotations

from .fields import Field, PrimeField, RationalFunctionField


def _shape(rows):
    m = len(rows)
    n = len(rows[0]) if m else 0
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged matrix")
    return m, n


def _wants_fraction_free(F):
    return not isinstance(F, PrimeField) or isinstance(F, RationalFunctionField)


def row_echelon(rows, F: Field, fraction_free=None):
    """Forward elimination.  Returns (echelon rows, pivot column list).

    The echelon rows are not normalized to 1-pivots; use the pivot list.
    """
    m, n = _shape(rows)
    A = [list(r) for r in rows]
    if fraction_free is None:
        fraction_free = _wants_fraction_free(F)
    pivots = []
    prev = F.one
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if not A[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        piv = A[r][c]
        for i in range(r + 1, m):
            if fraction_free:
                # Bareiss: exact division by the previous pivot
                for j in range(n):
                    if j == c:
                        continue
                    A[i][j] = (A[i][j] * piv - A[i][c] * A[r][j]) / prev
                A[i][c] = F.zero
            else:
                if A[i][c].is_zero():
                    continue
                f = A[i][c] / piv
                for j in range(c, n):
                    A[i][j] = A[i][j] - f * A[r][j]
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows, F: Field):
    if not rows or not rows[0]:
        return 0
    _, pivots = row_echelon(rows, F)
    return len(pivots)


def kernel_basis(rows, F: Field, ncols=None):
    """Right kernel {x : rows . x = 0}, echelon-normalized basis.

    Basis vectors are ordered by their free column; the free coordinate is
    set to one.  ``ncols`` is needed when ``rows`` is empty.
    """
    m = len(rows)
    if m == 0:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        basis = []
        for j in range(ncols):
            v = [F.zero] * ncols
            v[j] = F.one
            basis.append(v)
        return basis
    _, n = _shape(rows)
    A, pivots = row_echelon(rows, F)
    pivot_set = set(pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [F.zero] * n
        v[fc] = F.one
        # back substitution over the echelon rows
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            if pc > fc:
                continue
            s = F.zero
            for j in range(pc + 1, n):
                if not A[i][j].is_zero() and not v[j].is_zero():
                    s = s + A[i][j] * v[j]
            v[pc] = -s / A[i][pc]
        basis.append(v)
    return basis


def rank_and_kernel(rows, F: Field, ncols=None):
    if not rows:
        return 0, kernel_basis(rows, F, ncols=ncols)
    return rank(rows, F), kernel_basis(rows, F)


def solve_unique_or_none(rows, rhs, F: Field):
    """One solution of rows . x = rhs, or None when inconsistent."""
    m, n = _shape(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    A, pivots = row_echelon(aug, F)
    for i in range(len(pivots), m):
        if not A[i][n].is_zero():
            return None
    if pivots and pivots[-1] == n:
        return None
    x = [F.zero] * n
    for i in range(len(pivots) - 1, -1, -1):
        pc = pivots[i]
        s = A[i][n]
        for j in range(pc + 1, n):
            s = s - A[i][j] * x[j]
        x[pc] = s / A[i][pc]
    return x


# ---------------------------------------------------------------------------
# integer matrices


def _int_shape(M):
    m = len(M)
    n = len(M[0]) if m else 0
    for r in M:
        if len(r) != n:
            raise ValueError("ragged matrix")
    return m, n


def identity_int(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul_int(A, B):
    ma, na = _int_shape(A)
    mb, nb = _int_shape(B)
    if na != mb:
        raise ValueError("dimension mismatch")
    return [[sum(A[i][k] * B[k][j] for k in range(na)) for j in range(nb)]
            for i in range(ma)]


def det_int(M):
    """Integer determinant (Bareiss), used by tests to check unimodularity."""
    m, n = _int_shape(M)
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M):
    """U, D, V with U*M*V = D diagonal, d_i | d_{i+1}, d_i >= 0,
    U and V unimodular.  Returns (D, U, V)."""
    m, n = _int_shape(M)
    A = [list(r) for r in M]
    U = identity_int(m)
    V = identity_int(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        for j in range(n):
            A[dst][j] += c * A[src][j]
        for j in range(m):
            U[dst][j] += c * U[src][j]

    def add_col(src, dst, c):
        for r in A:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def negate_row(i):
        for j in range(n):
            A[i][j] = -A[i][j]
        for j in range(m):
            U[i][j] = -U[i][j]

    def reduce_at(t):
        """Pivot on A[t:,t:], clear row t and column t with unimodular ops.
        Returns False when the remaining block is zero."""
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    piv = (i, j)
        if piv is None:
            return False
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # gcd descent: remainders shrink, so this terminates
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if A[t][t] < 0:
            negate_row(t)
        return True

    def diagonalize(start):
        for t in range(start, min(m, n)):
            if not reduce_at(t):
                break

    diagonalize(0)

    # enforce the divisibility chain d_k | d_{k+1}; each fix strictly
    # decreases d_k and never touches earlier positions, so this terminates
    while True:
        bad = None
        for k in range(min(m, n) - 1):
            a, b = A[k][k], A[k + 1][k + 1]
            if a != 0 and b % a != 0:
                bad = k
                break
        if bad is None:
            break
        add_col(bad + 1, bad, 1)
        diagonalize(bad)

    return A, U, V


def integer_kernel(M):
    """Basis of {x in Z^n : M x = 0} via the Smith form."""
    m, n = _int_shape(M)
    if m == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    D, U, V = smith_normal_form(M)
    basis = []
    for j in range(n):
        d = D[j][j] if j < min(m, n) else 0
        if j >= m or d == 0:
            basis.append([V[i][j] for i in range(n)])
    return basis
