"""Dense exact linear algebra over a finite field, plus integer determinants.

Matrices are lists of row lists of int elements; vectors are lists or tuples.
Everything here is plain Gaussian elimination sized for desk-scale problems
(dimensions in the tens), where exactness matters and speed does not.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import Singular
from .galois import FiniteField


def mat_copy(A):
    return [list(r) for r in A]


def identity(F: FiniteField, n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_mul(F: FiniteField, A, B):
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for t in range(inner):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(cols):
                    if Bt[j]:
                        Oi[j] = F.add(Oi[j], F.mul(a, Bt[j]))
    return out

def vec_mat(F: FiniteField, v, A):
    return mat_mul(F, [list(v)], A)[0]


def vec_weight(v) -> int:
    return sum(1 for x in v if x)


def _eliminate(F: FiniteField, A):
    """Row echelon form in place; returns list of pivot column indices."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def mat_rank(F: FiniteField, A) -> int:
    if not A:
        return 0
    return len(_eliminate(F, mat_copy(A)))


def mat_det(F: FiniteField, A) -> int:
    n = len(A)
    M = mat_copy(A)
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = F.mul(inv, M[i][c])
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return det


def mat_inv(F: FiniteField, A):
    n = len(A)
    M = [list(A[i]) + identity(F, n)[i] for i in range(n)]
    pivots = _eliminate(F, M)
    if pivots != list(range(n)):
        raise Singular("matrix is not invertible")
    return [row[n:] for row in M]


def solve(F: FiniteField, A, b):
    """All solutions x of A x = b.

    Returns (particular, nullbasis) or None when inconsistent.  The particular
    solution sets every free variable to zero; nullbasis spans ker A.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    pivots = _eliminate(F, M)
    if cols in pivots:
        return None
    part = [0] * cols
    for r, c in enumerate(pivots):
        part[c] = M[r][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, c in enumerate(pivots):
            v[c] = F.neg(M[r][fc])
        basis.append(v)
    return part, basis


def in_span(F: FiniteField, vectors, target) -> bool:
    """Is target a linear combination of the given vectors?"""
    if not any(target):
        return True
    if not vectors:
        return False
    A = transpose(list(vectors))
    return solve(F, A, list(target)) is not None


def kernel_basis(F: FiniteField, A):
    """Basis of the right kernel {x : A x = 0}."""
    cols = len(A[0]) if A else 0
    got = solve(F, A, [0] * len(A))
    return got[1] if got else [[0] * cols]


def det_bareiss(A):
    """Exact integer determinant by fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [[int(x) for x in row] for row in A]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if M[c][c] == 0:
            pr = next((i for i in range(c + 1, n) if M[i][c]), None)
            if pr is None:
                return 0
            M[c], M[pr] = M[pr], M[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                M[i][j] = (M[i][j] * M[c][c] - M[i][c] * M[c][j]) // prev
            M[i][c] = 0
        prev = M[c][c]
    return sign * M[n - 1][n - 1]


def det_fraction(A):
    """Exact determinant of a rational matrix (used as a cross-check oracle)."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det
