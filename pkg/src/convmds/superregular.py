"""Superregular lower triangular Toeplitz matrices.

A lower triangular matrix is superregular when every proper submatrix is
nonsingular; a pair of index sequences (i_1 < ... < i_r | j_1 < ... < j_r) is
proper when j_v <= i_v for every v, which is exactly the family of submatrices
that can be nonsingular at all for a lower triangular matrix.

A LowerToeplitz is described by its first column (t_1, ..., t_l); entry (i, j)
is t_{i-j+1} for i >= j and 0 above the diagonal.  The field may be None, in
which case the matrix lives over the integers (used for the binomial matrices
whose proper minors are all positive).

Besides the direct minor test this module implements the whole battery of
equivalent characterizations (weight of column combinations, span conditions,
bounded-weight kernel vectors of [I | T]) so they can be cross-checked, the
closure properties (inverse, leading principal submatrices), binomial Toeplitz
matrices with their banded-power positivity criterion, the smallest prime over
which the n-th binomial matrix stays superregular, and exhaustive or seeded
searches for superregular columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from . import linalg
from .errors import BadParams, BudgetExceeded, Singular
from .galois import FiniteField
from .poly import series_div
from .rng import XorShift64Star

SEARCH_BUDGET = 1 << 24


@dataclass(frozen=True)
class LowerToeplitz:
    field: FiniteField | None
    col: tuple

    @property
    def size(self) -> int:
        return len(self.col)

    def entry(self, i: int, j: int):
        """0-based entry, t_{i-j+1} on and below the diagonal."""
        return self.col[i - j] if 0 <= i - j < self.size else 0

    def rows(self):
        l = self.size
        return [[self.col[i - j] if i >= j else 0 for j in range(l)] for i in range(l)]

    def leading_principal(self, size: int) -> "LowerToeplitz":
        if not 1 <= size <= self.size:
            raise BadParams("bad principal size")
        return LowerToeplitz(self.field, self.col[:size])


def toeplitz(field, col) -> LowerToeplitz:
    col = tuple(col)
    if not col:
        raise BadParams("empty Toeplitz column")
    if field is not None:
        for c in col:
            if not 0 <= c < field.q:
                raise BadParams(f"column value {c} outside {field}")
    return LowerToeplitz(field, col)


def proper_pairs(l: int, r: int | None = None):
    """Proper index pairs (rows | cols), 1-based, rows-major lexicographic."""
    sizes = range(1, l + 1) if r is None else [r]
    for size in sizes:
        for rows in itertools.combinations(range(1, l + 1), size):
            for cols in itertools.combinations(range(1, l + 1), size):
                if all(j <= i for i, j in zip(rows, cols)):
                    yield rows, cols


def submatrix(T: LowerToeplitz, rows, cols):
    return [[T.entry(i - 1, j - 1) for j in cols] for i in rows]


def is_superregular(T: LowerToeplitz) -> bool:
    """All proper minors nonzero; probes small submatrices first."""
    if T.field is None:
        raise BadParams("superregularity test needs a field")
    F = T.field
    for rows, cols in proper_pairs(T.size):
        if linalg.mat_det(F, submatrix(T, rows, cols)) == 0:
            return False
    return True


def inverse_superregular(T: LowerToeplitz) -> LowerToeplitz:
    """Inverse of a lower triangular Toeplitz matrix (again Toeplitz).

    The first column of the inverse is the reciprocal power series of the
    column polynomial, so inversion preserves the Toeplitz shape; it also
    preserves superregularity.
    """
    if T.field is None:
        raise BadParams("inversion implemented over fields")
    if T.col[0] == 0:
        raise Singular("diagonal entry is zero")
    inv_col = series_div(T.field, (1,), tuple(T.col), T.size)
    return LowerToeplitz(T.field, tuple(inv_col))


@dataclass
class EquivalenceReport:
    superregular: bool          # all proper minors nonzero
    combo_weight: bool          # wt(T_1 + sum beta_j T_mj) >= l - s
    span_t1: bool               # T_1 not in span of other/unit columns
    kernel_t1: bool             # no light kernel vector of [I|T] hitting T_1
    span_e1: bool               # e_1 not in span of T columns/unit vectors
    kernel_e1: bool             # no light kernel vector of [I|T] hitting e_1

    @property
    def agree(self) -> bool:
        vals = (
            self.superregular,
            self.combo_weight,
            self.span_t1,
            self.kernel_t1,
            self.span_e1,
            self.kernel_e1,
        )
        return len(set(vals)) == 1


def check_equivalences(T: LowerToeplitz, budget: int = 1 << 22) -> EquivalenceReport:
    """Evaluate six equivalent superregularity conditions independently."""
    if T.field is None:
        raise BadParams("equivalence battery needs a field")
    F = T.field
    l = T.size
    if (1 + F.q) ** (l - 1) > budget:
        raise BudgetExceeded("combination condition too large for the budget")
    M = T.rows()
    tcols = [[M[i][j] for i in range(l)] for j in range(l)]
    ecols = [[1 if i == j else 0 for i in range(l)] for j in range(l)]

    a = is_superregular(T)

    # s = 0 is the bare column: wt(T_1) >= l, since every entry of T_1 is
    # itself a proper 1x1 minor
    c = True
    for s in range(l):
        for ms in itertools.combinations(range(1, l), s):  # 0-based cols 1..l-1
            for betas in itertools.product(range(F.q), repeat=s):
                v = list(tcols[0])
                for m, b in zip(ms, betas):
                    if b:
                        v = [F.add(x, F.mul(b, y)) for x, y in zip(v, tcols[m])]
                if linalg.vec_weight(v) < l - s:
                    c = False
                    break
            if not c:
                break
        if not c:
            break

    def span_condition(target, t_first, e_first):
        # target not in span of s T-columns (indices >= t_first, 0-based)
        # plus t unit vectors (indices >= e_first), s + t <= l - 1
        for s in range(l):
            for t in range(l - s):
                if s + t == 0:
                    if not any(target):
                        return False
                    continue
                for ms in itertools.combinations(range(t_first, l), s):
                    for ls in itertools.combinations(range(e_first, l), t):
                        vecs = [tcols[m] for m in ms] + [ecols[i] for i in ls]
                        if linalg.in_span(F, vecs, target):
                            return False
        return True

    d = span_condition(tcols[0], t_first=1, e_first=0)
    f = span_condition(ecols[0], t_first=0, e_first=1)

    def kernel_condition(special):
        # no v with v Hhat^T = 0, v_special != 0 and wt(v) <= l, where
        # Hhat = [I | T]; equivalently the special column of Hhat is outside
        # the span of every set of at most l - 1 other columns
        hcols = ecols + tcols
        target = hcols[special]
        others = [hcols[i] for i in range(2 * l) if i != special]
        for s in range(l):
            if s == 0:
                if not any(target):
                    return False
                continue
            for pick in itertools.combinations(range(2 * l - 1), s):
                if linalg.in_span(F, [others[i] for i in pick], target):
                    return False
        return True

    e = kernel_condition(l)  # column l+1 of [I | T], i.e. T_1
    g = kernel_condition(0)  # column e_1

    return EquivalenceReport(a, c, d, e, f, g)


# --- integer binomial matrices and the banded power criterion -------------


def binomial_toeplitz(n: int) -> LowerToeplitz:
    """Integer Toeplitz matrix with first column binom(n-1, i), i = 0..n-1."""
    if n < 1:
        raise BadParams("size must be positive")
    return LowerToeplitz(None, tuple(comb(n - 1, i) for i in range(n)))


def proper_minors_positive(T: LowerToeplitz) -> bool:
    """Exact big-integer check that every proper minor is positive."""
    if T.field is not None:
        raise BadParams("positivity is an integer matrix check")
    for rows, cols in proper_pairs(T.size):
        if linalg.det_bareiss(submatrix(T, rows, cols)) <= 0:
            return False
    return True


def banded_power(n: int, k: int):
    """The k-th power of the n x n unit bidiagonal matrix: binom(k, i-j) band."""
    if not 1 <= k <= n - 1:
        raise BadParams("power k must satisfy 1 <= k <= n-1")
    return [[comb(k, i - j) if 0 <= i - j <= k else 0 for j in range(n)] for i in range(n)]


def theorem_a_check(n: int, k: int, rows, cols) -> bool:
    """Determinant sign of a submatrix of the banded binomial power.

    The submatrix on (rows | cols) of the k-th power of the bidiagonal matrix
    has nonnegative determinant, positive exactly when every column index sits
    in the band [i_l - k, i_l].  Returns positivity and asserts the criterion
    agrees with the computed determinant.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols) or not rows:
        raise BadParams("index sequences must be nonempty and equally long")
    for seq in (rows, cols):
        if any(not 1 <= x <= n for x in seq) or any(
            a >= b for a, b in zip(seq, seq[1:])
        ):
            raise BadParams("indices must be strictly increasing within 1..n")
    X = banded_power(n, k)
    sub = [[X[i - 1][j - 1] for j in cols] for i in rows]
    det = linalg.det_bareiss(sub)
    band = all(i - k <= j <= i for i, j in zip(rows, cols))
    assert det >= 0, "banded binomial minor went negative"
    assert (det > 0) == band, "band criterion disagrees with determinant"
    return det > 0


def smallest_prime_superregular(n: int, prime_limit: int = 100000) -> int:
    """Least prime p such that the n-th binomial Toeplitz matrix stays
    superregular over GF(p)."""
    if n < 2:
        raise BadParams("size must be at least 2")
    if n > 8:
        raise BudgetExceeded("minor enumeration beyond 8x8 not supported")
    T = binomial_toeplitz(n)
    minors = [
        linalg.det_bareiss(submatrix(T, rows, cols))
        for rows, cols in proper_pairs(n)
    ]
    p = 2
    while p <= prime_limit:
        if all(m % p for m in minors):
            return p
        p += 1
        while not _is_prime(p):
            p += 1
    raise BadParams("no prime found below the limit")


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- searches --------------------------------------------------------------


def search_toeplitz(
    l: int,
    field: FiniteField,
    mode: str = "exhaustive",
    seed: int | None = None,
    max_tries: int = 100000,
    budget: int = SEARCH_BUDGET,
) -> LowerToeplitz | None:
    """Find a superregular l x l Toeplitz matrix over the field, or None.

    Columns are normalized to t_1 = 1 (scaling does not change
    superregularity and a zero t_1 never is).  Exhaustive mode walks
    (t_2, ..., t_l) in lexicographic order and returns the first hit;
    seeded mode draws columns from the xorshift64* stream.
    """
    if l < 1:
        raise BadParams("size must be positive")
    q = field.q
    if l == 1:
        return LowerToeplitz(field, (1,))
    if mode == "exhaustive":
        if q ** (l - 1) > budget:
            raise BudgetExceeded(
                f"exhaustive search needs {q ** (l - 1)} candidates, budget {budget}"
            )
        for tail in itertools.product(range(q), repeat=l - 1):
            T = LowerToeplitz(field, (1,) + tail)
            if is_superregular(T):
                return T
        return None
    if mode == "seeded":
        rng = XorShift64Star(0 if seed is None else seed)
        for _ in range(max_tries):
            tail = tuple(rng.below(q) for _ in range(l - 1))
            T = LowerToeplitz(field, (1,) + tail)
            if is_superregular(T):
                return T
        return None
    raise BadParams(f"unknown search mode {mode!r}")


# --- general (full) Toeplitz matrices --------------------------------------


def general_toeplitz(field: FiniteField, diagonals):
    """Square Toeplitz matrix from its 2l-1 diagonals, upper-right first.

    Entry (i, j) is diagonals[i - j + l - 1]; index l-1 is the main diagonal.
    Returns plain rows.
    """
    d = list(diagonals)
    if len(d) % 2 == 0:
        raise BadParams("a general Toeplitz matrix needs 2l-1 diagonals")
    l = (len(d) + 1) // 2
    for x in d:
        if not isinstance(x, int) or not (0 <= x < field.q):
            raise BadParams(f"diagonal value {x!r} outside GF({field.q})")
    return [[d[i - j + l - 1] for j in range(l)] for i in range(l)]


def all_minors_nonzero(F: FiniteField, rows) -> bool:
    """Whether every square submatrix of any order is nonsingular.

    This is the superregularity notion for matrices without structural
    zeros: no minor is forced to vanish, so all of them must not.
    """
    l = len(rows)
    for r in range(1, l + 1):
        for ri in itertools.combinations(range(l), r):
            for ci in itertools.combinations(range(l), r):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if linalg.mat_det(F, sub) == 0:
                    return False
    return True


def search_general_toeplitz(
    l: int,
    field: FiniteField,
    mode: str = "exhaustive",
    seed: int | None = None,
    max_tries: int = 100000,
    budget: int = SEARCH_BUDGET,
):
    """Find an l x l general Toeplitz matrix with all minors nonzero.

    Every entry is a 1 x 1 minor, so only nonzero diagonals are tried; the
    main diagonal is normalized to 1 by the scaling freedom.  Returns the
    matrix rows or None.
    """
    if l < 1:
        raise BadParams("size must be positive")
    q = field.q
    if l == 1:
        return [[1]]
    nonzero = range(1, q)

    def candidate(rest):
        return rest[:l - 1] + (1,) + rest[l - 1:]

    if mode == "exhaustive":
        space = (q - 1) ** (2 * l - 2)
        if space > budget:
            raise BudgetExceeded(
                f"exhaustive search needs {space} candidates, budget {budget}")
        for rest in itertools.product(nonzero, repeat=2 * l - 2):
            rows = general_toeplitz(field, candidate(rest))
            if all_minors_nonzero(field, rows):
                return rows
        return None
    if mode == "seeded":
        rng = XorShift64Star(0 if seed is None else seed)
        for _ in range(max_tries):
            rest = tuple(1 + rng.below(q - 1) for _ in range(2 * l - 2))
            rows = general_toeplitz(field, candidate(rest))
            if all_minors_nonzero(field, rows):
                return rows
        return None
    raise BadParams(f"unknown search mode {mode!r}")
