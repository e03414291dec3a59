"""Convolutional codes: polynomial matrices, sliding windows, file format.

A rate k/n convolutional code is stored as a CodeSpec holding the field, the
parameters (n, k, delta) and at least one of two polynomial matrices: a k x n
generator ``gen`` and an (n-k) x n parity check ``par``.  Matrices are tuples
of rows of polynomial tuples (see poly.py).  Validation is strict: declared
shapes, full rank over the rational function field, orthogonality when both
matrices are present, basicness, and that ``delta`` equals the computed
degree of each stored matrix.

Sliding (truncated block Toeplitz) matrices expose the first j+1 coefficient
blocks.  With G(D) = sum G_t D^t and H(D) = sum H_t D^t:

    generator window: block row t, block column s holds G_{s-t}
    parity window:    block row t, block column s holds H_{t-s}

so the generator window is upper block triangular and the parity window lower
block triangular.  Codeword windows v_[0,j] are exactly the row space of the
generator window and exactly the kernel of the parity window transposed; this
needs only full-rank constant blocks plus orthogonality, which lets the
window routines fall back on derived (not necessarily basic) complements when
only one matrix is stored and k is 1 or n-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import (
    A1NotUnit,
    BadParams,
    FieldMismatch,
    MissingMatrix,
    NotBasic,
    NotRateNMinus1,
    ParseError,
    RankDeficient,
    ShapeMismatch,
)
from .galois import FiniteField, parse_field
from .poly import (
    format_poly,
    parse_poly,
    poly_add,
    poly_coef,
    poly_deg,
    poly_gcd,
    poly_mul,
    poly_neg,
    poly_norm,
    poly_scale,
    series_div,
)


@dataclass(frozen=True)
class PolyMatrix:
    field: FiniteField
    rows: int
    cols: int
    entries: tuple


def pm_make(field: FiniteField, entries) -> PolyMatrix:
    rows = tuple(tuple(poly_norm(e) for e in row) for row in entries)
    if not rows or not rows[0]:
        raise ShapeMismatch("empty polynomial matrix")
    cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise ShapeMismatch("ragged polynomial matrix")
    for row in rows:
        for e in row:
            for c in e:
                if not 0 <= c < field.q:
                    raise FieldMismatch(f"coefficient {c} outside {field}")
    return PolyMatrix(field, len(rows), cols, rows)


def pm_coefficient(M: PolyMatrix, t: int):
    """Scalar coefficient matrix of D^t."""
    return [[poly_coef(e, t) for e in row] for row in M.entries]


def pm_memory(M: PolyMatrix) -> int:
    """Largest power of D appearing in any entry."""
    return max(poly_deg(e) for row in M.entries for e in row)


def pm_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.field != B.field or A.cols != B.rows:
        raise ShapeMismatch("polynomial matrix product shape mismatch")
    F = A.field
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = ()
            for t in range(A.cols):
                acc = poly_add(F, acc, poly_mul(F, A.entries[i][t], B.entries[t][j]))
            row.append(acc)
        out.append(row)
    return pm_make(F, out)


def pm_transpose(M: PolyMatrix) -> PolyMatrix:
    return pm_make(M.field, list(zip(*M.entries)))


def pm_is_zero(M: PolyMatrix) -> bool:
    return all(e == () for row in M.entries for e in row)


def pm_det(F: FiniteField, rows) -> tuple:
    """Determinant of a square polynomial matrix by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = ()
    for j in range(n):
        if rows[0][j] == ():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = poly_mul(F, rows[0][j], pm_det(F, minor))
        if j % 2:
            term = poly_neg(F, term)
        acc = poly_add(F, acc, term)
    return acc


def full_size_minors(M: PolyMatrix):
    """All maximal minors (column choices of size M.rows) as polynomials."""
    if M.rows > M.cols:
        raise ShapeMismatch("more rows than columns")
    out = []
    for cols in itertools.combinations(range(M.cols), M.rows):
        sub = [[M.entries[i][j] for j in cols] for i in range(M.rows)]
        out.append((cols, pm_det(M.field, sub)))
    return out


def is_basic(M: PolyMatrix) -> bool:
    """True when the gcd of all maximal minors is 1 (after full-rank check)."""
    g = ()
    for _, minor in full_size_minors(M):
        if minor == ():
            continue
        g = poly_gcd(M.field, g, minor) if g else minor
        if poly_deg(g) == 0:
            return True
    if g == ():
        raise RankDeficient("matrix has rank below its row count")
    return poly_deg(g) == 0


def code_degree(M: PolyMatrix) -> int:
    """Max degree over all maximal minors; callers require a basic matrix."""
    if not is_basic(M):
        raise NotBasic("degree is only computed for basic matrices")
    return max(poly_deg(minor) for _, minor in full_size_minors(M))


@dataclass(frozen=True)
class CodeSpec:
    field: FiniteField
    n: int
    k: int
    delta: int
    gen: PolyMatrix | None = None
    par: PolyMatrix | None = None


def make_code(field, n, k, delta, gen=None, par=None) -> CodeSpec:
    if not (0 < k < n) or delta < 0:
        raise BadParams(f"bad code parameters n={n} k={k} delta={delta}")
    if gen is not None and not isinstance(gen, PolyMatrix):
        gen = pm_make(field, gen)
    if par is not None and not isinstance(par, PolyMatrix):
        par = pm_make(field, par)
    if gen is None and par is None:
        raise MissingMatrix("need a generator or a parity check matrix")
    if gen is not None and (gen.rows, gen.cols) != (k, n):
        raise ShapeMismatch(f"generator must be {k}x{n}")
    if par is not None and (par.rows, par.cols) != (n - k, n):
        raise ShapeMismatch(f"parity check must be {n - k}x{n}")
    for M in (gen, par):
        if M is not None and M.field != field:
            raise FieldMismatch("matrix field differs from declared field")
    if gen is not None and par is not None:
        if not pm_is_zero(pm_mul(gen, pm_transpose(par))):
            raise BadParams("generator and parity check are not orthogonal")
    for name, M in (("generator", gen), ("parity check", par)):
        if M is None:
            continue
        if not is_basic(M):
            raise NotBasic(f"{name} matrix is not basic")
        d = code_degree(M)
        if d != delta:
            raise BadParams(f"declared delta={delta} but {name} degree is {d}")
    return CodeSpec(field, n, k, delta, gen, par)


def dual(c: CodeSpec) -> CodeSpec:
    """The dual code: parameters (n, n-k, delta), matrices with swapped roles."""
    return make_code(c.field, c.n, c.n - c.k, c.delta, gen=c.par, par=c.gen)


# --- derived complements ------------------------------------------------


def _cofactor_row(M: PolyMatrix):
    """Signed maximal cofactors of an (n-1) x n matrix; orthogonal to it."""
    F = M.field
    out = []
    for i in range(M.cols):
        sub = [[row[j] for j in range(M.cols) if j != i] for row in M.entries]
        d = pm_det(F, sub)
        out.append(poly_neg(F, d) if i % 2 else d)
    return out


def _pivot_rows(F: FiniteField, a):
    """Rows spanning the kernel of a single row a with some a_p(0) a unit."""
    n = len(a)
    p = next((i for i in range(n) if poly_coef(a[i], 0)), None)
    if p is None:
        raise RankDeficient("row has no unit constant term; not delay free")
    rows = []
    for i in range(n):
        if i == p:
            continue
        row = [() for _ in range(n)]
        row[i] = a[p]
        row[p] = poly_neg(F, a[i])
        rows.append(row)
    return rows


def derive_parity(c: CodeSpec) -> PolyMatrix:
    """A parity check usable for window computations (k = 1 or n-1 only)."""
    if c.gen is None:
        raise MissingMatrix("no generator to derive a parity check from")
    F = c.field
    if c.k == c.n - 1:
        return pm_make(F, [_cofactor_row(c.gen)])
    if c.k == 1:
        return pm_make(F, _pivot_rows(F, list(c.gen.entries[0])))
    raise MissingMatrix(f"cannot derive a parity check for k={c.k}, n={c.n}")


def derive_generator(c: CodeSpec) -> PolyMatrix:
    """A generator usable for window computations (k = 1 or n-1 only)."""
    if c.par is None:
        raise MissingMatrix("no parity check to derive a generator from")
    F = c.field
    if c.k == 1:
        return pm_make(F, [_cofactor_row(c.par)])
    if c.k == c.n - 1:
        return pm_make(F, _pivot_rows(F, list(c.par.entries[0])))
    raise MissingMatrix(f"cannot derive a generator for k={c.k}, n={c.n}")


def window_generator(c: CodeSpec) -> PolyMatrix | None:
    if c.gen is not None:
        return c.gen
    if c.par is not None and c.k in (1, c.n - 1):
        return derive_generator(c)
    return None


def window_parity(c: CodeSpec) -> PolyMatrix | None:
    if c.par is not None:
        return c.par
    if c.gen is not None and c.k in (1, c.n - 1):
        return derive_parity(c)
    return None


# --- sliding matrices ----------------------------------------------------


@dataclass
class SlidingMatrix:
    field: FiniteField
    kind: str  # generator | parity | systematic
    j: int
    block_rows: int
    block_cols: int
    data: list
    pivot: int = 0

    @property
    def rows(self):
        return len(self.data)

    @property
    def cols(self):
        return len(self.data[0]) if self.data else 0


def _assemble(F, coeffs, j, br, bc, upper):
    blocks = len(coeffs) - 1
    zero = [[0] * bc for _ in range(br)]
    data = []
    for t in range(j + 1):
        rows = [[] for _ in range(br)]
        for s in range(j + 1):
            d = s - t if upper else t - s
            blk = coeffs[d] if 0 <= d <= blocks else zero
            for r in range(br):
                rows[r].extend(blk[r])
        data.extend(rows)
    return data


def sliding_generator(c: CodeSpec, j: int) -> SlidingMatrix:
    if j < 0:
        raise BadParams("window index must be nonnegative")
    G = window_generator(c)
    if G is None:
        raise MissingMatrix("no generator available for this code")
    coeffs = [pm_coefficient(G, t) for t in range(pm_memory(G) + 1)]
    data = _assemble(c.field, coeffs, j, c.k, c.n, upper=True)
    return SlidingMatrix(c.field, "generator", j, c.k, c.n, data)


def sliding_parity(c: CodeSpec, j: int) -> SlidingMatrix:
    if j < 0:
        raise BadParams("window index must be nonnegative")
    H = window_parity(c)
    if H is None:
        raise MissingMatrix("no parity check available for this code")
    coeffs = [pm_coefficient(H, t) for t in range(pm_memory(H) + 1)]
    data = _assemble(c.field, coeffs, j, c.n - c.k, c.n, upper=False)
    return SlidingMatrix(c.field, "parity", j, c.n - c.k, c.n, data)


def laurent_table(c: CodeSpec, M: int, pivot: int = 0):
    """Power series rows h_0..h_M of a_i/a_pivot for the non-pivot coordinates.

    The parity row (a_1, ..., a_n) of a rate (n-1)/n code determines each
    non-pivot coordinate's expansion; row t of the result collects the D^t
    coefficients in ascending coordinate order.
    """
    if c.k != c.n - 1:
        raise NotRateNMinus1("systematic form needs k = n-1")
    H = window_parity(c)
    if H is None:
        raise MissingMatrix("no parity check available for this code")
    F = c.field
    a = list(H.entries[0])
    a0 = poly_coef(a[pivot], 0)
    if a0 == 0:
        raise A1NotUnit(f"pivot coordinate {pivot} has zero constant term")
    inv = F.inv(a0)
    den = poly_scale(F, a[pivot], inv)
    series = []
    for i in range(c.n):
        if i == pivot:
            continue
        num = poly_scale(F, a[i], inv)
        series.append(series_div(F, num, den, M + 1))
    return [[s[t] for s in series] for t in range(M + 1)]


def systematic_sliding_parity(c: CodeSpec, M: int, pivot: int = 0) -> SlidingMatrix:
    """The reduced parity window [I | block Toeplitz of Laurent rows].

    Columns are reordered so the pivot coordinate's M+1 time positions come
    first (the identity part); block column b of the right part holds the
    remaining coordinates at time b, and block row t, block column b of the
    right part is the Laurent row h_{t-b}.
    """
    hrows = laurent_table(c, M, pivot)
    n = c.n
    data = []
    for t in range(M + 1):
        row = [1 if s == t else 0 for s in range(M + 1)]
        for b in range(M + 1):
            row.extend(hrows[t - b] if t >= b else [0] * (n - 1))
        data.append(row)
    return SlidingMatrix(c.field, "systematic", M, 1, n, data, pivot)


def systematic_h_rows(S: SlidingMatrix):
    """Recover the Laurent rows h_0..h_M from a systematic parity window."""
    M = S.j
    n = S.block_cols
    return [list(S.data[t][M + 1 : M + n]) for t in range(M + 1)]


def systematic_column_order(n: int, M: int, pivot: int = 0):
    """Source column indices of the systematic reordering of a parity window.

    Entry r of the result is the column of the plain (time-major) window that
    lands at position r of the systematic one.
    """
    order = [t * n + pivot for t in range(M + 1)]
    for t in range(M + 1):
        order.extend(t * n + i for i in range(n) if i != pivot)
    return order


# --- code description files ----------------------------------------------


def format_code_file(c: CodeSpec, comment: str = "") -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}".rstrip())
    lines.append(f"field {c.field}")
    lines.append(f"code n={c.n} k={c.k} delta={c.delta}")
    for tag, M in (("G", c.gen), ("H", c.par)):
        if M is None:
            continue
        lines.append(f"{tag} {M.rows} {M.cols}")
        for row in M.entries:
            for e in row:
                lines.append(format_poly(e))
    return "\n".join(lines) + "\n"


def parse_code_file(text: str) -> CodeSpec:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of code description")
        pos += 1
        return lines[pos - 1]

    head = take()
    if not head.startswith("field "):
        raise ParseError("code description must start with a field line")
    field = parse_field(head[len("field ") :])
    params = take()
    if not params.startswith("code "):
        raise ParseError("second line must be 'code n=.. k=.. delta=..'")
    kv = {}
    for tok in params[len("code ") :].split():
        if "=" not in tok:
            raise ParseError(f"bad code parameter token {tok!r}")
        key, val = tok.split("=", 1)
        kv[key] = int(val)
    try:
        n, k, delta = kv["n"], kv["k"], kv["delta"]
    except KeyError as e:
        raise ParseError(f"missing code parameter {e}")
    gen = par = None
    while pos < len(lines):
        header = take().split()
        if len(header) != 3 or header[0] not in ("G", "H"):
            raise ParseError(f"bad matrix header {' '.join(header)!r}")
        tag, r, cnum = header[0], int(header[1]), int(header[2])
        entries = []
        for _ in range(r):
            row = [parse_poly(take(), field) for _ in range(cnum)]
            entries.append(row)
        M = pm_make(field, entries)
        if tag == "G":
            if gen is not None:
                raise ParseError("duplicate G block")
            gen = M
        else:
            if par is not None:
                raise ParseError("duplicate H block")
            par = M
    return make_code(field, n, k, delta, gen=gen, par=par)


def load_code(path) -> CodeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def save_code(c: CodeSpec, path, comment: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code_file(c, comment))
