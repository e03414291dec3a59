"""Feedback decoding for rate (n-1)/n codes via sliding syndrome windows.

The decoder processes a received word one time step per cycle.  Each cycle
reads M+1 consecutive scalar syndromes, recovers the unique leading error
block among all error windows of weight at most t = floor((M+1)/2), subtracts
it, and moves on.  A systematic shortcut settles most cycles from the
syndrome weight alone; the remaining ones fall back to a small support
search over the parity window.

Weights are Hamming weights over field coordinates throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import linalg
from .code import (CodeSpec, pm_memory, sliding_parity, window_generator,
                   window_parity)
from .distances import lm_params
from .errors import (Ambiguous, BadParams, FieldMismatch, HorizonExceeded,
                     Infeasible, MissingMatrix, NoSolution, NotRateNMinus1,
                     ParseError, ShapeMismatch, BudgetExceeded)
from .galois import FiniteField, parse_field
from .poly import (format_poly, parse_poly, poly_add, poly_coef, poly_deg,
                   poly_mul, poly_norm, series_div)
from .rng import XorShift64Star

DEFAULT_SOLVE_BUDGET = 1 << 20

# Cap on enumerating an affine solution set when a support subset turns out
# rank deficient; in practice the subsets are independent and this never hits.
_NULL_ENUM_LIMIT = 4096


# --- received words -------------------------------------------------------


@dataclass(frozen=True)
class ReceivedWord:
    """A finite window of n-symbol blocks, delay normalized to time 0."""

    field: FiniteField
    symbols: tuple

    @property
    def n(self) -> int:
        return len(self.symbols[0])

    @property
    def horizon(self) -> int:
        return len(self.symbols) - 1

    def weight(self) -> int:
        return sum(1 for row in self.symbols for x in row if x)

    def coordinate(self, i: int):
        """Coefficient tuple of the i-th coordinate polynomial."""
        return poly_norm(tuple(row[i] for row in self.symbols))


def make_received(field: FiniteField, symbols) -> ReceivedWord:
    rows = [tuple(row) for row in symbols]
    if not rows:
        raise BadParams("a received word needs at least one symbol")
    n = len(rows[0])
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeMismatch("symbol blocks must share a positive length")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or not (0 <= x < field.q):
                raise FieldMismatch(f"value {x!r} outside GF({field.q})")
    return ReceivedWord(field, tuple(rows))


def word_from_polys(field: FiniteField, polys, length: int | None = None) -> ReceivedWord:
    """Bundle per-coordinate coefficient sequences into a received word."""
    ps = [tuple(p) for p in polys]
    need = max([len(p) for p in ps] + [1])
    if length is None:
        length = need
    if length < need:
        raise BadParams(f"length {length} clips a degree-{need - 1} coordinate")
    rows = [tuple(poly_coef(p, t) for p in ps) for t in range(length)]
    return make_received(field, rows)


def word_to_polys(w: ReceivedWord):
    return [w.coordinate(i) for i in range(w.n)]


# --- syndromes ------------------------------------------------------------


def _parity_row(c: CodeSpec):
    """The n parity polynomials (a_1, ..., a_n) of a rate (n-1)/n code."""
    if c.k != c.n - 1:
        raise NotRateNMinus1("feedback decoding needs k = n-1")
    H = window_parity(c)
    if H is None:
        raise MissingMatrix("no parity check available for this code")
    return [tuple(p) for p in H.entries[0]]


def _syndrome_series(F: FiniteField, symbols, parity, length: int):
    """First ``length`` coefficients of sum_i v_i(D) a_i(D)."""
    syn = [0] * length
    for i, a in enumerate(parity):
        for d, coef in enumerate(a):
            if not coef:
                continue
            for t in range(min(len(symbols), length - d)):
                v = symbols[t][i]
                if v:
                    syn[t + d] = F.add(syn[t + d], F.mul(v, coef))
    return syn


def window_syndrome(vhat: ReceivedWord, c: CodeSpec, j: int):
    """Syndrome coefficients j..j+M of the product of vhat with the parity row."""
    parity = _parity_row(c)
    _, M = lm_params(c.n, c.k, c.delta)
    if j < 0 or j + M > vhat.horizon:
        raise HorizonExceeded(
            f"window [{j}, {j + M}] leaves the received horizon {vhat.horizon}")
    syn = _syndrome_series(c.field, vhat.symbols, parity, j + M + 1)
    return syn[j:j + M + 1]


# --- the leading error block ----------------------------------------------


def _eta_solutions(F: FiniteField, window, S, t: int, budget: int):
    """All minimum-support windows eta with eta * window^T = S and wt <= t.

    Supports are scanned in ascending size, lexicographically within a size.
    Returns (size, solutions as full tuples); no solution gives (t, []).
    """
    rows = len(window)
    cols = len(window[0]) if rows else 0
    if not any(S):
        return 0, [tuple([0] * cols)]
    columns = [[window[r][ci] for r in range(rows)] for ci in range(cols)]
    spent = 0
    for size in range(1, t + 1):
        found = []
        for subset in combinations(range(cols), size):
            spent += 1
            if spent > budget:
                raise BudgetExceeded(
                    f"syndrome search exceeded {budget} linear solves")
            A = [[columns[ci][r] for ci in subset] for r in range(rows)]
            res = linalg.solve(F, A, list(S))
            if res is None:
                continue
            part, nullbasis = res
            if nullbasis:
                if F.q ** len(nullbasis) > _NULL_ENUM_LIMIT:
                    raise BudgetExceeded("degenerate support: solution set too large")
                cands = []
                for combo in product(range(F.q), repeat=len(nullbasis)):
                    v = list(part)
                    for coef, basis in zip(combo, nullbasis):
                        if coef:
                            v = [F.add(x, F.mul(coef, y)) for x, y in zip(v, basis)]
                    cands.append(v)
            else:
                cands = [part]
            for v in cands:
                if all(v):
                    eta = [0] * cols
                    for ci, val in zip(subset, v):
                        eta[ci] = val
                    found.append(tuple(eta))
        if found:
            return size, sorted(set(found))
    return t, []


def solve_eta0(S, c: CodeSpec, t: int | None = None,
               budget: int = DEFAULT_SOLVE_BUDGET, window=None):
    """The leading length-n error block shared by all light syndrome matches.

    Searches every eta in F^((M+1)n) of weight at most t with
    S = eta * (parity window)^T, smallest supports first.  All matches of
    minimum support must agree on the first block (and on the second when M
    is even); the shared first block is returned.
    """
    if c.k != c.n - 1:
        raise NotRateNMinus1("syndrome solving needs k = n-1")
    n = c.n
    M = len(S) - 1
    if t is None:
        t = (M + 1) // 2
    if window is None:
        window = sliding_parity(c, M).data
    F = c.field
    _, sols = _eta_solutions(F, window, list(S), t, budget)
    if not sols:
        raise NoSolution(f"no error window of weight <= {t} matches the syndrome")
    first = sols[0]
    for other in sols[1:]:
        if other[:n] != first[:n]:
            raise Ambiguous("matching windows disagree on the leading block")
        if M % 2 == 0 and other[n:2 * n] != first[n:2 * n]:
            raise Ambiguous("matching windows disagree on the second block")
    return list(first[:n])


def systematic_shortcut(Shat, M: int):
    """Leading error entry read off a light systematic syndrome, if light enough.

    Shat must be taken against the systematic parity window [I | T].  When
    wt(Shat) <= ceil((M+1)/2) the pivot coordinate of the leading error block
    is Shat[0] and every other coordinate is zero; returns (Shat[0], True).
    Returns None when the weight test fails and the caller must fall back.
    """
    if len(Shat) != M + 1:
        raise BadParams(f"expected {M + 1} syndrome entries, got {len(Shat)}")
    if linalg.vec_weight(Shat) <= (M + 2) // 2:
        return Shat[0], True
    return None


# --- the decoder ----------------------------------------------------------


@dataclass
class CycleRecord:
    j: int
    syndrome_weight: int
    method: str
    eta0: tuple
    tail: bool


@dataclass
class DecodeReport:
    field: FiniteField
    n: int
    M: int
    t: int
    decoded: tuple
    cycles: list
    status: str
    failures: tuple = ()
    matched: bool | None = None
    window_weights: tuple | None = None
    constraint_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.status == "success"

    @property
    def core_end(self) -> int:
        """Last time index covered by the correctness guarantee."""
        return len(self.decoded) - 1 - self.M

    def decoded_polys(self):
        return [poly_norm(tuple(row[i] for row in self.decoded))
                for i in range(self.n)]


def feedback_decode(vhat: ReceivedWord, c: CodeSpec, paranoid: bool = False,
                    budget: int = DEFAULT_SOLVE_BUDGET) -> DecodeReport:
    """Iterative syndrome decoding of a received word.

    Cycle j reads the syndrome window [j, j+M] of the current word, finds the
    unique weight-capped leading error block, subtracts it at time j and
    advances.  Every systematic pivot is tried for the weight shortcut before
    the support search runs.  Cycles whose window reaches past the horizon
    are flagged as tail cycles; unresolved cycles are recorded and skipped
    with a zero correction rather than aborting.

    With ``paranoid`` set, shortcut answers are cross-checked against the
    support search and any disagreement raises Ambiguous.
    """
    F = c.field
    n = c.n
    parity = _parity_row(c)
    _, M = lm_params(c.n, c.k, c.delta)
    t = (M + 1) // 2
    T = vhat.horizon
    if T < M:
        raise BadParams(f"horizon {T} is shorter than one window (M={M})")
    pivots = [i for i in range(n) if poly_coef(parity[i], 0)]
    word = [list(row) for row in vhat.symbols] + [[0] * n for _ in range(M)]
    syn = _syndrome_series(F, word, parity, T + M + 1)
    par_window = sliding_parity(c, M).data
    cycles = []
    failures = []
    for j in range(T + 1):
        S = syn[j:j + M + 1]
        sw = linalg.vec_weight(S)
        eta0 = [0] * n
        if sw == 0:
            method = "zero"
        else:
            method = ""
            for i in pivots:
                Shat = series_div(F, tuple(S), parity[i], M + 1)
                hit = systematic_shortcut(Shat, M)
                if hit is not None:
                    eta0[i] = hit[0]
                    method = f"shortcut:{i}"
                    break
            if method and paranoid:
                if solve_eta0(S, c, t, budget, par_window) != eta0:
                    raise Ambiguous(
                        f"cycle {j}: shortcut disagrees with the support search")
            if not method:
                method = "search"
                try:
                    eta0 = solve_eta0(S, c, t, budget, par_window)
                except (NoSolution, Ambiguous) as exc:
                    kind = exc.code.lower()
                    failures.append((j, kind))
                    method = f"failed:{kind}"
                    eta0 = [0] * n
        for i in range(n):
            e = eta0[i]
            if e:
                word[j][i] = F.sub(word[j][i], e)
                for d, coef in enumerate(parity[i]):
                    if coef and j + d < len(syn):
                        syn[j + d] = F.sub(syn[j + d], F.mul(e, coef))
        cycles.append(CycleRecord(j, sw, method, tuple(eta0), j > T - M))
    if failures:
        status = f"{failures[0][1]}({failures[0][0]})"
    else:
        status = "success"
    decoded = tuple(tuple(row) for row in word[:T + 1])
    return DecodeReport(F, n, M, t, decoded, cycles, status, tuple(failures))


# --- error channels -------------------------------------------------------


@dataclass(frozen=True)
class ErrorPattern:
    """An additive error sequence with a sliding-window weight budget."""

    field: FiniteField
    symbols: tuple
    M: int
    t: int

    @property
    def n(self) -> int:
        return len(self.symbols[0])

    def weight(self) -> int:
        return sum(1 for row in self.symbols for x in row if x)

    def window_weights(self):
        L = len(self.symbols)
        out = []
        for j in range(L):
            out.append(sum(1 for tt in range(j, min(j + self.M + 1, L))
                           for x in self.symbols[tt] if x))
        return tuple(out)

    @property
    def constraint_ok(self) -> bool:
        return all(w <= self.t for w in self.window_weights())


def _window_weight_at(grid, pos: int, M: int, t: int) -> bool:
    """Whether every window that covers time ``pos`` still respects the cap."""
    L = len(grid)
    for j in range(max(0, pos - M), pos + 1):
        w = sum(1 for tt in range(j, min(j + M + 1, L)) for x in grid[tt] if x)
        if w > t:
            return False
    return True


def make_error_pattern(field: FiniteField, length: int, n: int, M: int, t: int,
                       seed: int, adversarial: bool = False,
                       errors: int | None = None) -> ErrorPattern:
    """Seeded error sequence for the sliding-window channel.

    Compliant mode rejection-samples nonzero symbols, keeping a placement
    only while every window of M+1 blocks stays within the weight cap t.
    Adversarial mode plants t+1 errors inside one window on purpose.  When
    ``errors`` is given, exactly that many placements are required.
    """
    if length < 1 or n < 1 or M < 0 or t < 0:
        raise BadParams("pattern needs length, n >= 1 and M, t >= 0")
    rng = XorShift64Star(seed)
    grid = [[0] * n for _ in range(length)]
    q = field.q

    def nonzero():
        return 1 + rng.below(q - 1)

    if adversarial:
        start = rng.below(max(1, length - M))
        span = min(M + 1, length - start)
        slots = [(start + dt, i) for dt in range(span) for i in range(n)]
        if len(slots) < t + 1:
            raise Infeasible(
                f"window from {start} has only {len(slots)} slots, need {t + 1}")
        remaining = list(slots)
        for _ in range(t + 1):
            pos, coord = remaining.pop(rng.below(len(remaining)))
            grid[pos][coord] = nonzero()
        return ErrorPattern(field, tuple(tuple(r) for r in grid), M, t)

    if errors is not None and t == 0 and errors > 0:
        raise Infeasible("cap t=0 admits no errors at all")
    target = errors if errors is not None else t * ((length + M) // (M + 1))
    placed = 0
    tries = 0
    limit = 400 * max(1, target)
    while placed < target and tries < limit:
        tries += 1
        pos = rng.below(length)
        coord = rng.below(n)
        if grid[pos][coord]:
            continue
        grid[pos][coord] = nonzero()
        if _window_weight_at(grid, pos, M, t):
            placed += 1
        else:
            grid[pos][coord] = 0
    if errors is not None and placed < errors:
        raise Infeasible(
            f"placed only {placed} of {errors} errors under the window cap {t}")
    return ErrorPattern(field, tuple(tuple(r) for r in grid), M, t)


# --- encoding and end-to-end simulation ------------------------------------


def encode_word(c: CodeSpec, message, length: int) -> ReceivedWord:
    """Codeword symbols 0..length-1 of the message row times the generator."""
    G = window_generator(c)
    if G is None:
        raise MissingMatrix("no generator available for this code")
    if len(message) != c.k:
        raise ShapeMismatch(f"message needs {c.k} coordinates, got {len(message)}")
    F = c.field
    polys = []
    for i in range(c.n):
        acc = ()
        for r in range(c.k):
            acc = poly_add(F, acc, poly_mul(F, tuple(message[r]), G.entries[r][i]))
        polys.append(acc)
    top = max([poly_deg(p) for p in polys] + [-1])
    if top >= length:
        raise BadParams(f"codeword degree {top} does not fit in length {length}")
    return word_from_polys(F, polys, length)


def simulate(c: CodeSpec, message, error: ErrorPattern, horizon: int,
             paranoid: bool = False,
             budget: int = DEFAULT_SOLVE_BUDGET) -> DecodeReport:
    """Encode, distort, decode and compare.

    The report's ``matched`` flag records whether the decoder recovered the
    sent codeword on the guaranteed region 0..horizon-M; ``window_weights``
    and ``constraint_ok`` describe the injected error.
    """
    F = c.field
    G = window_generator(c)
    if G is None:
        raise MissingMatrix("no generator available for this code")
    _, M = lm_params(c.n, c.k, c.delta)
    mdeg = max([poly_deg(tuple(u)) for u in message] + [-1])
    if mdeg + pm_memory(G) > horizon - M:
        raise BadParams("message reaches into the undecoded tail")
    length = horizon + 1
    if len(error.symbols) > length:
        raise BadParams("error pattern outruns the horizon")
    if error.n != c.n:
        raise ShapeMismatch("error pattern and code disagree on n")
    sent = encode_word(c, message, length)
    mixed = [list(row) for row in sent.symbols]
    for tpos, row in enumerate(error.symbols):
        for i, e in enumerate(row):
            if e:
                mixed[tpos][i] = F.add(mixed[tpos][i], e)
    received = make_received(F, mixed)
    report = feedback_decode(received, c, paranoid, budget)
    core = report.core_end
    report.matched = report.decoded[:core + 1] == sent.symbols[:core + 1]
    padded = ErrorPattern(F, tuple(tuple(r) for r in error.symbols)
                          + tuple(tuple([0] * c.n) for _ in range(length - len(error.symbols))),
                          error.M, error.t)
    report.window_weights = padded.window_weights()
    report.constraint_ok = error.constraint_ok
    return report


# --- received-word files ----------------------------------------------------


def format_received_file(w: ReceivedWord, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"field {w.field}")
    lines.append(f"received n={w.n} length={len(w.symbols)}")
    for i in range(w.n):
        lines.append(format_poly(w.coordinate(i)))
    return "\n".join(lines) + "\n"


def parse_received_file(text: str) -> ReceivedWord:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise ParseError("received-word file needs a field and a header line")
    if not lines[0].startswith("field "):
        raise ParseError("first line must be 'field GF(...)'")
    field = parse_field(lines[0][6:].strip())
    head = lines[1].split()
    if len(head) != 3 or head[0] != "received":
        raise ParseError("second line must be 'received n=<n> length=<len>'")
    try:
        kv = dict(part.split("=", 1) for part in head[1:])
        n = int(kv["n"])
        length = int(kv["length"])
    except (ValueError, KeyError) as exc:
        raise ParseError(f"bad received header: {lines[1]!r}") from exc
    body = lines[2:]
    if len(body) != n:
        raise ParseError(f"expected {n} coordinate lines, found {len(body)}")
    polys = [parse_poly(ln, field) for ln in body]
    return word_from_polys(field, polys, length)


def load_received(path) -> ReceivedWord:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_received_file(fh.read())


def save_received(w: ReceivedWord, path, comment: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_received_file(w, comment))
