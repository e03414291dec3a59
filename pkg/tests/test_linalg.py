"""Linear algebra over finite fields and exact integer determinants."""

from fractions import Fraction

from convmds.galois import standard_field
from convmds.linalg import (det_bareiss, identity, in_span, kernel_basis,
                            mat_det, mat_inv, mat_mul, mat_rank, solve,
                            transpose, vec_mat, vec_weight)
from convmds.rng import XorShift64Star


def random_matrix(rng, q, r, c):
    return [[rng.below(q) for _ in range(c)] for _ in range(r)]


def det_permutation(F, A):
    """Leibniz expansion, independent of the elimination code."""
    n = len(A)
    import itertools
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = 1
        for i in range(n):
            term = F.mul(term, A[i][perm[i]])
        total = F.add(total, term if sign > 0 else F.neg(term))
    return total


def test_det_matches_leibniz():
    rng = XorShift64Star(11)
    for q in [2, 4, 11]:
        F = standard_field(q)
        for n in (1, 2, 3):
            for _ in range(30):
                A = random_matrix(rng, q, n, n)
                assert mat_det(F, A) == det_permutation(F, A)


def test_inverse_round_trip():
    rng = XorShift64Star(23)
    F = standard_field(16)
    done = 0
    while done < 20:
        A = random_matrix(rng, 16, 4, 4)
        if mat_det(F, A) == 0:
            continue
        done += 1
        I = identity(F, 4)
        assert mat_mul(F, A, mat_inv(F, A)) == I
        assert mat_mul(F, mat_inv(F, A), A) == I


def test_solve_recovers_known_solution():
    rng = XorShift64Star(31)
    F = standard_field(8)
    for _ in range(60):
        rows, cols = 3 + rng.below(3), 2 + rng.below(4)
        A = random_matrix(rng, 8, rows, cols)
        x = [rng.below(8) for _ in range(cols)]
        b = [row[0] for row in mat_mul(F, A, [[v] for v in x])]
        got = solve(F, A, b)
        assert got is not None
        particular, nullbasis = got
        check = mat_mul(F, A, [[v] for v in particular])
        assert [row[0] for row in check] == b
        for vec in nullbasis:
            prod = mat_mul(F, A, [[v] for v in vec])
            assert all(row[0] == 0 for row in prod)


def test_solve_inconsistent_returns_none():
    F = standard_field(2)
    A = [[1, 0], [1, 0]]
    assert solve(F, A, [1, 0]) is None
    assert solve(F, A, [1, 1]) is not None


def test_rank_and_kernel_dimensions():
    rng = XorShift64Star(47)
    F = standard_field(4)
    for _ in range(40):
        rows, cols = 2 + rng.below(4), 2 + rng.below(4)
        A = random_matrix(rng, 4, rows, cols)
        r = mat_rank(F, A)
        null = kernel_basis(F, A)
        assert r + len(null) == cols
        for vec in null:
            assert all(x == 0 for x in vec_mat(F, vec, transpose(A)))


def test_in_span():
    F = standard_field(3)
    vectors = [(1, 0, 2), (0, 1, 1)]
    assert in_span(F, vectors, (1, 1, 0))  # sum of the two
    assert not in_span(F, vectors, (0, 0, 1))
    assert in_span(F, [], (0, 0))
    assert not in_span(F, [], (1, 0))


def test_vec_weight():
    assert vec_weight((0, 3, 0, 1)) == 2
    assert vec_weight(()) == 0


def test_det_bareiss_matches_fraction_elimination():
    rng = XorShift64Star(61)
    for n in (1, 2, 3, 4, 5):
        for _ in range(20):
            A = [[rng.below(19) - 9 for _ in range(n)] for _ in range(n)]
            exact = det_fraction_oracle(A)
            assert det_bareiss(A) == exact


def det_fraction_oracle(A):
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            for c in range(col, n):
                M[r][c] -= f * M[col][c]
    assert det.denominator == 1
    return int(det)


def test_bareiss_big_integers_stay_exact():
    A = [[(i * 37 + j * 101 + 3) ** 2 for j in range(6)] for i in range(6)]
    assert det_bareiss(A) == det_fraction_oracle(A)
