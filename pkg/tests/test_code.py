"""Code descriptions, sliding matrices, and the code file format."""

import pytest

from convmds.code import (code_degree, derive_generator, derive_parity, dual,
                          format_code_file, full_size_minors, is_basic,
                          laurent_table, make_code, parse_code_file,
                          pm_coefficient, pm_is_zero, pm_make, pm_memory,
                          pm_mul, pm_transpose, sliding_generator,
                          sliding_parity, systematic_column_order,
                          systematic_h_rows, systematic_sliding_parity,
                          window_generator, window_parity)
from convmds.decoder import encode_word
from convmds.errors import (A1NotUnit, BadParams, FieldMismatch,
                            MissingMatrix, NotBasic, NotRateNMinus1,
                            ParseError, ShapeMismatch)
from convmds.fixtures import all_fixtures, fixture
from convmds.galois import standard_field
from convmds.linalg import identity, mat_mul, vec_mat
from convmds.poly import poly_eval
from convmds.rng import XorShift64Star

F2 = standard_field(2)
F4 = standard_field(4)
F8 = standard_field(8)


def test_pm_make_validation():
    with pytest.raises(ShapeMismatch):
        pm_make(F4, [])
    with pytest.raises(ShapeMismatch):
        pm_make(F4, [[(1,)], [(1,), (2,)]])
    with pytest.raises(FieldMismatch):
        pm_make(F4, [[(9,)]])
    M = pm_make(F4, [[(1, 0, 0), (0,)]])
    assert M.entries == (((1,), ()),)


def test_pm_mul_matches_pointwise_evaluation():
    rng = XorShift64Star(13)
    q = 8
    for _ in range(25):
        A = pm_make(F8, [[tuple(rng.below(q) for _ in range(3))
                          for _ in range(2)] for _ in range(2)])
        B = pm_make(F8, [[tuple(rng.below(q) for _ in range(3))
                          for _ in range(4)] for _ in range(2)])
        C = pm_mul(A, B)
        for x in range(q):
            Ax = [[poly_eval(F8, e, x) for e in row] for row in A.entries]
            Bx = [[poly_eval(F8, e, x) for e in row] for row in B.entries]
            Cx = [[poly_eval(F8, e, x) for e in row] for row in C.entries]
            assert mat_mul(F8, Ax, Bx) == Cx


def test_pm_helpers():
    M = pm_make(F4, [[(1, 2), (0, 0, 3)]])
    assert pm_memory(M) == 2
    assert pm_coefficient(M, 0) == [[1, 0]]
    assert pm_coefficient(M, 2) == [[0, 3]]
    assert pm_transpose(M).entries == (((1, 2),), ((0, 0, 3),))
    assert not pm_is_zero(M)
    assert pm_is_zero(pm_make(F4, [[(0,)]]))


def test_basic_and_degree():
    good = pm_make(F2, [[(1,), (0, 1)]])
    assert is_basic(good)
    assert code_degree(good) == 1
    shared = pm_make(F2, [[(1, 1), (1, 0, 1)]])  # gcd x+1
    assert not is_basic(shared)
    minors = dict(full_size_minors(good))
    assert minors == {(0,): (1,), (1,): (0, 1)}


def test_fixture_matrices_are_basic_with_declared_degree():
    for name, fx in sorted(all_fixtures().items()):
        for M in (fx.code.gen, fx.code.par):
            if M is None:
                continue
            assert is_basic(M), name
            assert code_degree(M) == fx.code.delta, name


def test_make_code_errors():
    with pytest.raises(BadParams):
        make_code(F2, 2, 2, 0, gen=[[(1,), (1,)], [(0,), (1,)]])
    with pytest.raises(MissingMatrix):
        make_code(F2, 2, 1, 0)
    with pytest.raises(ShapeMismatch):
        make_code(F2, 3, 1, 0, gen=[[(1,), (1,)]])
    with pytest.raises(BadParams):
        make_code(F2, 2, 1, 0, gen=[[(1,), (1,)]], par=[[(1,), (0, 1)]])
    with pytest.raises(NotBasic):
        make_code(F2, 2, 1, 2, gen=[[(1, 1), (1, 0, 1)]])
    with pytest.raises(BadParams):
        make_code(F2, 2, 1, 2, gen=[[(1,), (0, 1)]])


def test_dual_swaps_roles():
    c = fixture("smds_3_1_2_q16").code
    d = dual(c)
    assert (d.n, d.k, d.delta) == (3, 2, 2)
    assert d.gen == c.par and d.par == c.gen
    dd = dual(d)
    assert dd.gen == c.gen and dd.par == c.par


def test_two_sided_fixtures_are_orthogonal():
    for name, fx in sorted(all_fixtures().items()):
        c = fx.code
        if c.gen is None or c.par is None:
            continue
        assert pm_is_zero(pm_mul(c.gen, pm_transpose(c.par))), name


def test_derived_complements_are_orthogonal():
    for name, fx in sorted(all_fixtures().items()):
        c = fx.code
        if c.k not in (1, c.n - 1):
            continue
        if c.gen is not None:
            H = derive_parity(c)
            assert pm_is_zero(pm_mul(c.gen, pm_transpose(H))), name
        if c.par is not None:
            G = derive_generator(c)
            assert pm_is_zero(pm_mul(G, pm_transpose(c.par))), name


def test_window_matrices_availability():
    c = fixture("smds_5_2_2_q16").code  # k=2, n=5: no parity derivable
    assert window_generator(c) is not None
    assert window_parity(c) is None
    r = fixture("smds_2_1_2_q8").code
    assert window_generator(r) is not None
    assert window_parity(r) is not None


def test_sliding_generator_encodes_windows():
    rng = XorShift64Star(55)
    for name in ("smds_3_1_1_q4", "smds_3_2_2_q16", "smds_2_1_2_q8"):
        c = fixture(name).code
        mem = pm_memory(window_generator(c))
        for j in (0, 1, 3):
            S = sliding_generator(c, j)
            assert S.rows == (j + 1) * c.k and S.cols == (j + 1) * c.n
            msg = [tuple(rng.below(c.field.q) for _ in range(j + 1))
                   for _ in range(c.k)]
            word = encode_word(c, msg, length=j + 1 + mem)
            uflat = [msg[r][t] for t in range(j + 1) for r in range(c.k)]
            vflat = [x for blk in word.symbols[: j + 1] for x in blk]
            assert vec_mat(c.field, uflat, S.data) == vflat


def test_sliding_parity_annihilates_codewords():
    rng = XorShift64Star(56)
    for name in ("smds_3_1_2_q16", "smds_2_1_3_q32", "smds_4_3_1_q16"):
        c = fixture(name).code
        j = 4
        S = sliding_parity(c, j)
        assert S.rows == (j + 1) * (c.n - c.k)
        mem = pm_memory(window_generator(c))
        msg = [tuple(rng.below(c.field.q) for _ in range(j + 1))
               for _ in range(c.k)]
        word = encode_word(c, msg, length=j + 1 + mem)
        vflat = [x for blk in word.symbols[: j + 1] for x in blk]
        prod = mat_mul(c.field, S.data, [[x] for x in vflat])
        assert all(row[0] == 0 for row in prod)


def test_systematic_window_structure():
    c = fixture("smds_2_1_2_q8").code
    M = 4
    S = systematic_sliding_parity(c, M)
    left = [row[: M + 1] for row in S.data]
    assert left == identity(c.field, M + 1)
    assert systematic_h_rows(S) == laurent_table(c, M)


def test_systematic_window_annihilates_reordered_codewords():
    rng = XorShift64Star(57)
    for name, pivot in (("smds_2_1_2_q8", 0), ("smds_2_1_2_q8", 1),
                        ("smds_3_2_2_q64", 2)):
        c = fixture(name).code
        M = 3
        S = systematic_sliding_parity(c, M, pivot=pivot)
        order = systematic_column_order(c.n, M, pivot=pivot)
        assert sorted(order) == list(range((M + 1) * c.n))
        mem = pm_memory(window_generator(c))
        msg = [tuple(rng.below(c.field.q) for _ in range(M + 1))
               for _ in range(c.k)]
        word = encode_word(c, msg, length=M + 1 + mem)
        vflat = [x for blk in word.symbols[: M + 1] for x in blk]
        vperm = [vflat[col] for col in order]
        prod = mat_mul(c.field, S.data, [[x] for x in vperm])
        assert all(row[0] == 0 for row in prod)


def test_laurent_requires_unit_pivot():
    c = make_code(F2, 2, 1, 1, par=[[(0, 1), (1,)]])  # a_0 = D
    with pytest.raises(A1NotUnit):
        laurent_table(c, 3, pivot=0)
    assert laurent_table(c, 3, pivot=1) == [[0], [1], [0], [0]]
    with pytest.raises(NotRateNMinus1):
        laurent_table(fixture("smds_3_1_2_q16").code, 3)


def test_code_file_round_trip():
    for name, fx in sorted(all_fixtures().items()):
        text = format_code_file(fx.code, comment=f"fixture {name}")
        back = parse_code_file(text)
        assert back.gen == fx.code.gen and back.par == fx.code.par, name
        assert (back.n, back.k, back.delta) == (fx.code.n, fx.code.k,
                                                fx.code.delta)


def test_code_file_parse_errors():
    with pytest.raises(ParseError):
        parse_code_file("code n=2 k=1 delta=0\n")
    with pytest.raises(ParseError):
        parse_code_file("field GF(2)\nwrong\n")
    good = format_code_file(fixture("smds_3_1_1_q4").code)
    with pytest.raises(ParseError):
        parse_code_file(good + "G 1 3\n1\n1\n1\n")
    with pytest.raises(ParseError):
        parse_code_file(good + "Q 1 3\n")
