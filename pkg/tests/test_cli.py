"""Command line behavior: outputs, file round trips, exit codes."""

import pytest

from convmds.cli import main
from convmds.code import load_code
from convmds.decoder import load_received

FIX = "fixtures"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_classify_golden(capsys):
    rc, out, err = run(capsys, "classify", "--code", f"{FIX}/smds_3_1_1_q4.code",
                       "--format", "csv")
    assert rc == 0 and not err
    assert 'profile,"3,5,6"' in out
    assert "strongly-MDS,true" in out
    assert "MDP,true" in out


def test_classify_text_has_aligned_and_csv_blocks(capsys):
    rc, out, _ = run(capsys, "classify", "--code", f"{FIX}/smds_3_1_1_q4.code")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("property") and "," not in lines[0]
    assert "property,value" in lines


def test_classify_mds_only_needs_longer_horizon(capsys):
    rc, out, _ = run(capsys, "classify", "--code", f"{FIX}/mds_2_1_2_q11.code",
                     "--horizon", "5", "--format", "csv")
    assert rc == 0
    assert "strongly-MDS,false" in out
    assert "MDS,true" in out
    assert "free-distance,6 (exact)" in out


def test_distances_table(capsys):
    rc, out, _ = run(capsys, "distances", "--code", f"{FIX}/smds_2_1_2_q8.code",
                     "--format", "csv")
    assert rc == 0
    assert "j,dc,bound,status,mark" in out
    assert "4,6,6,tight,LM" in out


def test_superregular_check(capsys):
    rc, out, _ = run(capsys, "superregular", "--check", "GF(2^1;0,1);1,1")
    assert rc == 0 and out.strip() == "true"
    rc, out, _ = run(capsys, "superregular", "--check", "GF(2^2;1,1,1);1,1,1")
    assert rc == 0 and out.strip() == "false"


def test_superregular_search(capsys):
    rc, out, _ = run(capsys, "superregular", "--search", "3", "--field",
                     "GF(2^2;1,1,1)")
    assert rc == 0
    assert out.strip() == "GF(2^2; 1,1,1) ; 1,1,2"


def test_superregular_general_search(capsys):
    rc, out, _ = run(capsys, "superregular", "--search", "3", "--field",
                     "GF(2^2;1,1,1)", "--general")
    assert rc == 0
    assert out.splitlines() == ["1 2 1", "1 1 2", "2 1 1"]


def test_superregular_search_miss(capsys):
    rc, out, err = run(capsys, "superregular", "--search", "3", "--field",
                       "GF(2)")
    assert rc == 1 and out == ""
    assert err.startswith("error[NO_SUPERREGULAR_FOUND]")


def test_construct_round_trip(tmp_path, capsys):
    out_file = tmp_path / "c.code"
    rc, out, _ = run(capsys, "construct", "--n", "2", "--delta", "2",
                     "--field", "GF(2^3;1,1,0,1)", "--toeplitz", "1,2,3,2,1",
                     "--out", str(out_file), "--format", "csv")
    assert rc == 0
    assert "strongly_mds,true" in out
    assert "d_c_M,6" in out
    rc, out, _ = run(capsys, "classify", "--code", str(out_file),
                     "--format", "csv")
    assert rc == 0 and "strongly-MDS,true" in out


def load_code_text(text):
    from convmds.code import parse_code_file
    return parse_code_file(text)


def test_construct_stdout_body_parses(capsys):
    rc, out, _ = run(capsys, "construct", "--n", "2", "--delta", "1",
                     "--field", "GF(2^2;1,1,1)", "--format", "csv")
    assert rc == 0
    body = out[out.index("field GF("):]
    c = load_code_text(body)
    assert (c.n, c.k, c.delta) == (2, 1, 1)


def test_construct_dual(tmp_path, capsys):
    out_file = tmp_path / "d.code"
    rc, out, _ = run(capsys, "construct", "--n", "3", "--delta", "2",
                     "--field", "GF(2^6;1,1,0,0,0,0,1)", "--dual",
                     "--toeplitz", "1,2,24,18,18,24,2,1",
                     "--out", str(out_file), "--format", "csv")
    assert rc == 0
    assert "dual_of_certified,true" in out
    c = load_code(out_file)
    assert (c.n, c.k, c.delta) == (3, 1, 2)
    assert c.gen is not None and c.par is None


def test_construct_rejects_bad_column(capsys):
    rc, out, err = run(capsys, "construct", "--n", "2", "--delta", "2",
                       "--field", "GF(2^3;1,1,0,1)", "--toeplitz", "1,2,5,3,7")
    assert rc == 1 and out == ""
    assert err.startswith("error[NOT_SUPERREGULAR]")


def test_decode_fixture_word(tmp_path, capsys):
    out_file = tmp_path / "decoded.word"
    rc, out, _ = run(capsys, "decode", "--code", f"{FIX}/smds_2_1_2_q8.code",
                     "--received", f"{FIX}/received_2_1_2_q8.word",
                     "--out", str(out_file), "--format", "csv")
    assert rc == 0
    assert "status,success" in out
    assert 'v0,"1,2,0,0,7,4"' in out
    word = load_received(out_file)
    assert word.n == 2


def test_simulate_compliant_and_adversarial(capsys):
    rc, out, _ = run(capsys, "simulate", "--code", f"{FIX}/smds_2_1_2_q8.code",
                     "--trials", "3", "--seed", "2", "--format", "csv")
    assert rc == 0
    assert "recovered,3/3" in out
    assert "flagged,0/3" in out
    rc, out, _ = run(capsys, "simulate", "--code", f"{FIX}/smds_2_1_2_q8.code",
                     "--trials", "3", "--seed", "2", "--adversarial",
                     "--format", "csv")
    assert rc == 0
    assert "flagged,3/3" in out


def test_dual_stdout(capsys):
    rc, out, _ = run(capsys, "dual", "--code", f"{FIX}/smds_3_1_2_q16.code")
    assert rc == 0
    body = out[out.index("field GF("):]
    c = load_code_text(body)
    assert (c.n, c.k, c.delta) == (3, 2, 2)


def test_selftest_subset(capsys):
    rc, out, _ = run(capsys, "selftest", "--only", "laurent,griesmer",
                     "--format", "csv")
    assert rc == 0
    assert "laurent,PASS" in out
    assert "griesmer,PASS" in out
    assert "2/2 checks passed" in out


def test_domain_error_single_line(capsys):
    rc, out, err = run(capsys, "classify", "--code", "missing.code")
    assert rc == 1 and out == ""
    assert err.startswith("error[") and len(err.strip().splitlines()) == 1


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["superregular"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["superregular", "--search", "3"])
    assert exc.value.code == 2
    capsys.readouterr()
