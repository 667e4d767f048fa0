import json

import pytest

from semigroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text_golden(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "24,26,36,39")
    assert code == 0
    assert "betti = {72, 78, 156}" in out
    assert "156: no isolated factorizations" in out


def test_analyze_affine_catoms(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "(1,0);(0,2);(0,3)")
    assert code == 0
    assert "C(M) = {2, 3}" in out


def test_analyze_json_betti(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "2,3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["betti"]["betti"] == [6]


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "--gens", "16,20,30,45",
                       "--element", "80")
    assert code == 0
    assert "(0, 1, 2, 0)" in out and "(0, 4, 0, 0)" in out \
        and "(5, 0, 0, 0)" in out
    assert "denumerant = 3" in out


def test_search(capsys):
    code, out, _ = run(capsys, "search", "min-frobenius-betti-divisible",
                       "--edim", "2", "--max-frobenius", "10")
    assert code == 0
    assert out.strip() == "1 : <2,3>"


def test_construct_round_trip(capsys):
    code, out, _ = run(capsys, "construct", "--a", "7,5,2,3",
                       "--f", "1,1,1,2", "--json")
    assert code == 0
    data = json.loads(out)
    assert sorted(data["gens"]) == [30, 42, 105, 140]
    code, out, _ = run(capsys, "construct", "--recover", "--gens",
                       "30,42,105,140", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["a"] == [7, 5, 2, 3] and data["f"] == [1, 1, 1, 2]


def test_glue(capsys):
    code, out, _ = run(capsys, "glue", "--gens1", "3,5", "--gens2", "1",
                       "--a1", "7", "--a2", "8", "--json")
    assert code == 0
    data = json.loads(out)
    assert sorted(data["gens"]) == [8, 21, 35]
    assert data["predicted_betti"] == data["actual_betti"]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "6")
    assert code == 0
    assert "0 violations" in out


def test_verify_corpus_file(tmp_path, capsys):
    p = tmp_path / "c.txt"
    p.write_text("3,4,5\n16,20,30,45\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(p))
    assert code == 0


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--gens", "abc")
    assert code == 2
    assert "error" in err


def test_exit_code_infeasible(capsys):
    # e >= 2 is required for the parametrized family
    code, _, err = run(capsys, "construct", "--a", "4,6", "--f", "1,1")
    assert code == 3
    assert "infeasible" in err


def test_json_big_integers_as_strings():
    from semigroups.cli import _jsonable
    big = (1 << 53) + 1
    assert _jsonable({"x": big, "y": 7}) == {"x": str(big), "y": 7}
    assert _jsonable([(1 << 53), -big]) == [1 << 53, str(-big)]


def test_json_byte_stable(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "--genus", "5", "--json",
                           "--threads", "8")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
