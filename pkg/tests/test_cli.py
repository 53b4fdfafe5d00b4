"""End-to-end CLI behaviour: output, JSON mode, exit codes."""

import json

import pytest

from arrangements import CORPUS, parse_report
from arrangements.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_reduced_boolean3(capsys):
    code, out, _ = run(capsys, "charpoly", "corpus:boolean3", "--reduced")
    assert code == 0
    assert "t^2 - 2t + 1" in out


def test_charpoly_verify_passes(capsys):
    code, out, _ = run(capsys, "charpoly", "corpus:braid-ess3", "--verify")
    assert code == 0
    assert "verified by" in out
    assert "finite-field" in out


def test_charpoly_json(capsys):
    code, out, _ = run(capsys, "charpoly", "corpus:generic45", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == [4, -10, 10, -5, 1]
    assert data["reduced"] is False


def test_chambers_with_verify(capsys):
    code, out, _ = run(capsys, "chambers", "corpus:supersolvable3", "--verify")
    assert code == 0
    assert "chambers: 32" in out


def test_ziegler_table(capsys):
    code, out, _ = run(capsys, "ziegler", "corpus:braid-ess3", "--h0", "0")
    assert code == 0
    assert "|m| = 5" in out
    assert "m=2" in out


def test_ziegler_json(capsys):
    code, out, _ = run(capsys, "ziegler", "corpus:braid-ess4", "--h0", "0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 9
    assert sorted(data["mult"]) == [1, 1, 1, 2, 2, 2]


def test_exponents_multiarrangement(capsys):
    code, out, _ = run(capsys, "exponents", "corpus:three-lines-221")
    assert code == 0
    assert "Free(2, 3)" in out


def test_exponents_unknown_exit_code(capsys):
    code, out, _ = run(capsys, "exponents", "corpus:braid-ess3", "--bound", "2")
    assert code == 2
    assert "Unknown" in out


def test_freeness_all_methods_agree(capsys):
    code, out, _ = run(capsys, "freeness", "corpus:braid-ess3", "--method", "all")
    assert code == 0
    assert out.count("Free(1, 2, 3)") == 4  # three methods plus the merge
    for method in ("yoshinaga", "abe-yoshinaga", "saito"):
        assert method in out


def test_freeness_json(capsys):
    code, out, _ = run(capsys, "freeness", "corpus:generic34", "--h0", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["merged"]["status"] == "NotFree"
    assert set(data["methods"]) == {"yoshinaga", "abe-yoshinaga", "saito"}


def test_freeness_explicit_method_wrong_rank_exits_1(capsys):
    code, _, err = run(capsys, "freeness", "corpus:generic45", "--method", "yoshinaga")
    assert code == 1
    assert "WrongRank" in err


def test_freeness_skips_inapplicable_methods_in_all_mode(capsys):
    code, out, _ = run(capsys, "freeness", "corpus:generic45", "--method", "all")
    assert code == 0  # saito and abe-yoshinaga agree: NotFree is definitive
    assert "yoshinaga: skipped" in out


def test_freeness_unknown_exit_code(capsys):
    code, out, _ = run(
        capsys, "freeness", "corpus:braid-ess3", "--method", "saito", "--bound", "2"
    )
    assert code == 2
    assert "Unknown" in out


def test_freeness_pruning_is_decisive_below_bound(capsys):
    # The Hilbert-series pruning rules out every exponent profile for
    # generic45 already at degree 1, so even --bound 1 is definitive.
    code, out, _ = run(
        capsys, "freeness", "corpus:generic45", "--method", "saito", "--bound", "1"
    )
    assert code == 0
    assert "NotFree" in out


def test_compare_generic34(capsys):
    code, out, _ = run(capsys, "compare", "corpus:generic34", "--h0", "3")
    assert code == 0
    assert "strict" in out
    assert "sum b = 7, sum sigma = 6" in out
    assert "MCA: no" in out


def test_compare_json_roundtrip(capsys):
    code, out, _ = run(capsys, "compare", "corpus:generic34", "--h0", "3", "--json")
    assert code == 0
    report = parse_report(out)
    assert list(report.table.b) == [1, 3, 3]
    assert report.mca is False


def test_compare_unresolved_sigma_exits_2(capsys):
    code, out, _ = run(capsys, "compare", "corpus:generic45", "--h0", "0")
    assert code == 2
    assert "unresolved" in out


def test_compare_assert_tame_is_recorded(capsys):
    code, out, _ = run(
        capsys, "compare", "corpus:generic45", "--h0", "0", "--assert-tame"
    )
    assert code == 2
    assert "user" in out


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0
    for name in CORPUS:
        assert name in out


def test_corpus_get_is_loadable(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "get", "braid-ess3")
    assert code == 0
    path = tmp_path / "braid.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "charpoly", str(path))
    assert code == 0
    assert "t^3 - 6t^2 + 11t - 6" in out2


def test_corpus_get_unknown_name(capsys):
    code, _, err = run(capsys, "corpus", "get", "nope")
    assert code == 1
    assert "unknown corpus entry" in err


def test_corpus_get_without_name(capsys):
    code, _, err = run(capsys, "corpus", "get")
    assert code == 1
    assert "NAME" in err


def test_unknown_corpus_reference(capsys):
    code, _, err = run(capsys, "charpoly", "corpus:missing")
    assert code == 1
    assert "unknown corpus entry" in err


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "charpoly", "/no/such/file.json")
    assert code == 1
    assert "error" in err


def test_malformed_file_diagnostic(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, "hyperplanes": [[1, "x"]]}')
    code, _, err = run(capsys, "charpoly", str(path))
    assert code == 1
    assert "hyperplanes[0][1]" in err


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compare", "corpus:generic34"])  # --h0 is required
    assert info.value.code == 1


def test_mult_rejected_where_simple_needed(capsys):
    code, _, err = run(capsys, "ziegler", "corpus:three-lines-221", "--h0", "0")
    assert code == 1
    assert "simple" in err


def test_env_var_degree_bound(capsys, monkeypatch):
    monkeypatch.setenv("ARRANGEMENTS_DEGREE_BOUND", "1")
    code, out, _ = run(capsys, "exponents", "corpus:braid-ess3")
    assert code == 2  # bound 1 leaves the search unresolved
    monkeypatch.setenv("ARRANGEMENTS_DEGREE_BOUND", "notanint")
    code, _, err = run(capsys, "exponents", "corpus:braid-ess3")
    assert code == 1
    assert "ARRANGEMENTS_DEGREE_BOUND" in err
