import io
import json

import pytest

from hirzebruch.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_conclude_json():
    code, out, _ = invoke("conclude", "--dim", "15", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["j_set"] == [2, 3, 4, 8] and data["m_set"] == [3, 4, 8]
    assert {"params", "m_set", "pi1_possible", "j_set", "alternatives"} <= set(data)
    assert all(isinstance(a, str) for a in data["alternatives"])


def test_empty_search_is_success():
    code, out, _ = invoke("bundle-search", "--dim", "8", "--json")
    assert code == 0 and json.loads(out) == []
    code, out, _ = invoke("bundle-search", "--dim", "8")
    assert code == 0 and out


def test_usage_errors_exit_2():
    assert invoke("lemma24", "--i", "0", "--j", "1")[0] == 2
    assert invoke("msequence", "--genus", "Todd")[0] == 2
    assert invoke("bundle-table")[0] == 2
    assert invoke("frobnicate")[0] == 2


def test_domain_errors_exit_1():
    code, out, err = invoke("conclude", "--dim", "8", "--json")
    assert code == 1 and "error" in json.loads(out) and err.startswith("error:")
    assert invoke("bundle-table", "--dim", "9")[0] == 1
    assert invoke("bundle-table", "--dim", "15", "--pipj", "0")[0] == 1
    assert invoke("manifold", "--data", '{"dim": 8, "numbers": {"p1^1": "1"}}')[0] == 1
    assert invoke("manifold", "--data", "not json")[0] == 1


def test_rationals_are_strings():
    code, out, _ = invoke("series", "--genus", "Ahat", "--order", "2", "--json")
    assert code == 0
    assert "7/5760" in out and "-1/24" in out
    _, out, _ = invoke("lemma24", "--i", "1", "--j", "1", "--pipj", "896", "--json")
    data = json.loads(out)
    assert data["zero_signature"]["ahat"] == "1"


def test_degenerate_zero_signature_is_reported():
    code, out, _ = invoke("lemma24", "--i", "1", "--j", "1", "--pipj", "0", "--json")
    assert code == 0 and json.loads(out)["zero_signature"]["degenerate"] is True


def test_msequence_json_shape():
    _, out, _ = invoke("msequence", "--genus", "L", "--n", "2", "--format", "json")
    assert json.loads(out)["2"][0] == {"partition": "p2^1", "coefficient": "7/45"}


def test_bundle_aliases_agree():
    assert invoke("bundle", "search", "--dim", "42", "--json") == invoke(
        "bundle-search", "--dim", "42", "--json"
    )
    assert invoke("bundle", "table", "--dim", "15") == invoke("bundle-table", "--dim", "15")


def test_manifold_inline_and_file(tmp_path):
    data = '{"dim": 8, "numbers": {"p2^1": "128", "p1^2": "896"}}'
    code, out, _ = invoke("manifold", "--data", data, "--json")
    assert code == 0 and json.loads(out)["signature"] == "0"
    assert json.loads(out)["ahat"] == "1"
    path = tmp_path / "m.json"
    path.write_text(data)
    assert invoke("manifold", "--file", str(path), "--json") == (code, out, "")


def test_bernoulli_variants():
    assert invoke("bernoulli", "--n", "4")[1].strip() == "B_4 = -1/30"
    assert "1/30" in invoke("bernoulli", "--n", "4", "--unsigned")[1]
    assert len(json.loads(invoke("bernoulli", "--n", "6", "--all", "--json")[1])) == 7


@pytest.mark.parametrize(
    "argv",
    [
        ("identity", "--genus", "L", "--i", "2", "--j", "3"),
        ("bundle-table", "--dim", "13", "--json"),
        ("conclude", "--dim", "42"),
    ],
)
def test_repeat_runs_identical(argv):
    assert invoke(*argv) == invoke(*argv)


def test_verify_all_passes():
    code, out, _ = invoke("verify-all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines if line[:4] in ("PASS", "FAIL"))
