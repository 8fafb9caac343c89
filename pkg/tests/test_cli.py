import json

import pytest

from apwords.automata import Automaton, are_equivalent
from apwords.cli import main
from apwords.factors import build_periodic_factor_automaton
from apwords.regex import compile_regex

from grammars import dyck


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def sub_abstar(tmp_path):
    path = tmp_path / "sub_abstar.json"
    path.write_text(build_periodic_factor_automaton("ab").to_json(), encoding="utf-8")
    return str(path)


def test_not_closed_regex(capsys):
    report = run_json(capsys, "is-almost-periodic", "--regex", "(ab)*", "--alphabet", "ab")
    assert report["command"] == "is-almost-periodic"
    assert report["result"]["verdict"] == "NO"
    assert report["result"]["counterexample"] == "a"


def test_almost_periodic_file(capsys, sub_abstar):
    result = run_json(capsys, "is-almost-periodic", "--automaton", sub_abstar)["result"]
    assert result["verdict"] == "YES" and result["witness"] == "ab"


def test_confluence_refuted(capsys):
    result = run_json(capsys, "confluence", "--regex", "a*|b*", "--alphabet", "ab",
                      "--max-len", "3")["result"]
    assert result["verdict"] == "NO" and result["counterexample"] == ["a", "b"]


def test_confluence_pair(capsys):
    result = run_json(capsys, "confluence", "--regex", "a*b*", "--alphabet", "ab",
                      "--pair", "a", "b")["result"]
    assert result["witness"] == "ab"


def test_text_output(capsys):
    code, out, _ = run(capsys, "is-biinfinite-factors", "--regex", "a*b*", "--alphabet", "ab")
    assert code == 0
    assert out.startswith("YES [BOUNDED(6)]")


def test_factors_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "factors", "--regex", "(ab)*", "--alphabet", "ab")
    assert code == 0
    emitted = Automaton.from_json(out)
    assert are_equivalent(emitted, build_periodic_factor_automaton("ab"))
    path = tmp_path / "again.json"
    path.write_text(out, encoding="utf-8")
    assert run_json(capsys, "is-closed", "--automaton", str(path))["result"]["verdict"] == "YES"


def test_automaton_file_round_trip(tmp_path):
    a = compile_regex("(a|bb)*a", "ab")
    path = tmp_path / "a.json"
    path.write_text(a.to_json(), encoding="utf-8")
    assert are_equivalent(Automaton.from_json(path.read_text(encoding="utf-8")), a)


def test_pump_word_and_finite(capsys):
    result = run_json(capsys, "pump-word", "--regex", "a*b*", "--alphabet", "ab")["result"]
    assert result["word"] == "a"
    assert run_json(capsys, "is-finite", "--regex", "ab|b", "--alphabet", "ab")["result"] == {
        "finite": True}
    code, _, err = run(capsys, "pump-word", "--regex", "ab", "--alphabet", "ab")
    assert code == 2 and "finite" in err


def test_ap_sequence_factors(capsys, sub_abstar):
    result = run_json(capsys, "is-ap-sequence-factors", "--automaton", sub_abstar)["result"]
    assert result["verdict"] == "YES"


def test_seq_commands(capsys):
    assert run_json(capsys, "seq", "prefix", "--thue-morse", "--n", "8")["result"]["prefix"] \
        == "01101001"
    code, out, _ = run(capsys, "seq", "recurrence", "--periodic", "ab", "--n", "3",
                       "--prefix-len", "64")
    assert out.splitlines() == ["n\tvalue\tprefix_len\texactness", "1\t2\t64\tESTIMATE",
                                "2\t3\t64\tESTIMATE", "3\t4\t64\tESTIMATE"]
    rows = run_json(capsys, "seq", "factors", "--thue-morse", "--n", "3")["result"]["rows"]
    assert [r["count"] for r in rows] == [2, 4, 6]
    rows = run_json(capsys, "seq", "recurrence", "--morphism", "0:01,1:10", "--seed", "0",
                    "--factor", "0")["result"]["rows"]
    assert rows[0]["value"] == 3
    result = run_json(capsys, "seq", "probe", "--thue-morse", "--max-period", "3",
                      "--n", "12")["result"]
    assert result["verdict"] == "NO" and result["bound"] == 3


def test_ctx_commands(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(dyck().to_dict()), encoding="utf-8")
    result = run_json(capsys, "ctx", "generate", "--grammar", str(path), "--max-len", "4")
    assert result["command"] == "ctx generate"
    assert result["result"]["words"] == ["ab", "aabb", "abab"]
    result = run_json(capsys, "ctx", "probe", "--grammar", str(path))["result"]
    assert result["consistency"] == "CONSISTENT" and result["family"] == "I"


def test_grammar_file_format(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"alphabet": ["a", "b"], "base": ["ab"],
                                "contexts": [["a", "b"]], "mode": "internal",
                                "selector": None}), encoding="utf-8")
    result = run_json(capsys, "ctx", "generate", "--grammar", str(path), "--max-len", "4")
    assert result["result"]["count"] == 3


@pytest.mark.parametrize("argv", [
    ["is-closed", "--regex", "a**|", "--alphabet", "ab"],
    ["is-closed", "--regex", "ac", "--alphabet", "ab"],
    ["is-closed", "--regex", "ab"],
    ["is-closed"],
    ["is-closed", "--automaton", "/nonexistent/file.json"],
    ["seq", "prefix"],
    ["nonsense"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err


def test_timing_only_on_request(capsys):
    argv = ["is-closed", "--regex", "a*", "--alphabet", "ab", "--json"]
    assert "elapsed_ms" not in json.loads(run(capsys, *argv)[1])
    assert "elapsed_ms" in json.loads(run(capsys, *argv, "--timing")[1])


def test_input_digest_stable(capsys):
    argv = ["is-closed", "--regex", "a*", "--alphabet", "ba", "--json"]
    first = json.loads(run(capsys, *argv)[1])["input_digest"]
    second = json.loads(run(capsys, "is-closed", "--regex", "a*", "--alphabet", "ab",
                            "--json")[1])["input_digest"]
    assert first == second
