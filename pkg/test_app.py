"""Tests for the command-line front end"""

import io
import json

import pytest

from app import ReducedWordsApp
from automata.automaton import is_equivalent, single_word
from automata.closure import saturate_closure
from automata.families import build_lss2, lss1_witness, lss2_witness
from automata.words import InverseAlphabet, format_word
from config import Config


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = ReducedWordsApp().run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def automaton_file(tmp_path, exporter, cancelling_path):
    path = tmp_path / "path.txt"
    exporter.write_file(cancelling_path, path)
    return str(path)


def test_reduce():
    status, out, err = run("reduce", "1", "-1", "2")
    assert status == 0
    assert out == "2\n"
    assert err == ""
    assert run("reduce", "1", "-1")[1] == "e\n"


def test_reduce_json():
    status, out, _ = run("--json", "reduce", "2", "1", "-1")
    document = json.loads(out)
    assert status == 0
    assert document["command"] == "reduce"
    assert document["result"]["reduced"] == [2]


def test_malformed_word_is_a_usage_failure():
    status, out, err = run("reduce", "1", "x")
    assert status == 2
    assert out == ""
    assert err.startswith("error:")


def test_unknown_command():
    assert run("minimize")[0] == 2


def test_family_shortest():
    assert run("family", "lss2", "4", "--shortest")[1] == "44\n"
    assert run("family", "unary", "6", "--shortest")[1] == "18\n"


def test_family_parameter_out_of_range():
    status, _, err = run("family", "lss1", "2")
    assert status == 1
    assert "error" in err


def test_family_witness_and_dot():
    assert run("family", "lss1", "3", "--witness")[1] == "1 -1 -1 1\n"
    status, out, _ = run("family", "lss2", "2", "--dot")
    assert status == 0
    assert out.startswith('digraph "lss2(2)" {')


def test_family_witness_respects_cap():
    status, out, _ = run("family", "lss1", "20", "--witness")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == str(2 ** 19)
    assert lines[1].startswith("(")
    assert len(lines) < 1000

    lines = run("family", "lss1", "5", "--witness", "--cap", "8")[1].splitlines()
    assert lines[0] == "16"
    assert lines[-1].startswith("(")
    assert run("family", "lss1", "5", "--witness", "--cap", "16")[1] == format_word(lss1_witness(5)) + "\n"
    assert run("family", "lss2", "2", "--witness", "--cap", "-1")[0] == 1


def test_family_text_round_trips(tmp_path, exporter):
    status, out, _ = run("family", "lss2", "3")
    assert status == 0
    path = tmp_path / "lss2.txt"
    path.write_text(out, encoding="utf-8")
    assert is_equivalent(exporter.read_file(path), build_lss2(3))


def test_closure_output_round_trips(automaton_file, exporter, cancelling_path, tmp_path):
    target = tmp_path / "closed.txt"
    status, out, _ = run("closure", automaton_file, "-o", str(target))
    assert status == 0
    assert out.splitlines() == ["added ε-edge 0 -> 2", str(target)]
    assert is_equivalent(exporter.read_file(target), saturate_closure(cancelling_path).saturated)

    document = json.loads(run("--json", "closure", automaton_file)[1])
    assert document["result"]["added_edges"] == [[0, 2]]


def test_closure_stdout_lists_added_edges(automaton_file, exporter, cancelling_path):
    status, out, _ = run("closure", automaton_file)
    assert status == 0
    assert out.splitlines()[0] == "# added ε-edge 0 -> 2"
    assert is_equivalent(exporter.parse_text(out), saturate_closure(cancelling_path).saturated)

    document = json.loads(run("closure", automaton_file, "--format", "json")[1])
    assert document["notes"] == ["added ε-edge 0 -> 2"]


def test_closure_without_new_edges(tmp_path, exporter):
    plain = tmp_path / "plain.txt"
    exporter.write_file(single_word(InverseAlphabet(1), (1,)), plain)
    assert run("closure", str(plain))[1].splitlines()[0] == "# no ε-edges added"


def test_dot_shorthand(automaton_file):
    status, out, _ = run("closure", automaton_file, "--dot")
    assert status == 0
    assert out.splitlines()[0] == "// added ε-edge 0 -> 2"
    assert "digraph" in out
    status, out, _ = run("rlang", automaton_file, "--dot")
    assert status == 0
    assert out.startswith("digraph")


def test_enumerate_defaults_to_configured_length(automaton_file):
    app = ReducedWordsApp()
    args = app.build_parser().parse_args(["rlang", automaton_file, "--enumerate"])
    assert args.enumerate == Config().DEFAULT_ENUMERATION_LENGTH
    assert run("rlang", automaton_file, "--enumerate")[1] == "e\n"


def test_missing_automaton_file(tmp_path):
    status, _, err = run("closure", str(tmp_path / "absent.txt"))
    assert status == 2
    assert "error" in err


def test_rlang(automaton_file):
    status, out, _ = run("rlang", automaton_file, "--enumerate", "4")
    assert status == 0
    assert out == "e\n"
    assert run("rlang", automaton_file, "--enumerate", "99")[0] == 1
    assert "bound" in run("rlang", automaton_file, "--states")[1]


def test_quotient(tmp_path, exporter):
    alphabet = InverseAlphabet(2)
    dividend, divisor = tmp_path / "l1.txt", tmp_path / "l2.txt"
    exporter.write_file(single_word(alphabet, (1, 2)), dividend)
    exporter.write_file(single_word(alphabet, (2,)), divisor)
    status, out, _ = run("quotient", str(dividend), str(divisor), "--enumerate", "3")
    assert status == 0
    assert out == "1\n"


def test_quotient_rejects_inverse_letters(automaton_file):
    assert run("quotient", automaton_file, automaton_file)[0] == 1


def test_shortest(automaton_file, tmp_path, exporter):
    assert run("shortest", automaton_file)[1] == "2\n"
    assert run("shortest", automaton_file, "--witness")[1] == "2\n1 -1\n"

    lss2 = tmp_path / "lss2.txt"
    exporter.write_file(build_lss2(3), lss2)
    lines = run("shortest", str(lss2), "--witness", "--cap", "10")[1].splitlines()
    assert lines[0] == "20"
    assert lines[-1].startswith("(q3,p3) [20]")
    assert run("shortest", str(lss2), "--witness", "--cap", "-1")[0] == 1

    plain = tmp_path / "plain.txt"
    exporter.write_file(single_word(InverseAlphabet(1), (1,)), plain)
    assert run("shortest", str(plain))[1] == "inf\n"
    assert run("shortest", str(plain), "--witness")[1] == "inf\n"


def test_shortest_cap_comes_from_config(tmp_path, exporter):
    lss2 = tmp_path / "lss2.txt"
    exporter.write_file(build_lss2(3), lss2)
    config = Config()
    config.WITNESS_CAP = 10
    out = io.StringIO()
    status = ReducedWordsApp(config).run(["shortest", str(lss2), "--witness"], out=out, err=io.StringIO())
    lines = out.getvalue().splitlines()
    assert status == 0
    assert lines[0] == "20"
    assert lines[-1].startswith("(q3,p3) [20]")
    assert run("shortest", str(lss2), "--witness")[1].splitlines()[1] == format_word(lss2_witness(3))


def test_eq_member(automaton_file):
    assert run("eq-member", automaton_file, "1", "1", "-1", "-1")[1] == "true\n"
    assert run("eq-member", automaton_file, "1")[1] == "false\n"


def test_rg(tmp_path):
    equations = tmp_path / "eqs.txt"
    equations.write_text("ab = cd\nbc = a\n", encoding="utf-8")
    status, out, _ = run("rg", "aabd", "--equations", str(equations), "--cap", "6")
    assert status == 0
    assert out.splitlines() == ["aabd", "acdd", "exhaustive: yes"]

    out = run("rg", "abd", "--equations", str(equations), "--cap", "4", "--class")[1]
    assert "  bcbd" in out.splitlines()


def test_rg_rejects_bad_equations(tmp_path):
    equations = tmp_path / "eqs.txt"
    equations.write_text("ab cd\n", encoding="utf-8")
    assert run("rg", "ab", "--equations", str(equations))[0] == 2
    assert run("rg", "ab", "--equations", str(tmp_path / "absent.txt"))[0] == 2


def test_demos():
    status, out, _ = run("eq-demo", "--max-len", "6")
    assert status == 0
    assert "members are exactly the reducible words: yes" in out
    document = json.loads(run("--json", "rg-demo", "--max-len", "6")[1])
    assert document["result"]["matches"] is True


def test_dot(automaton_file):
    status, out, _ = run("dot", automaton_file)
    assert status == 0
    assert out.startswith('digraph "path" {')
