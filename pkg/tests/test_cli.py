import json
import pathlib

import pytest

from artinpar import catalog, parse_artin_word, parse_presentation
from artinpar.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden" / "retract_trace_a2.json"


@pytest.fixture()
def a2_file(tmp_path):
    path = tmp_path / "a2.txt"
    path.write_text(catalog.builtin_text("a2"))
    return str(path)


@pytest.fixture()
def a3_file(tmp_path):
    path = tmp_path / "a3.txt"
    path.write_text(catalog.builtin_text("a3"))
    return str(path)


def out_of(capsys):
    return capsys.readouterr().out


def test_reduce_human(a2_file, capsys):
    assert run(["reduce", "-p", a2_file, "a b a b"]) == 0
    assert out_of(capsys) == "b a\n"


def test_reduce_to_identity_prints_empty(a2_file, capsys):
    assert run(["reduce", "-p", a2_file, "a a"]) == 0
    assert out_of(capsys) == "\n"


def test_length_and_descents(a2_file, capsys):
    assert run(["length", "-p", a2_file, "a b a"]) == 0
    assert out_of(capsys) == "3\n"
    assert run(["descents", "-p", a2_file, "b a", "--format", "json"]) == 0
    payload = json.loads(out_of(capsys))
    assert payload == {"word": "b a", "left": ["b"], "right": ["a"]}


def test_enumerate(a2_file, capsys):
    assert run(["enumerate", "-p", a2_file, "--cap", "100", "--format", "json"]) == 0
    payload = json.loads(out_of(capsys))
    assert payload["count"] == 6 and payload["finite"] is True
    assert "" in payload["elements"] and "a b a" in payload["elements"]


def test_decompose_and_double_coset(a2_file, capsys):
    assert run(["decompose", "-p", a2_file, "--x", "a", "a b a"]) == 0
    assert out_of(capsys) == "v: a\nw: b a\n"
    assert run(
        ["double-coset", "-p", a2_file, "--x", "a", "--y", "b", "a b a", "--format", "json"]
    ) == 0
    assert json.loads(out_of(capsys)) == {"u1": "a", "w0": "b a", "u2": ""}


def test_theta_iota(a2_file, capsys):
    assert run(["theta", "-p", a2_file, "b a b^-1"]) == 0
    assert out_of(capsys) == "a b a\n"
    assert run(["iota", "-p", a2_file, "b a"]) == 0
    assert out_of(capsys) == "b a\n"


def test_retract_matches_golden_file_bytes(a2_file, capsys):
    argv = ["retract", "-p", a2_file, "--x", "a", "b a b^-1", "--trace", "--format", "json"]
    assert run(argv) == 0
    first = out_of(capsys)
    assert run(argv) == 0
    second = out_of(capsys)
    assert first == second  # byte-identical across runs
    assert first == GOLDEN.read_text()
    payload = json.loads(first)
    assert payload["word"] == "a^-1"
    steps = payload["trace"]
    assert steps[0]["t"] == "b" and steps[0]["emitted"] is None
    assert steps[1]["emitted"] is None and len(steps[1]["t"].split()) == 3
    assert steps[2]["t"] == "a" and steps[2]["emitted"] == "a^-1"


def test_transport_command(a2_file, capsys):
    assert run(
        ["transport", "-p", a2_file, "--x", "a", "--y", "b", "b a", "--format", "json"]
    ) == 0
    payload = json.loads(out_of(capsys))
    assert payload == {"yprime": ["a"], "f": {"b": "a"}, "w0": "b a", "alpha": ""}


def test_theorem_command_pinned_instance(a2_file, capsys):
    assert run(
        ["theorem", "-p", a2_file, "--x", "a", "--y", "b", "b a", "--format", "json"]
    ) == 0
    payload = json.loads(out_of(capsys))
    assert payload["yprime"] == ["a"]
    assert payload["gamma"] == ""


def test_generate_command_roundtrips(a3_file, capsys):
    argv = [
        "generate", "-p", a3_file, "--x-size", "2", "--y-size", "1",
        "--pad", "2", "--seed", "4", "--format", "json",
    ]
    assert run(argv) == 0
    first = json.loads(out_of(capsys))
    assert run(argv) == 0
    assert json.loads(out_of(capsys)) == first
    P = catalog.builtin("a3")
    parse_artin_word(P, first["alpha"])  # serialized words re-parse


def test_json_words_reparse_to_identical_values(a2_file, capsys):
    assert run(["reduce", "-p", a2_file, "b a a b", "--format", "json"]) == 0
    payload = json.loads(out_of(capsys))
    P = parse_presentation(catalog.builtin_text("a2"))
    from artinpar import format_coxeter_word, parse_coxeter_word

    word = parse_coxeter_word(P, payload["canonical"])
    assert format_coxeter_word(P, word) == payload["canonical"]


def test_domain_errors_exit_one(a2_file, capsys):
    assert run(["reduce", "-p", a2_file, "a z"]) == 1
    assert "unknown generator" in capsys.readouterr().err
    assert run(["theorem", "-p", a2_file, "--x", "a", "--y", "b", ""]) == 1
    assert "error:" in capsys.readouterr().err
    assert run(["reduce", "-p", "/nonexistent/file.txt", "a"]) == 1


def test_usage_errors_exit_two(a2_file, capsys):
    assert run(["reduce", "-p", a2_file, "a", "--bogus-flag"]) == 2
    assert run(["not-a-command"]) == 2
    assert run(["retract", "-p", a2_file, "a"]) == 2  # missing required --x
    capsys.readouterr()


def test_missing_presentation_is_a_domain_error(capsys):
    assert run(["reduce", "a"]) == 1
    assert "--presentation" in capsys.readouterr().err


def test_closure_cap_override_fails_loudly(a3_file, capsys):
    assert run(["reduce", "-p", a3_file, "a b a c b a", "--closure-cap", "1"]) == 1
    assert "closure exceeded cap" in capsys.readouterr().err


def test_verify_suite_smoke(capsys):
    assert run(["verify", "--suite", "lemma22", "--format", "json"]) == 0
    payload = json.loads(out_of(capsys))
    assert payload[0]["suite"] == "lemma22"
    assert payload[0]["failed"] == 0
    assert payload[0]["passed"] > 0


def test_verify_rejects_unknown_suite(capsys):
    assert run(["verify", "--suite", "nope"]) == 2
    capsys.readouterr()
