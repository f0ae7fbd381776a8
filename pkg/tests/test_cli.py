"""Workbench front end: scripts, determinism, exit codes."""

import io
import json

import pytest

from bvm.cli import Session, main, run_script

WORKED_EXAMPLE = """
# the membership example over the four-element algebra
algebra B 2
hf E = {}
hf X = {{}}
name zero = ^E
name x = ^X
eval "x = x"
set y = { ^{} : {a1} }
check eval "u in y" u=zero expect {a1}
check los "u in y" u=zero
check transfer "u in x" u=E x=X
maximize "w in y" w --rank 2 as best
descend y --rank 2
"""


def run_lines(text, fmt="text", **session_args):
    session = Session(**session_args)
    out = io.StringIO()
    failed = run_script(text.strip().splitlines(), session, out=out, fmt=fmt)
    return failed, out.getvalue()


def test_worked_example_passes():
    failed, output = run_lines(WORKED_EXAMPLE)
    assert failed == 0
    assert "[[x = x]] = 1" in output
    assert "check eval 'u in y': pass" in output
    assert "check los 'u in y': pass, satisfied atoms {a1}" in output
    assert "check transfer 'u in x': pass (classical True, truth 1)" in output
    assert "sup over fragment = {a1}" in output


def test_failed_check_sets_exit_status():
    failed, output = run_lines(
        "algebra B 2\nhf E = {}\nname z = ^E\ncheck eval \"z = z\" expect 0\n"
    )
    assert failed == 1
    assert "FAIL" in output


def test_script_error_reports_line():
    failed, output = run_lines("algebra B 2\nfrobnicate\n")
    assert failed > 0
    assert "line 2" in output


def test_set_literal_and_ascend():
    text = """
algebra B 2
hf E = {}
name zero = ^E
set y = { zero : {a2} , ^{{}} : 1 }
ascend up = zero , y
eval "zero in up"
"""
    failed, output = run_lines(text)
    assert failed == 0
    assert "set y -> set" in output
    assert "[[zero in up]] = 1" in output


def test_json_mode_is_deterministic():
    once_failed, once = run_lines(WORKED_EXAMPLE, fmt="json")
    twice_failed, twice = run_lines(WORKED_EXAMPLE, fmt="json")
    assert once_failed == twice_failed == 0
    assert once == twice
    document = json.loads(once)
    assert document["ok"] is True
    assert document["version"]
    kinds = [s["kind"] for s in document["statements"]]
    assert "check_los" in kinds and "maximize" in kinds


def test_poset_statements():
    text = """
poset P = forcing 1 2
complete P
refined? P
poset C = chain 3
refined? C
poset K = forcing 2 2 5
"""
    failed, output = run_lines(text)
    assert failed == 0
    assert "completion of P: 4 bands, algebra with 2 atoms" in output
    assert "refined? P: True" in output
    assert "refined? C: False" in output
    assert "kappa 5 > 2" in output


def test_bsystem_statements():
    text = """
algebra B 2
bset S symmdiff
bsystem O over S sig(le/2) le=imp-table
beval O "forall a . le(c0,a)"
beval O "forall a . le(a,c3)"
"""
    failed, output = run_lines(text)
    assert failed == 0
    assert output.count("| = 1") == 2


def test_suite_statement_and_subcommand(capsys):
    failed, output = run_lines("suite forcing\n")
    assert failed == 0
    assert "[PASS] forcing" in output

    assert main(["suite", "forcing"]) == 0
    shown = capsys.readouterr().out
    assert "[PASS]" in shown

    assert main(["suite", "--list"]) == 0
    shown = capsys.readouterr().out
    assert "los" in shown and "two-point" in shown


def test_main_run_and_json(tmp_path, capsys):
    script = tmp_path / "s.bvm"
    script.write_text("algebra B 2\nhf E = {}\nname z = ^E\neval \"z = z\"\n")
    assert main(["run", str(script)]) == 0
    capsys.readouterr()
    assert main(["--format", "json", "run", str(script)]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["ok"] is True


def test_repl(monkeypatch, capsys):
    import sys
    from bvm.cli import repl

    session = Session()
    stdin = io.StringIO("hf E = {}\nname z = ^E\neval \"z = z\"\nbroken!\nquit\n")
    repl(session, stdin=stdin)
    shown = capsys.readouterr().out
    assert "[[z = z]] = 1" in shown
    assert "error:" in shown
