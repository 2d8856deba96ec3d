"""Driver behavior: exit codes, stream discipline, and the pipe workflow.

Most tests call main() in process and read the streams through capsys;
a couple of subprocess runs make sure the installed entry points agree.
"""

import subprocess
import sys
from pathlib import Path

from cloconv.cli import main

CORPUS = Path(__file__).parent / "corpus"
DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

IDENTITY = str(CORPUS / "identity.cc")
LOOP = str(DATA / "loop.cc")
OPEN_CODE = str(DATA / "open_code.cccc")


# check

def test_check_prints_def_types_and_main_type(capsys):
    assert main(["check", IDENTITY]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["(id (Pi (A *) (Pi (x A) A)))", "Bool"]


def test_check_type_error_exits_1(capsys):
    assert main(["check", LOOP]) == 1
    err = capsys.readouterr().err
    assert err.startswith("type error:")
    assert "applied" in err


def test_check_open_code_exits_1(capsys):
    assert main(["check", OPEN_CODE]) == 1
    err = capsys.readouterr().err
    assert "code must be closed" in err
    assert "y" in err


def test_check_parse_error_position_and_exit(tmp_path, capsys):
    bad = tmp_path / "bad.cc"
    bad.write_text("(def x true Bool)\n(main (app x %))\n")
    assert main(["check", str(bad)]) == 1
    err = capsys.readouterr().err
    assert err.startswith(f"{bad}:2:14: parse error: expected")


def test_check_unknown_extension_needs_lang(tmp_path, capsys):
    src = tmp_path / "prog.txt"
    src.write_text("(main true)\n")
    assert main(["check", str(src)]) == 1
    assert "--lang" in capsys.readouterr().err
    assert main(["check", "--lang", "cc", str(src)]) == 0
    assert capsys.readouterr().out == "Bool\n"


def test_check_missing_file_is_a_diagnostic(capsys):
    assert main(["check", "no_such_file.cc"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_check_stdin_requires_lang(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("(main true)\n"))
    assert main(["check", "-"]) == 1
    assert "--lang" in capsys.readouterr().err


def test_check_stdin_with_lang(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("(main (lam (x Bool) x))\n"))
    assert main(["check", "--lang", "cc", "-"]) == 0
    assert capsys.readouterr().out == "(Pi (x Bool) Bool)\n"


# compile

def test_compile_identity_matches_golden(capsys):
    assert main(["compile", IDENTITY]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / "identity_compiled.cccc").read_text()


def test_compile_rejects_target_files(capsys):
    assert main(["compile", OPEN_CODE]) == 1
    assert "source-language" in capsys.readouterr().err


def test_compile_then_check_pipe(tmp_path, capsys):
    assert main(["compile", IDENTITY]) == 0
    compiled = capsys.readouterr().out
    out_file = tmp_path / "identity.cccc"
    out_file.write_text(compiled)
    assert main(["check", str(out_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("(id ")
    assert lines[1] == "Bool"


def test_compile_every_corpus_file_checks_in_target(tmp_path, capsys):
    for source in sorted(CORPUS.glob("*.cc")):
        assert main(["compile", str(source)]) == 0, source.name
        compiled = tmp_path / (source.stem + ".cccc")
        compiled.write_text(capsys.readouterr().out)
        assert main(["check", str(compiled)]) == 0, source.name
        capsys.readouterr()


# normalize

def test_normalize_main(capsys):
    assert main(["normalize", IDENTITY]) == 0
    assert capsys.readouterr().out == "true\n"


def test_normalize_does_not_typecheck_and_exhausts_fuel(capsys):
    # loop.cc is ill typed, normalize runs it anyway and hits the budget
    assert main(["normalize", LOOP]) == 3
    err = capsys.readouterr().err
    assert err.startswith("fuel exhausted:")


def test_normalize_fuel_flag_caps_the_run(capsys):
    assert main(["normalize", "--fuel", "7", LOOP]) == 3
    assert "7" in capsys.readouterr().err


def test_normalize_without_main_is_an_error(tmp_path, capsys):
    src = tmp_path / "nomain.cc"
    src.write_text("(def x true Bool)\n")
    assert main(["normalize", str(src)]) == 1
    assert "main" in capsys.readouterr().err


def test_normalize_target_file(tmp_path, capsys):
    assert main(["compile", IDENTITY]) == 0
    compiled = tmp_path / "identity.cccc"
    compiled.write_text(capsys.readouterr().out)
    assert main(["normalize", str(compiled)]) == 0
    assert capsys.readouterr().out == "true\n"


# equiv

def test_equiv_true_and_false(capsys):
    assert main(["equiv", IDENTITY, "(app (app id Bool) true)", "true"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert main(["equiv", IDENTITY, "true", "false"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_equiv_arguments_must_typecheck(capsys):
    assert main(["equiv", IDENTITY, "(fst true)", "true"]) == 1
    assert capsys.readouterr().err.startswith("type error:")


# decompile

def test_decompile_round_trips_identity(tmp_path, capsys):
    assert main(["compile", IDENTITY]) == 0
    compiled = tmp_path / "identity.cccc"
    compiled.write_text(capsys.readouterr().out)
    assert main(["decompile", str(compiled)]) == 0
    decompiled = tmp_path / "identity_back.cc"
    decompiled.write_text(capsys.readouterr().out)
    assert main(["check", str(decompiled)]) == 0
    capsys.readouterr()
    assert main(["normalize", str(decompiled)]) == 0
    assert capsys.readouterr().out == "true\n"


def test_decompile_rejects_source_files(capsys):
    assert main(["decompile", IDENTITY]) == 1
    assert "target-language" in capsys.readouterr().err


def test_decompile_strict_figures_notes_on_stderr(tmp_path, capsys):
    assert main(["compile", IDENTITY]) == 0
    compiled = tmp_path / "identity.cccc"
    compiled.write_text(capsys.readouterr().out)
    assert main(["decompile", "--strict-figures", str(compiled)]) == 0
    captured = capsys.readouterr()
    notes = [l for l in captured.err.splitlines() if l.startswith("note: ")]
    assert notes, "closure decompilation should leave a note"
    assert len(notes) == len(set(notes))
    # the artifact on stdout is unchanged by the flag
    assert main(["decompile", str(compiled)]) == 0
    assert capsys.readouterr().out == captured.out


# link

def test_link_closes_main_over_subst(tmp_path, capsys):
    prog = tmp_path / "prog.cc"
    prog.write_text("(assume b Bool)\n(main (if b false true))\n")
    subst = tmp_path / "prog.subst"
    subst.write_text("(bind b true)\n")
    assert main(["link", str(prog), str(subst)]) == 0
    assert capsys.readouterr().out == "(if true false true)\n"


def test_link_rejects_open_images(tmp_path, capsys):
    prog = tmp_path / "prog.cc"
    prog.write_text("(assume b Bool)\n(main b)\n")
    subst = tmp_path / "prog.subst"
    subst.write_text("(bind b (if q true false))\n")
    assert main(["link", str(prog), str(subst)]) == 1
    assert capsys.readouterr().err.startswith("link error:")


def test_link_rejects_ill_typed_images(tmp_path, capsys):
    prog = tmp_path / "prog.cc"
    prog.write_text("(assume b Bool)\n(main b)\n")
    subst = tmp_path / "prog.subst"
    subst.write_text("(bind b (lam (x Bool) x))\n")
    assert main(["link", str(prog), str(subst)]) == 1
    assert capsys.readouterr().err.startswith("link error:")


# prop

def test_prop_reports_a_summary_line(capsys):
    assert main(["prop", "subject-reduction", "--iters", "8"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("iterations completed, 0 failures\n")
    assert out.startswith("subject-reduction: ")


def test_prop_failures_exit_2(capsys, monkeypatch):
    import cloconv.generate as gen

    def broken(env, cfg, rng, i):
        return {"relation": "broken", "iteration": i}

    monkeypatch.setitem(gen._PROPERTY_IMPLS, "coherence", broken)
    assert main(["prop", "coherence", "--iters", "3"]) == 2
    out = capsys.readouterr().out.splitlines()
    assert out[-1].endswith("3 failures")
    assert all(line.startswith("{") for line in out[:-1])


def test_prop_unknown_name_rejected(capsys):
    try:
        main(["prop", "no-such-property"])
    except SystemExit as ex:
        assert ex.code == 2
    else:
        raise AssertionError("argparse should reject the choice")
    assert "invalid choice" in capsys.readouterr().err


# installed entry points

def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cloconv", "normalize", IDENTITY],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "true\n"


def test_console_script_pipe():
    compile_proc = subprocess.run(
        ["cloconv", "compile", IDENTITY], capture_output=True, text=True,
    )
    assert compile_proc.returncode == 0
    check_proc = subprocess.run(
        ["cloconv", "check", "--lang", "cccc", "-"],
        input=compile_proc.stdout, capture_output=True, text=True,
    )
    assert check_proc.returncode == 0, check_proc.stderr
    assert check_proc.stdout.splitlines()[-1] == "Bool"
