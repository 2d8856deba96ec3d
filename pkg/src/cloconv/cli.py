"""Command-line driver.

Subcommands: check, compile, normalize, equiv, decompile, link, prop.
Exit codes: 0 success, 1 type or parse error, 2 property failure, 3 fuel
exhaustion.  Diagnostics go to standard error; artifacts (terms, compiled
files, reports) go to standard output.

The language is chosen by file extension (.cc source, .cccc target); a
lone ``-`` reads standard input and needs an explicit --lang.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .compiler import translate
from .core import (
    DEFAULT_FUEL, Fuel, FuelExhausted, TypeCheckError, check_env, equiv,
    infer, normalize, t_check_env, t_equiv, t_infer, t_normalize,
)
from .generate import PROPERTY_NAMES, GenConfig, run_property
from .linking import (
    NonGroundType, SubstError, check_subst, closing_map, link,
)
from .model import decompile
from .sexpr import (
    AssumeDecl, DefDecl, MainDecl, ParseError, SourceFile, format_file,
    parse, parse_subst, parse_term, print_term,
)
from .syntax import Assumption, Definition, Term, TypingEnv


class _CliError(Exception):
    """A diagnostic that should reach stderr with exit code 1."""


def main(argv: Optional[list[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except _CliError as ex:
        print(str(ex), file=sys.stderr)
        return 1
    except ParseError as ex:
        where = getattr(ex, "source_name", "<input>")
        print(
            f"{where}:{ex.line}:{ex.column}: parse error: expected {ex.expected}",
            file=sys.stderr,
        )
        return 1
    except (TypeCheckError, SubstError, NonGroundType) as ex:
        label = "link error" if isinstance(ex, (SubstError, NonGroundType)) else "type error"
        print(f"{label}: {ex}", file=sys.stderr)
        return 1
    except FuelExhausted as ex:
        print(f"fuel exhausted: {ex}", file=sys.stderr)
        return 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cloconv",
        description="typed closure conversion: check, compile, run, and test",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name: str, run, help: str, fuel: bool = True, lang: bool = True):
        c = sub.add_parser(name, help=help)
        c.set_defaults(run=run)
        if fuel:
            c.add_argument("--fuel", type=int, default=DEFAULT_FUEL,
                           help=f"reduction step budget (default {DEFAULT_FUEL})")
        if lang:
            c.add_argument("--lang", choices=["cc", "cccc"],
                           help="language for - (stdin); otherwise by extension")
        return c

    c = cmd("check", _cmd_check, "typecheck a file and print inferred types")
    c.add_argument("file")

    c = cmd("compile", _cmd_compile, "closure-convert a source file")
    c.add_argument("file")

    c = cmd("normalize", _cmd_normalize, "normalize a file's main term")
    c.add_argument("file")

    c = cmd("equiv", _cmd_equiv, "decide equivalence of two terms under a file's environment")
    c.add_argument("file")
    c.add_argument("term_a")
    c.add_argument("term_b")

    c = cmd("decompile", _cmd_decompile, "translate a target file back to the source language")
    c.add_argument("file")
    c.add_argument("--strict-figures", action="store_true",
                   help="note the committed typing readings on stderr")

    c = cmd("link", _cmd_link, "close a file's main term over a substitution file")
    c.add_argument("file")
    c.add_argument("subst_file")

    c = cmd("prop", _cmd_prop, "run a property suite", lang=False, fuel=False)
    c.add_argument("name", choices=list(PROPERTY_NAMES))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--iters", type=int, default=100)
    c.add_argument("--depth", type=int, default=4)

    return p


def _language_of(path: str, lang: Optional[str]) -> str:
    if path == "-":
        if lang is None:
            raise _CliError("reading from stdin requires --lang")
        return lang
    if lang is not None:
        return lang
    if path.endswith(".cccc"):
        return "cccc"
    if path.endswith(".cc"):
        return "cc"
    raise _CliError(f"cannot tell the language of {path}; use .cc, .cccc, or --lang")


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as ex:
        raise _CliError(f"cannot read {path}: {ex}")


def _load(path: str, lang: Optional[str]) -> SourceFile:
    language = _language_of(path, lang)
    text = _read_file(path)
    try:
        return parse(text, language)
    except ParseError as ex:
        ex.source_name = path
        raise


def _cmd_check(args) -> int:
    sf = _load(args.file, args.lang)
    fuel = Fuel(args.fuel)
    target = sf.language == "cccc"
    env = sf.environment()
    (t_check_env if target else check_env)(env, fuel)
    infer_fn = t_infer if target else infer
    prefix: TypingEnv = ()
    for decl in sf.declarations:
        if isinstance(decl, DefDecl):
            ty = infer_fn(prefix, decl.term, fuel)
            print(f"({decl.name} {print_term(ty)})")
            prefix = prefix + (Definition(decl.name, decl.term, decl.type),)
        elif isinstance(decl, AssumeDecl):
            prefix = prefix + (Assumption(decl.name, decl.type),)
        else:
            print(print_term(infer_fn(prefix, decl.term, fuel)))
    return 0


def _cmd_compile(args) -> int:
    sf = _load(args.file, args.lang)
    if sf.language != "cc":
        print("compile takes a source-language file", file=sys.stderr)
        return 1
    fuel = Fuel(args.fuel)
    check_env(sf.environment(), fuel)
    out_decls = []
    prefix: TypingEnv = ()
    for decl in sf.declarations:
        if isinstance(decl, DefDecl):
            term_t = translate(prefix, decl.term, fuel).term
            type_t = translate(prefix, decl.type, fuel).term
            out_decls.append(DefDecl(decl.name, term_t, type_t))
            prefix = prefix + (Definition(decl.name, decl.term, decl.type),)
        elif isinstance(decl, AssumeDecl):
            type_t = translate(prefix, decl.type, fuel).term
            out_decls.append(AssumeDecl(decl.name, type_t))
            prefix = prefix + (Assumption(decl.name, decl.type),)
        else:
            out_decls.append(MainDecl(translate(prefix, decl.term, fuel).term))
    sys.stdout.write(format_file(SourceFile(tuple(out_decls), "cccc")))
    return 0


def _cmd_normalize(args) -> int:
    sf = _load(args.file, args.lang)
    main_term = sf.main_term()
    if main_term is None:
        print("normalize needs a (main ...) declaration", file=sys.stderr)
        return 1
    fuel = Fuel(args.fuel)
    run = t_normalize if sf.language == "cccc" else normalize
    print(print_term(run(sf.environment(), main_term, fuel)))
    return 0


def _cmd_equiv(args) -> int:
    sf = _load(args.file, args.lang)
    fuel = Fuel(args.fuel)
    target = sf.language == "cccc"
    env = sf.environment()
    (t_check_env if target else check_env)(env, fuel)
    term_a = parse_term(args.term_a, sf.language)
    term_b = parse_term(args.term_b, sf.language)
    infer_fn = t_infer if target else infer
    infer_fn(env, term_a, fuel)
    infer_fn(env, term_b, fuel)
    same = (t_equiv if target else equiv)(env, term_a, term_b, fuel)
    print("true" if same else "false")
    return 0


def _cmd_decompile(args) -> int:
    sf = _load(args.file, args.lang)
    if sf.language != "cccc":
        print("decompile takes a target-language file", file=sys.stderr)
        return 1
    fuel = Fuel(args.fuel)
    t_check_env(sf.environment(), fuel)
    notes: list[str] = []
    out_decls = []
    prefix: TypingEnv = ()
    for decl in sf.declarations:
        if isinstance(decl, DefDecl):
            term_s = decompile(prefix, decl.term, fuel, notes)
            type_s = decompile(prefix, decl.type, fuel, notes)
            out_decls.append(DefDecl(decl.name, term_s, type_s))
            prefix = prefix + (Definition(decl.name, decl.term, decl.type),)
        elif isinstance(decl, AssumeDecl):
            out_decls.append(AssumeDecl(decl.name, decompile(prefix, decl.type, fuel, notes)))
            prefix = prefix + (Assumption(decl.name, decl.type),)
        else:
            out_decls.append(MainDecl(decompile(prefix, decl.term, fuel, notes)))
    sys.stdout.write(format_file(SourceFile(tuple(out_decls), "cc")))
    if args.strict_figures:
        for note in dict.fromkeys(notes):
            print(f"note: {note}", file=sys.stderr)
    return 0


def _cmd_link(args) -> int:
    sf = _load(args.file, args.lang)
    fuel = Fuel(args.fuel)
    target = sf.language == "cccc"
    env = sf.environment()
    (t_check_env if target else check_env)(env, fuel)
    main_term = sf.main_term()
    if main_term is None:
        print("link needs a (main ...) declaration", file=sys.stderr)
        return 1
    subst_map = _read_subst(args.subst_file, sf.language)
    check_subst(env, subst_map, fuel, sf.language)
    closed = link(closing_map(env, subst_map), main_term)
    print(print_term(closed))
    return 0


def _read_subst(path: str, language: str) -> dict[str, Term]:
    text = _read_file(path)
    try:
        return parse_subst(text, language)
    except ParseError as ex:
        ex.source_name = path
        raise


def _cmd_prop(args) -> int:
    cfg = GenConfig(seed=args.seed, max_depth=args.depth, iterations=args.iters)
    report = run_property(args.name, cfg)
    for failure in report.failures:
        print(json.dumps(failure, sort_keys=True))
    print(
        f"{report.property_name}: {report.completed} of {report.iterations} "
        f"iterations completed, {len(report.failures)} failures"
    )
    return 2 if report.failures else 0
