"""Surface syntax: parsing, printing, round trips."""

import random

import pytest

from cloconv.generate import GenConfig, GiveUp, PROFILES, gen_term
from cloconv.sexpr import (
    AssumeDecl, DefDecl, MainDecl, ParseError, format_file, parse,
    parse_subst, parse_term, print_env_entry, print_term,
)
from cloconv.syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, FalseVal,
    Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, Star, TrueVal, UnitTy, UnitVal,
    Var,
)


# ---------------------------------------------------------------------------
# parsing terms


def test_parse_atoms():
    assert parse_term("*", "cc") == Star()
    assert parse_term("Bool", "cc") == Bool()
    assert parse_term("true", "cc") == TrueVal()
    assert parse_term("false", "cc") == FalseVal()
    assert parse_term("x'", "cc") == Var("x'")


def test_parse_lambda_and_pi():
    assert parse_term("(lam (x Bool) x)", "cc") == Lam("x", Bool(), Var("x"))
    assert parse_term("(Pi (A *) (Pi (x A) A))", "cc") == Pi(
        "A", Star(), Pi("x", Var("A"), Var("A"))
    )


def test_parse_pair_forms():
    assert parse_term("(pair true false (Sigma (p Bool) Bool))", "cc") == Pair(
        TrueVal(), FalseVal(), Sigma("p", Bool(), Bool())
    )
    assert parse_term("(fst p)", "cc") == Fst(Var("p"))
    assert parse_term("(snd p)", "cc") == Snd(Var("p"))


def test_parse_let_with_and_without_annotation():
    assert parse_term("(let (x true) x)", "cc") == Let(
        "x", TrueVal(), None, Var("x")
    )
    assert parse_term("(let (x true Bool) x)", "cc") == Let(
        "x", TrueVal(), Bool(), Var("x")
    )


def test_parse_if_and_app():
    assert parse_term("(if b true false)", "cc") == If(
        Var("b"), TrueVal(), FalseVal()
    )
    assert parse_term("(app f x)", "cc") == App(Var("f"), Var("x"))


def test_parse_target_forms():
    code = parse_term("(code ((n Unit) (x Bool)) x)", "cccc")
    assert code == CodeVal("n", UnitTy(), "x", Bool(), Var("x"))
    clo = parse_term("(clo c unit)", "cccc")
    assert clo == Clo(Var("c"), UnitVal())
    ty = parse_term("(Code ((n Unit) (x Bool)) Bool)", "cccc")
    assert ty == CodeTy("n", UnitTy(), "x", Bool(), Bool())


def test_language_gates():
    with pytest.raises(ParseError):
        parse_term("(lam (x Bool) x)", "cccc")
    for src in ("(code ((n Unit) (x Bool)) x)", "(clo c unit)", "unit", "Unit"):
        with pytest.raises(ParseError):
            parse_term(src, "cc")


def test_top_universe_has_no_surface_syntax():
    with pytest.raises(ParseError) as err:
        parse_term("[]", "cc")
    assert "universe" in err.value.expected


def test_bare_application_is_hinted():
    with pytest.raises(ParseError) as err:
        parse_term("(f x)", "cc")
    assert "app" in err.value.expected


def test_reserved_words_are_not_identifiers():
    with pytest.raises(ParseError):
        parse_term("(lam (lam Bool) true)", "cc")


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse_term("true false", "cc")


def test_unclosed_form():
    with pytest.raises(ParseError):
        parse_term("(app f", "cc")


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_term("(app f %)", "cc")
    assert (err.value.line, err.value.column) == (1, 8)

    with pytest.raises(ParseError) as err:
        parse("(def x true Bool)\n(main ())\n", "cc")
    assert err.value.line == 2


def test_comments_and_whitespace():
    src = "; leading comment\n  (if b ; inline\n     true\n     false)"
    assert parse_term(src, "cc") == If(Var("b"), TrueVal(), FalseVal())


# ---------------------------------------------------------------------------
# parsing files


def test_parse_declarations():
    src = (
        "(assume b Bool)\n"
        "(def not (lam (x Bool) (if x false true)) (Pi (x Bool) Bool))\n"
        "(main (app not b))\n"
    )
    sf = parse(src, "cc")
    assert sf.language == "cc"
    assert isinstance(sf.declarations[0], AssumeDecl)
    assert isinstance(sf.declarations[1], DefDecl)
    assert isinstance(sf.declarations[2], MainDecl)
    assert sf.environment() == (
        Assumption("b", Bool()),
        Definition(
            "not",
            Lam("x", Bool(), If(Var("x"), FalseVal(), TrueVal())),
            Pi("x", Bool(), Bool()),
        ),
    )
    assert sf.main_term() == App(Var("not"), Var("b"))


def test_parse_file_without_main():
    sf = parse("(assume b Bool)\n", "cc")
    assert sf.main_term() is None


def test_duplicate_declaration_names_rejected():
    with pytest.raises(ParseError):
        parse("(assume b Bool)\n(assume b Bool)\n", "cc")


def test_two_mains_rejected():
    with pytest.raises(ParseError):
        parse("(main true)\n(main false)\n", "cc")


def test_parse_subst():
    got = parse_subst("(bind x true)\n(bind f (lam (b Bool) b))\n", "cc")
    assert got == {"x": TrueVal(), "f": Lam("b", Bool(), Var("b"))}
    with pytest.raises(ParseError):
        parse_subst("(bind x true)\n(bind x false)\n", "cc")


# ---------------------------------------------------------------------------
# printing


def test_print_term_examples():
    assert print_term(Lam("x", Bool(), Var("x"))) == "(lam (x Bool) x)"
    assert print_term(Box()) == "[]"
    assert print_term(UnitVal()) == "unit"
    assert print_term(
        CodeTy("n", UnitTy(), "x", Bool(), Bool())
    ) == "(Code ((n Unit) (x Bool)) Bool)"


def test_print_env_entry():
    assert print_env_entry(Assumption("b", Bool())) == "(assume b Bool)"
    assert print_env_entry(
        Definition("c", TrueVal(), Bool())
    ) == "(def c true Bool)"


def test_format_file_one_decl_per_line():
    sf = parse("(assume b Bool)(main b)", "cc")
    assert format_file(sf) == "(assume b Bool)\n(main b)\n"


# ---------------------------------------------------------------------------
# round trips


HAND_TERMS_CC = [
    Star(),
    Pi("A", Star(), Pi("x", Var("A"), Var("A"))),
    Lam("A", Star(), Lam("x", Var("A"), Var("x"))),
    Let("x", TrueVal(), None, If(Var("x"), FalseVal(), TrueVal())),
    Pair(TrueVal(), FalseVal(), Sigma("p", Bool(), Bool())),
    Snd(Fst(Var("p"))),
]

HAND_TERMS_CCCC = [
    UnitVal(),
    Clo(CodeVal("n", UnitTy(), "x", Bool(), Var("x")), UnitVal()),
    CodeTy("n", Sigma("A", Star(), UnitTy()), "x", Fst(Var("n")), Fst(Var("n"))),
]


def test_round_trip_hand_terms():
    for t in HAND_TERMS_CC:
        assert parse_term(print_term(t), "cc") == t
    for t in HAND_TERMS_CCCC:
        assert parse_term(print_term(t), "cccc") == t


def test_round_trip_generated_terms():
    cfg = GenConfig(seed=4, max_depth=3)
    env = PROFILES["mixed"]
    done = 0
    for i in range(60):
        rng = random.Random(f"sexpr:{i}")
        try:
            t = gen_term(cfg, env, None, rng)
        except GiveUp:
            continue
        assert parse_term(print_term(t), "cc") == t
        done += 1
    assert done >= 30
