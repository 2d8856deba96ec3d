"""Closing substitutions, linking, and the separate-compilation check."""

import pytest

from cloconv.compiler import translate
from cloconv.core import Fuel, t_equiv
from cloconv.linking import (
    NonGroundType, SubstError, check_subst, closing_map, link,
    separate_compile_check,
)
from cloconv.syntax import (
    App, Assumption, Bool, Definition, FalseVal, If, Lam, Pi, Star, TrueVal,
    Var,
)

BOOL_FN = Pi("b", Bool(), Bool())


# ---------------------------------------------------------------------------
# closing substitutions


def test_check_subst_empty():
    check_subst((), {})


def test_check_subst_simple():
    check_subst((Assumption("x", Bool()),), {"x": TrueVal()})


def test_check_subst_open_image_rejected():
    with pytest.raises(SubstError) as err:
        check_subst((Assumption("x", Bool()),), {"x": Var("y")})
    assert err.value.name == "x"
    assert "closed" in err.value.reason


def test_check_subst_missing_assumption():
    with pytest.raises(SubstError) as err:
        check_subst((Assumption("x", Bool()),), {})
    assert err.value.name == "x"


def test_check_subst_unknown_name():
    with pytest.raises(SubstError):
        check_subst((), {"x": TrueVal()})


def test_check_subst_wrong_type():
    with pytest.raises(SubstError):
        check_subst((Assumption("x", Bool()),), {"x": Bool()})


def test_check_subst_dependent_types():
    # q's type mentions A, so its image must check against the closed type
    env = (Assumption("A", Star()), Assumption("q", Var("A")))
    check_subst(env, {"A": Bool(), "q": TrueVal()})
    with pytest.raises(SubstError):
        check_subst(env, {"A": BOOL_FN, "q": TrueVal()})


def test_check_subst_definitions_not_substituted():
    env = (
        Assumption("x", Bool()),
        Definition("y", Var("x"), Bool()),
    )
    check_subst(env, {"x": FalseVal()})
    with pytest.raises(SubstError):
        check_subst(env, {"x": FalseVal(), "y": TrueVal()})


# ---------------------------------------------------------------------------
# linking


def test_link_variable():
    assert link({"x": TrueVal()}, Var("x")) == TrueVal()


def test_link_empty():
    t = If(Var("x"), FalseVal(), TrueVal())
    assert link({}, t) == t


def test_link_under_if():
    got = link({"x": TrueVal()}, If(Var("x"), FalseVal(), TrueVal()))
    assert got == If(TrueVal(), FalseVal(), TrueVal())


def test_closing_map_inlines_definitions():
    env = (
        Assumption("x", Bool()),
        Definition("y", If(Var("x"), FalseVal(), TrueVal()), Bool()),
    )
    closing = closing_map(env, {"x": TrueVal()})
    assert closing["x"] == TrueVal()
    assert closing["y"] == If(TrueVal(), FalseVal(), TrueVal())


# ---------------------------------------------------------------------------
# separate compilation


def test_observation_variable():
    env = (Assumption("x", Bool()),)
    report = separate_compile_check(env, Var("x"), {"x": TrueVal()})
    assert report.related
    assert report.source_value == TrueVal()
    assert report.target_value == TrueVal()


def test_observation_whole_program_beta():
    t = App(Lam("b", Bool(), Var("b")), FalseVal())
    report = separate_compile_check((), t, {})
    assert report.related
    assert report.source_value == FalseVal()
    assert report.target_value == FalseVal()
    # the target pipeline spent at least the closure-beta step
    assert report.steps[1] >= 1


def test_observation_function_import():
    env = (Assumption("f", BOOL_FN),)
    neg = Lam("b", Bool(), If(Var("b"), FalseVal(), TrueVal()))
    report = separate_compile_check(env, App(Var("f"), TrueVal()), {"f": neg})
    assert report.related
    assert report.source_value == FalseVal()
    assert report.target_value == FalseVal()


def test_non_ground_component_rejected():
    env = (Assumption("A", Star()),)
    with pytest.raises(NonGroundType):
        separate_compile_check(env, Var("A"), {"A": Bool()})


def test_user_supplied_target_subst():
    env = (Assumption("f", BOOL_FN),)
    neg = Lam("b", Bool(), If(Var("b"), FalseVal(), TrueVal()))
    neg_t = translate((), neg).term
    report = separate_compile_check(
        env, App(Var("f"), FalseVal()), {"f": neg},
        target_subst={"f": neg_t},
    )
    assert report.related
    assert report.source_value == TrueVal()


def test_user_supplied_target_subst_must_match():
    env = (Assumption("f", BOOL_FN),)
    neg = Lam("b", Bool(), If(Var("b"), FalseVal(), TrueVal()))
    ident_t = translate((), Lam("b", Bool(), Var("b"))).term
    with pytest.raises(SubstError):
        separate_compile_check(
            env, App(Var("f"), FalseVal()), {"f": neg},
            target_subst={"f": ident_t},
        )


def test_linking_commutes_with_translation():
    env = (Assumption("f", BOOL_FN),)
    e = App(Var("f"), TrueVal())
    sub = {"f": Lam("b", Bool(), If(Var("b"), FalseVal(), TrueVal()))}

    linked_then_compiled = translate((), link(closing_map(env, sub), e)).term
    sub_t = {name: translate((), image).term for name, image in sub.items()}
    compiled_then_linked = link(sub_t, translate(env, e).term)
    assert t_equiv((), linked_then_compiled, compiled_then_linked)


def test_shared_fuel_reports_step_split():
    fuel = Fuel(remaining=10_000)
    t = App(Lam("b", Bool(), If(Var("b"), FalseVal(), TrueVal())), TrueVal())
    report = separate_compile_check((), t, {}, fuel=fuel)
    assert report.related
    src_steps, tgt_steps = report.steps
    assert src_steps >= 2 and tgt_steps >= 2
    assert fuel.used >= src_steps + tgt_steps
