"""Linking by substitution and the separate-compilation check.

A component is a term over an environment of assumptions (imports) and
definitions.  Linking replaces every assumption with a closed term of the
right type, inlines the definitions, and leaves a whole program.  The
separate-compilation check runs a ground-typed component through both
pipelines (link the source and run it, versus compile, link the compiled
imports, and run that) and reports whether the two Bool results agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compiler import translate
from .core import (
    Fuel, TypeCheckError, check, check_env, infer, normalize, t_check,
    t_equiv, t_normalize,
)
from .syntax import (
    Assumption, Bool, FalseVal, Term, TrueVal, TypingEnv, free_vars,
    subst_parallel,
)

ClosingSubst = dict[str, Term]


class SubstError(Exception):
    """A closing substitution is unusable for a given environment."""

    def __init__(self, name: str, reason: str):
        super().__init__(f"{name}: {reason}")
        self.name = name
        self.reason = reason


class NonGroundType(Exception):
    """Observation requires a Bool-typed program."""


@dataclass(frozen=True, slots=True)
class ObservationReport:
    """Results of running a component through both pipelines.

    ``steps`` counts the reduction steps each side took out of the shared
    fuel budget: (source, target).
    """

    source_value: Term
    target_value: Term
    related: bool
    steps: tuple[int, int]


def check_subst(
    env: TypingEnv,
    subst_map: ClosingSubst,
    fuel: Optional[Fuel] = None,
    lang: str = "cc",
) -> None:
    """Validate that ``subst_map`` closes ``env``'s assumptions.

    Every assumption must be mapped to a closed term; each image is checked
    in the empty environment against the assumption's type with the
    substitution built so far applied (assumption types may mention earlier
    imports and definitions, so they are closed the same way the component
    will be at link time).  Mapping a defined or unknown name is an error.
    """
    checker = t_check if lang == "cccc" else check
    assumptions = {e.name for e in env if isinstance(e, Assumption)}
    for name in subst_map:
        if name not in assumptions:
            raise SubstError(name, "does not name an assumption of the environment")
    closing: dict[str, Term] = {}
    for entry in env:
        if isinstance(entry, Assumption):
            if entry.name not in subst_map:
                raise SubstError(entry.name, "no term supplied for this assumption")
            image = subst_map[entry.name]
            stray = free_vars(image)
            if stray:
                raise SubstError(
                    entry.name,
                    "image must be closed; free names: " + ", ".join(stray),
                )
            try:
                checker((), image, subst_parallel(entry.type, closing), fuel)
            except TypeCheckError as ex:
                raise SubstError(
                    entry.name, f"image does not fit the required type: {ex.message}"
                ) from ex
            closing[entry.name] = image
        else:
            closing[entry.name] = subst_parallel(entry.term, closing)


def closing_map(env: TypingEnv, subst_map: ClosingSubst) -> dict[str, Term]:
    """The total name-to-closed-term map induced by a substitution.

    Assumptions map to their supplied images; definitions map to their own
    bodies with everything earlier already closed.
    """
    closing: dict[str, Term] = {}
    for entry in env:
        if isinstance(entry, Assumption):
            closing[entry.name] = subst_map[entry.name]
        else:
            closing[entry.name] = subst_parallel(entry.term, closing)
    return closing


def link(subst_map: ClosingSubst, e: Term) -> Term:
    """Simultaneous capture-avoiding replacement of the mapped names."""
    return subst_parallel(e, dict(subst_map))


def separate_compile_check(
    env: TypingEnv,
    e: Term,
    subst_map: ClosingSubst,
    fuel: Optional[Fuel] = None,
    target_subst: Optional[ClosingSubst] = None,
) -> ObservationReport:
    """Observe a Bool component through both pipelines.

    Source pipeline: close ``e`` over ``subst_map`` and normalize.  Target
    pipeline: closure-convert ``e``, close it over the compiled images (or
    over ``target_subst`` after verifying it is pointwise equivalent to the
    compiled images), and normalize that.  The observations are related
    when both sides land on the same Bool constructor.

    Both sides draw from one shared fuel budget; the report says how many
    steps each took.
    """
    fuel = fuel if fuel is not None else Fuel()
    check_env(env, fuel)
    ty = infer(env, e, fuel)
    if not isinstance(ty, Bool):
        raise NonGroundType("only Bool-typed components can be observed")
    check_subst(env, subst_map, fuel, "cc")

    closed = link(closing_map(env, subst_map), e)
    before = fuel.used
    source_value = normalize((), closed, fuel)
    source_steps = fuel.used - before

    out = translate(env, e, fuel)
    compiled_subst: ClosingSubst = {
        entry.name: translate((), subst_map[entry.name], fuel).term
        for entry in env
        if isinstance(entry, Assumption)
    }
    if target_subst is not None:
        for name, image in compiled_subst.items():
            if name not in target_subst:
                raise SubstError(name, "no term supplied for this assumption")
            if not t_equiv((), target_subst[name], image, fuel):
                raise SubstError(
                    name, "supplied target image is not equivalent to the compiled one"
                )
        check_subst(out.env, target_subst, fuel, "cccc")
        compiled_subst = dict(target_subst)

    closed_t = link(closing_map(out.env, compiled_subst), out.term)
    before = fuel.used
    target_value = t_normalize((), closed_t, fuel)
    target_steps = fuel.used - before

    related = (
        isinstance(source_value, TrueVal) and isinstance(target_value, TrueVal)
    ) or (
        isinstance(source_value, FalseVal) and isinstance(target_value, FalseVal)
    )
    return ObservationReport(
        source_value, target_value, related, (source_steps, target_steps)
    )
