"""Closure conversion from the source calculus to the target calculus.

Every lambda becomes a closure: closed code paired with a tuple of the
values the lambda captured.  Because types depend on terms, the captured
variables cannot be treated as an unordered set; their types may mention
each other, so capture works over a dependency-ordered telescope and the
environment tuple is a nested dependent pair.

Everything else translates constructor-to-constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Fuel, TypeCheckError, UnboundVariable, infer
from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeVal, Definition, FalseVal, Fst, If,
    Lam, Let, Pair, Pi, Sigma, Snd, Star, Telescope, Term, TrueVal,
    TypingEnv, UnitTy, UnitVal, Var, env_names, free_vars, fresh, lookup,
    rebind, subst,
)


@dataclass(frozen=True, slots=True)
class CompileOutput:
    """A translated term, its translated type, and the translated env."""

    term: Term
    type: Term
    env: TypingEnv


class ArityMismatch(Exception):
    """Tuple items and telescope have different lengths."""


def dfv(env: TypingEnv, e: Term, ty: Term) -> Telescope:
    """Dependency-closed telescope of the free variables of ``e`` and ``ty``.

    Free variables are chased through the types recorded in ``env``: a
    captured variable's type may itself mention further variables, which
    must be captured too.  The result keeps the environment's own order,
    which is automatically dependency-respecting, so each entry's type only
    mentions names appearing earlier in the telescope.
    """
    worklist = list(free_vars(e)) + list(free_vars(ty))
    collected: set[str] = set()
    while worklist:
        name = worklist.pop()
        if name in collected:
            continue
        entry = lookup(env, name)
        if entry is None:
            raise UnboundVariable(name)
        if entry.type is None:
            raise TypeCheckError(
                "unannotated-definition", name,
                f"environment definition {name} needs a type",
            )
        collected.add(name)
        worklist.extend(free_vars(entry.type))
    return tuple(
        Assumption(entry.name, entry.type)
        for entry in env
        if entry.name in collected
    )


def sigma_chain(tel: Telescope) -> Term:
    """The type of a telescope's value tuple: right-nested pairs ending in
    the unit type."""
    if not tel:
        return UnitTy()
    return Sigma(tel[0].name, tel[0].type, sigma_chain(tel[1:]))


def encode_ntuple(items: Sequence[Term], tel: Telescope) -> Term:
    """Pack ``items`` as a right-nested dependent pair chain.

    Each pair is annotated with the sigma chain of the remaining telescope,
    with the earlier items substituted in so every annotation is closed
    over the values already packed.
    """
    if len(items) != len(tel):
        raise ArityMismatch(
            f"{len(items)} items for a telescope of length {len(tel)}"
        )
    if not items:
        return UnitVal()
    head = tel[0]
    rest = tuple(
        Assumption(a.name, subst(a.type, items[0], head.name))
        for a in tel[1:]
    )
    return Pair(items[0], encode_ntuple(items[1:], rest), sigma_chain(tel))


def expand_match(
    vars: Sequence[str], scrutinee: Term, body: Term
) -> Term:
    """Desugar tuple pattern matching into projection lets.

    ``vars[k]`` is bound to the k-th component of ``scrutinee``, i.e.
    Fst(Snd^k(scrutinee)).  The lets carry no annotation; the checker
    recovers the types by inference.
    """
    if not vars:
        return body
    return Let(
        vars[0], Fst(scrutinee), None,
        expand_match(vars[1:], Snd(scrutinee), body),
    )


def translate(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> CompileOutput:
    """Closure-convert ``e``, returning the term, its type, and the env.

    ``e`` must be well-typed under ``env``; inference both validates this
    and supplies the lambda types the conversion needs.
    """
    fuel = fuel if fuel is not None else Fuel()
    ty = infer(env, e, fuel)
    term_t = _translate_term(env, e, fuel)
    ty_t = ty if isinstance(ty, Box) else _translate_term(env, ty, fuel)
    return CompileOutput(term_t, ty_t, translate_env(env, fuel))


def translate_env(env: TypingEnv, fuel: Optional[Fuel] = None) -> TypingEnv:
    """Pointwise translation of an environment's types and definitions."""
    fuel = fuel if fuel is not None else Fuel()
    out: list = []
    for i, entry in enumerate(env):
        prefix = env[:i]
        if isinstance(entry, Assumption):
            out.append(Assumption(entry.name, _translate_term(prefix, entry.type, fuel)))
        else:
            if entry.type is None:
                raise TypeCheckError(
                    "unannotated-definition", entry.name,
                    f"environment definition {entry.name} needs a type",
                )
            out.append(Definition(
                entry.name,
                _translate_term(prefix, entry.term, fuel),
                _translate_term(prefix, entry.type, fuel),
            ))
    return tuple(out)


def _translate_term(env: TypingEnv, e: Term, fuel: Fuel) -> Term:
    match e:
        case Lam(_, _, _):
            return _translate_lam(env, e, fuel)
        case Var(_) | Star() | Box() | Bool() | TrueVal() | FalseVal():
            return e
        case Pi(x, dom, cod):
            x, (cod,) = rebind(env_names(env), x, cod)
            return Pi(
                x,
                _translate_term(env, dom, fuel),
                _translate_term(env + (Assumption(x, dom),), cod, fuel),
            )
        case App(fn, arg):
            return App(_translate_term(env, fn, fuel), _translate_term(env, arg, fuel))
        case Sigma(x, dom, cod):
            x, (cod,) = rebind(env_names(env), x, cod)
            return Sigma(
                x,
                _translate_term(env, dom, fuel),
                _translate_term(env + (Assumption(x, dom),), cod, fuel),
            )
        case Pair(first, second, annot):
            return Pair(
                _translate_term(env, first, fuel),
                _translate_term(env, second, fuel),
                _translate_term(env, annot, fuel),
            )
        case Fst(arg):
            return Fst(_translate_term(env, arg, fuel))
        case Snd(arg):
            return Snd(_translate_term(env, arg, fuel))
        case Let(x, bound, annot, body):
            ty_x = annot if annot is not None else infer(env, bound, fuel)
            x, (body,) = rebind(env_names(env), x, body)
            return Let(
                x,
                _translate_term(env, bound, fuel),
                None if annot is None else _translate_term(env, annot, fuel),
                _translate_term(env + (Definition(x, bound, ty_x),), body, fuel),
            )
        case If(scrut, then_b, else_b):
            return If(
                _translate_term(env, scrut, fuel),
                _translate_term(env, then_b, fuel),
                _translate_term(env, else_b, fuel),
            )
    raise TypeCheckError(
        "wrong-language", e,
        f"{type(e).__name__} is not part of the source language",
    )


def _translate_lam(env: TypingEnv, lam: Lam, fuel: Fuel) -> Term:
    pity = infer(env, lam, fuel)
    tel = dfv(env, lam, pity)
    names = tuple(a.name for a in tel)

    # tel types live under prefixes of env; translating under the full env
    # is equivalent since names are unique
    tel_t = tuple(
        Assumption(a.name, _translate_term(env, a.type, fuel)) for a in tel
    )

    # the code reuses the lambda's binder; rename it when a captured
    # variable or an ambient name has the same spelling, since the
    # pattern-match lets for the captured names would shadow the argument
    x2, (body,) = rebind(set(names) | env_names(env), lam.name, lam.body)

    annot_t = _translate_term(env, lam.annot, fuel)
    body_t = _translate_term(env + (Assumption(x2, lam.annot),), body, fuel)

    n = fresh(
        "n",
        set(names) | {x2} | set(free_vars(annot_t)) | set(free_vars(body_t))
        | env_names(env),
    )
    code = CodeVal(
        n,
        sigma_chain(tel_t),
        x2,
        expand_match(names, Var(n), annot_t),
        expand_match(names, Var(n), body_t),
    )
    return Clo(code, encode_ntuple(tuple(Var(nm) for nm in names), tel_t))
