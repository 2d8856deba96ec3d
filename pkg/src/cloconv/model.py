"""Decompilation of target terms into source terms.

Target-only constructors are modeled by plain source constructions: code
becomes a curried two-argument function, a closure becomes the application
of its code to its environment, and the unit type and value become their
Church encodings.  Everything else maps constructor-to-constructor.

The decompiler is the executable oracle for the target language: if a
target term is well typed, its decompilation must be a well-typed source
term, and target reduction/equivalence must be reflected in the source.
The property suites check exactly that.
"""

from __future__ import annotations

from typing import Optional

from .core import Fuel, t_check_env, t_infer
from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, FalseVal,
    Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, Star, Term, TrueVal, TypingEnv,
    UnitTy, UnitVal, Var,
)


def church_unit_type() -> Term:
    """The Church encoding of the unit type: the polymorphic identity type."""
    return Pi("a", Star(), Pi("x", Var("a"), Var("a")))


def church_unit_value() -> Term:
    """The Church encoding of the unit value: the polymorphic identity."""
    return Lam("a", Star(), Lam("x", Var("a"), Var("x")))


def decompile(
    env: TypingEnv,
    e: Term,
    fuel: Optional[Fuel] = None,
    diagnostics: Optional[list[str]] = None,
) -> Term:
    """Decompile a well-typed target term into the source language.

    ``diagnostics``, when given, collects notes about the typing readings
    this implementation commits to at the constructs where more than one
    reading exists (see ``strict_notes``).
    """
    t_infer(env, e, fuel)
    if diagnostics is not None:
        diagnostics.extend(strict_notes(e))
    return _dec(e)


def decompile_env(
    env: TypingEnv,
    fuel: Optional[Fuel] = None,
    diagnostics: Optional[list[str]] = None,
) -> TypingEnv:
    """Pointwise decompilation of a well-formed target environment."""
    t_check_env(env, fuel)
    out: list = []
    for entry in env:
        if diagnostics is not None:
            diagnostics.extend(strict_notes(entry.type))
            if isinstance(entry, Definition):
                diagnostics.extend(strict_notes(entry.term))
        if isinstance(entry, Assumption):
            out.append(Assumption(entry.name, _dec(entry.type)))
        else:
            out.append(Definition(entry.name, _dec(entry.term), _dec(entry.type)))
    return tuple(out)


SND_NOTE = (
    "second projection: its type is the second component with the first "
    "projection substituted for the binder"
)
CLO_NOTE = (
    "closure: its type substitutes the environment term for the code's "
    "environment binder"
)


def strict_notes(e: Term) -> list[str]:
    """The typing-reading notes that apply to constructs occurring in ``e``.

    Each note states the reading this implementation uses where alternate
    readings of the rules exist.  Deduplicated, stable order.
    """
    notes: list[str] = []
    if _contains(e, Snd):
        notes.append(SND_NOTE)
    if _contains(e, Clo):
        notes.append(CLO_NOTE)
    return notes


def _contains(e: Term, ctor: type) -> bool:
    if isinstance(e, ctor):
        return True
    match e:
        case Pi(_, dom, cod) | Sigma(_, dom, cod):
            return _contains(dom, ctor) or _contains(cod, ctor)
        case Lam(_, annot, body):
            return _contains(annot, ctor) or _contains(body, ctor)
        case App(fn, arg):
            return _contains(fn, ctor) or _contains(arg, ctor)
        case Pair(first, second, annot):
            return any(_contains(t, ctor) for t in (first, second, annot))
        case Fst(arg) | Snd(arg):
            return _contains(arg, ctor)
        case Let(_, bound, annot, body):
            if annot is not None and _contains(annot, ctor):
                return True
            return _contains(bound, ctor) or _contains(body, ctor)
        case If(scrut, then_b, else_b):
            return any(_contains(t, ctor) for t in (scrut, then_b, else_b))
        case CodeTy(_, env_annot, _, arg_annot, result):
            return any(_contains(t, ctor) for t in (env_annot, arg_annot, result))
        case CodeVal(_, env_annot, _, arg_annot, body):
            return any(_contains(t, ctor) for t in (env_annot, arg_annot, body))
        case Clo(code, envt):
            return _contains(code, ctor) or _contains(envt, ctor)
    return False


def _dec(e: Term) -> Term:
    match e:
        case CodeTy(n, env_annot, x, arg_annot, result):
            return Pi(n, _dec(env_annot), Pi(x, _dec(arg_annot), _dec(result)))
        case CodeVal(n, env_annot, x, arg_annot, body):
            return Lam(n, _dec(env_annot), Lam(x, _dec(arg_annot), _dec(body)))
        case Clo(code, envt):
            return App(_dec(code), _dec(envt))
        case UnitTy():
            return church_unit_type()
        case UnitVal():
            return church_unit_value()
        case Var(_) | Star() | Box() | Bool() | TrueVal() | FalseVal():
            return e
        case Pi(x, dom, cod):
            return Pi(x, _dec(dom), _dec(cod))
        case Sigma(x, dom, cod):
            return Sigma(x, _dec(dom), _dec(cod))
        case Lam(x, annot, body):
            return Lam(x, _dec(annot), _dec(body))
        case App(fn, arg):
            return App(_dec(fn), _dec(arg))
        case Pair(first, second, annot):
            return Pair(_dec(first), _dec(second), _dec(annot))
        case Fst(arg):
            return Fst(_dec(arg))
        case Snd(arg):
            return Snd(_dec(arg))
        case Let(x, bound, annot, body):
            return Let(
                x, _dec(bound),
                None if annot is None else _dec(annot),
                _dec(body),
            )
        case If(scrut, then_b, else_b):
            return If(_dec(scrut), _dec(then_b), _dec(else_b))
    raise AssertionError(f"cannot decompile {type(e).__name__}")
