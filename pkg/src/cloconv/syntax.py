"""Term syntax shared by the source and target calculi.

The source language is a Calculus of Constructions with dependent pairs,
definitions, and a ground Bool type.  The target language replaces lambda
abstraction with closed code and closures.  Both languages share most
constructors, so the constructors live here once and the two languages are
the union aliases ``SourceTerm`` and ``TargetTerm``.  Keeping ``Lam`` out of
``TargetTerm`` (and ``CodeVal``/``Clo``/``Unit`` out of ``SourceTerm``) lets a
type checker flag cross-language terms statically.

Binding is by name.  ``subst``/``subst_parallel`` are capture-avoiding and
rename binders on demand with ``fresh``; the renaming scheme is deterministic
so printed output is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Star:
    """The impredicative universe of small types."""


@dataclass(frozen=True, slots=True)
class Box:
    """The classifier of Star.

    Box is not part of either language's syntax: it may only appear as the
    result of type inference.  The parser has no notation for it and the
    checkers reject it inside user terms.
    """


@dataclass(frozen=True, slots=True)
class Pi:
    name: str
    domain: "Term"
    codomain: "Term"


@dataclass(frozen=True, slots=True)
class Lam:
    """Source-only abstraction; the compiler turns these into closures."""

    name: str
    annot: "Term"
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Sigma:
    name: str
    first: "Term"
    second: "Term"


@dataclass(frozen=True, slots=True)
class Pair:
    # annot must be syntactically a Sigma; the checkers enforce it.
    first: "Term"
    second: "Term"
    annot: "Term"


@dataclass(frozen=True, slots=True)
class Fst:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Snd:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Let:
    """Definition local to a term.

    ``annot`` may be None for lets produced by the tuple pattern-match sugar,
    where no annotation is available syntactically; the checker then infers
    the bound term's type.
    """

    name: str
    bound: "Term"
    annot: Optional["Term"]
    body: "Term"


@dataclass(frozen=True, slots=True)
class Bool:
    pass


@dataclass(frozen=True, slots=True)
class TrueVal:
    pass


@dataclass(frozen=True, slots=True)
class FalseVal:
    pass


@dataclass(frozen=True, slots=True)
class If:
    scrutinee: "Term"
    then_branch: "Term"
    else_branch: "Term"


@dataclass(frozen=True, slots=True)
class UnitTy:
    pass


@dataclass(frozen=True, slots=True)
class UnitVal:
    pass


@dataclass(frozen=True, slots=True)
class CodeTy:
    """Type of closed code taking an environment and one argument.

    ``arg_annot`` may mention ``env_name``; ``result`` may mention both
    binders.  ``env_annot`` is scoped outside both.
    """

    env_name: str
    env_annot: "Term"
    arg_name: str
    arg_annot: "Term"
    result: "Term"


@dataclass(frozen=True, slots=True)
class CodeVal:
    env_name: str
    env_annot: "Term"
    arg_name: str
    arg_annot: "Term"
    body: "Term"


@dataclass(frozen=True, slots=True)
class Clo:
    """A closure: code paired with its environment tuple."""

    code: "Term"
    env: "Term"


Universe = Union[Star, Box]

SourceTerm = Union[
    Var, Star, Pi, Lam, App, Sigma, Pair, Fst, Snd, Let,
    Bool, TrueVal, FalseVal, If,
]

TargetTerm = Union[
    Var, Star, Pi, App, Sigma, Pair, Fst, Snd, Let,
    Bool, TrueVal, FalseVal, If,
    UnitTy, UnitVal, CodeTy, CodeVal, Clo,
]

# Box included so that results of inference can flow through the generic
# syntax operations (substitution treats it as a leaf).
Term = Union[SourceTerm, TargetTerm, Box]


# ---------------------------------------------------------------------------
# Typing environments and telescopes


@dataclass(frozen=True, slots=True)
class Assumption:
    name: str
    type: "Term"


@dataclass(frozen=True, slots=True)
class Definition:
    # type is None only for unannotated local lets pushed during reduction;
    # entries of a checked environment always carry a type.
    name: str
    term: "Term"
    type: Optional["Term"]


EnvEntry = Union[Assumption, Definition]
TypingEnv = tuple[EnvEntry, ...]

# A dependency-ordered sequence of typed bindings: each type may mention
# earlier names only.
Telescope = tuple[Assumption, ...]


def lookup(env: TypingEnv, name: str) -> Optional[EnvEntry]:
    """Find the environment entry for ``name``; later entries shadow earlier
    ones (a checked environment never has duplicates)."""
    for entry in reversed(env):
        if entry.name == name:
            return entry
    return None


def env_names(env: TypingEnv) -> set[str]:
    return {entry.name for entry in env}


# ---------------------------------------------------------------------------
# Fresh names


def fresh(base: str, avoid) -> str:
    """A name not in ``avoid``, derived from ``base`` by appending a counter.

    Deterministic: the same inputs give the same name, which keeps compiler
    output and printed diagnostics stable.
    """
    if base not in avoid:
        return base
    k = 1
    while f"{base}{k}" in avoid:
        k += 1
    return f"{base}{k}"


# ---------------------------------------------------------------------------
# Free variables


def free_vars(e: Term) -> tuple[str, ...]:
    """Free variables in order of first occurrence, deduplicated."""
    acc: dict[str, None] = {}
    _fv(e, frozenset(), acc)
    return tuple(acc)


def _fv(e: Term, bound: frozenset[str], acc: dict[str, None]) -> None:
    match e:
        case Var(name):
            if name not in bound:
                acc.setdefault(name, None)
        case Pi(x, dom, cod) | Sigma(x, dom, cod):
            _fv(dom, bound, acc)
            _fv(cod, bound | {x}, acc)
        case Lam(x, annot, body):
            _fv(annot, bound, acc)
            _fv(body, bound | {x}, acc)
        case App(fn, arg):
            _fv(fn, bound, acc)
            _fv(arg, bound, acc)
        case Pair(first, second, annot):
            _fv(first, bound, acc)
            _fv(second, bound, acc)
            _fv(annot, bound, acc)
        case Fst(arg) | Snd(arg):
            _fv(arg, bound, acc)
        case Let(x, bnd, annot, body):
            _fv(bnd, bound, acc)
            if annot is not None:
                _fv(annot, bound, acc)
            _fv(body, bound | {x}, acc)
        case If(scrut, then_b, else_b):
            _fv(scrut, bound, acc)
            _fv(then_b, bound, acc)
            _fv(else_b, bound, acc)
        case CodeTy(n, env_annot, x, arg_annot, res):
            _fv(env_annot, bound, acc)
            _fv(arg_annot, bound | {n}, acc)
            _fv(res, bound | {n, x}, acc)
        case CodeVal(n, env_annot, x, arg_annot, body):
            _fv(env_annot, bound, acc)
            _fv(arg_annot, bound | {n}, acc)
            _fv(body, bound | {n, x}, acc)
        case Clo(code, envt):
            _fv(code, bound, acc)
            _fv(envt, bound, acc)
        case _:
            pass  # leaves: Star, Box, Bool, TrueVal, FalseVal, UnitTy, UnitVal


# ---------------------------------------------------------------------------
# Substitution


def subst(body: Term, replacement: Term, var: str) -> Term:
    """Capture-avoiding substitution ``body[replacement/var]``."""
    return subst_parallel(body, {var: replacement})


def rebind(avoid, name: str, *scoped: Term) -> tuple[str, tuple[Term, ...]]:
    """Rename a binder away from ``avoid``, rewriting the subterms it scopes.

    Environments are indexed by name, so pushing a binder that spells the
    same as an existing entry would capture types written in the outer
    scope.  Callers that extend an environment go through this first; when
    there is no collision the inputs come back untouched.
    """
    if name not in avoid:
        return name, scoped
    taken = set(avoid)
    for t in scoped:
        taken.update(free_vars(t))
    name2 = fresh(name, taken)
    return name2, tuple(subst(t, Var(name2), name) for t in scoped)


def subst_parallel(body: Term, mapping: dict[str, Term]) -> Term:
    """Simultaneous capture-avoiding substitution.

    All keys are replaced at once: occurrences of a key inside a replacement
    image are never rewritten again.  Linking and closure reduction rely on
    this (the environment term of a closure may mention an ambient variable
    spelled like the code's argument binder).
    """
    if not mapping:
        return body
    return _subst(body, mapping, {})


# The memo maps id(term) to (term, free variable set).  Holding the term
# keeps the id from being recycled for the lifetime of one substitution.
_FvMemo = dict[int, tuple[Term, frozenset[str]]]


def _fv_set(e: Term, memo: _FvMemo) -> frozenset[str]:
    hit = memo.get(id(e))
    if hit is not None:
        return hit[1]
    s: frozenset[str]
    match e:
        case Var(name):
            s = frozenset((name,))
        case Pi(x, dom, cod) | Sigma(x, dom, cod):
            s = _fv_set(dom, memo) | (_fv_set(cod, memo) - {x})
        case Lam(x, annot, body):
            s = _fv_set(annot, memo) | (_fv_set(body, memo) - {x})
        case App(fn, arg):
            s = _fv_set(fn, memo) | _fv_set(arg, memo)
        case Pair(first, second, annot):
            s = _fv_set(first, memo) | _fv_set(second, memo) | _fv_set(annot, memo)
        case Fst(arg) | Snd(arg):
            s = _fv_set(arg, memo)
        case Let(x, bnd, annot, body):
            s = _fv_set(bnd, memo) | (_fv_set(body, memo) - {x})
            if annot is not None:
                s |= _fv_set(annot, memo)
        case If(scrut, then_b, else_b):
            s = _fv_set(scrut, memo) | _fv_set(then_b, memo) | _fv_set(else_b, memo)
        case (
            CodeTy(n, env_annot, x, arg_annot, res)
            | CodeVal(n, env_annot, x, arg_annot, res)
        ):
            s = (
                _fv_set(env_annot, memo)
                | (_fv_set(arg_annot, memo) - {n})
                | (_fv_set(res, memo) - {n, x})
            )
        case Clo(code, envt):
            s = _fv_set(code, memo) | _fv_set(envt, memo)
        case _:
            s = frozenset()
    memo[id(e)] = (e, s)
    return s


def _relevant(mapping: dict[str, Term], e: Term, memo: _FvMemo) -> dict[str, Term]:
    fv = _fv_set(e, memo)
    return {k: v for k, v in mapping.items() if k in fv}


def _under(
    mapping: dict[str, Term], binder: str, scoped: tuple[Term, ...], memo: _FvMemo
) -> tuple[str, tuple[Term, ...], dict[str, Term]]:
    """Adjust a substitution for descent under ``binder``.

    Drops the shadowed key and renames the binder when it would capture a
    free variable of some image.  Returns the (possibly renamed) binder, the
    correspondingly renamed scoped subterms, and the adjusted mapping.
    """
    m = {k: v for k, v in mapping.items() if k != binder}
    m = {
        k: v
        for k, v in m.items()
        if any(k in _fv_set(t, memo) for t in scoped)
    }
    if not m:
        return binder, scoped, m
    captured = any(binder in _fv_set(v, memo) for v in m.values())
    if not captured:
        return binder, scoped, m
    avoid = set(m)
    for v in m.values():
        avoid.update(_fv_set(v, memo))
    for t in scoped:
        avoid.update(_fv_set(t, memo))
    b2 = fresh(binder, avoid)
    m[binder] = Var(b2)
    return b2, scoped, m


def _subst(e: Term, m: dict[str, Term], memo: _FvMemo) -> Term:
    if not m:
        return e
    match e:
        case Var(name):
            return m.get(name, e)
        case Pi(x, dom, cod):
            dom2 = _subst(dom, _relevant(m, dom, memo), memo)
            x2, (cod,), m2 = _under(m, x, (cod,), memo)
            return Pi(x2, dom2, _subst(cod, m2, memo))
        case Sigma(x, dom, cod):
            dom2 = _subst(dom, _relevant(m, dom, memo), memo)
            x2, (cod,), m2 = _under(m, x, (cod,), memo)
            return Sigma(x2, dom2, _subst(cod, m2, memo))
        case Lam(x, annot, body):
            annot2 = _subst(annot, _relevant(m, annot, memo), memo)
            x2, (body,), m2 = _under(m, x, (body,), memo)
            return Lam(x2, annot2, _subst(body, m2, memo))
        case App(fn, arg):
            return App(
                _subst(fn, _relevant(m, fn, memo), memo),
                _subst(arg, _relevant(m, arg, memo), memo),
            )
        case Pair(first, second, annot):
            return Pair(
                _subst(first, _relevant(m, first, memo), memo),
                _subst(second, _relevant(m, second, memo), memo),
                _subst(annot, _relevant(m, annot, memo), memo),
            )
        case Fst(arg):
            return Fst(_subst(arg, _relevant(m, arg, memo), memo))
        case Snd(arg):
            return Snd(_subst(arg, _relevant(m, arg, memo), memo))
        case Let(x, bnd, annot, body):
            bnd2 = _subst(bnd, _relevant(m, bnd, memo), memo)
            annot2 = (
                None if annot is None else _subst(annot, _relevant(m, annot, memo), memo)
            )
            x2, (body,), m2 = _under(m, x, (body,), memo)
            return Let(x2, bnd2, annot2, _subst(body, m2, memo))
        case If(scrut, then_b, else_b):
            return If(
                _subst(scrut, _relevant(m, scrut, memo), memo),
                _subst(then_b, _relevant(m, then_b, memo), memo),
                _subst(else_b, _relevant(m, else_b, memo), memo),
            )
        case CodeTy(n, env_annot, x, arg_annot, res):
            env_annot2 = _subst(env_annot, _relevant(m, env_annot, memo), memo)
            n2, (arg_annot, res), mn = _under(m, n, (arg_annot, res), memo)
            arg_annot2 = _subst(arg_annot, _relevant(mn, arg_annot, memo), memo)
            x2, (res,), mx = _under(mn, x, (res,), memo)
            return CodeTy(n2, env_annot2, x2, arg_annot2, _subst(res, mx, memo))
        case CodeVal(n, env_annot, x, arg_annot, body):
            env_annot2 = _subst(env_annot, _relevant(m, env_annot, memo), memo)
            n2, (arg_annot, body), mn = _under(m, n, (arg_annot, body), memo)
            arg_annot2 = _subst(arg_annot, _relevant(mn, arg_annot, memo), memo)
            x2, (body,), mx = _under(mn, x, (body,), memo)
            return CodeVal(n2, env_annot2, x2, arg_annot2, _subst(body, mx, memo))
        case Clo(code, envt):
            return Clo(
                _subst(code, _relevant(m, code, memo), memo),
                _subst(envt, _relevant(m, envt, memo), memo),
            )
        case _:
            return e


# ---------------------------------------------------------------------------
# Alpha equivalence


def alpha_eq(e1: Term, e2: Term) -> bool:
    """Equality up to consistent renaming of bound names."""
    return _alpha(e1, e2, {}, {}, 0)


def _alpha(
    a: Term, b: Term, m1: dict[str, int], m2: dict[str, int], depth: int
) -> bool:
    if type(a) is not type(b):
        return False
    match a:
        case Var(x):
            y = b.name
            da, db = m1.get(x), m2.get(y)
            if da is None and db is None:
                return x == y
            return da == db
        case Pi(x, dom, cod):
            return _alpha(dom, b.domain, m1, m2, depth) and _alpha(
                cod, b.codomain, m1 | {x: depth}, m2 | {b.name: depth}, depth + 1
            )
        case Sigma(x, dom, cod):
            return _alpha(dom, b.first, m1, m2, depth) and _alpha(
                cod, b.second, m1 | {x: depth}, m2 | {b.name: depth}, depth + 1
            )
        case Lam(x, annot, body):
            return _alpha(annot, b.annot, m1, m2, depth) and _alpha(
                body, b.body, m1 | {x: depth}, m2 | {b.name: depth}, depth + 1
            )
        case App(fn, arg):
            return _alpha(fn, b.fn, m1, m2, depth) and _alpha(arg, b.arg, m1, m2, depth)
        case Pair(first, second, annot):
            return (
                _alpha(first, b.first, m1, m2, depth)
                and _alpha(second, b.second, m1, m2, depth)
                and _alpha(annot, b.annot, m1, m2, depth)
            )
        case Fst(arg) | Snd(arg):
            return _alpha(arg, b.arg, m1, m2, depth)
        case Let(x, bnd, annot, body):
            if (annot is None) != (b.annot is None):
                return False
            if annot is not None and not _alpha(annot, b.annot, m1, m2, depth):
                return False
            return _alpha(bnd, b.bound, m1, m2, depth) and _alpha(
                body, b.body, m1 | {x: depth}, m2 | {b.name: depth}, depth + 1
            )
        case If(scrut, then_b, else_b):
            return (
                _alpha(scrut, b.scrutinee, m1, m2, depth)
                and _alpha(then_b, b.then_branch, m1, m2, depth)
                and _alpha(else_b, b.else_branch, m1, m2, depth)
            )
        case CodeTy(n, env_annot, x, arg_annot, res):
            if not _alpha(env_annot, b.env_annot, m1, m2, depth):
                return False
            m1n, m2n = m1 | {n: depth}, m2 | {b.env_name: depth}
            if not _alpha(arg_annot, b.arg_annot, m1n, m2n, depth + 1):
                return False
            return _alpha(
                res, b.result,
                m1n | {x: depth + 1}, m2n | {b.arg_name: depth + 1}, depth + 2,
            )
        case CodeVal(n, env_annot, x, arg_annot, body):
            if not _alpha(env_annot, b.env_annot, m1, m2, depth):
                return False
            m1n, m2n = m1 | {n: depth}, m2 | {b.env_name: depth}
            if not _alpha(arg_annot, b.arg_annot, m1n, m2n, depth + 1):
                return False
            return _alpha(
                body, b.body,
                m1n | {x: depth + 1}, m2n | {b.arg_name: depth + 1}, depth + 2,
            )
        case Clo(code, envt):
            return _alpha(code, b.code, m1, m2, depth) and _alpha(envt, b.env, m1, m2, depth)
        case _:
            return True  # nullary constructors of equal type
