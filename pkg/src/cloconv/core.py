"""Reduction, equivalence, and type checking for both calculi.

The source calculus (functions via ``Lam``) and the target calculus
(functions via closed ``CodeVal`` wrapped in ``Clo``) share every other
rule, so one engine implements both, parameterized by language:

* reduction: delta (defined variables), zeta (let), beta (per-language),
  first/second projection, if-true/if-false
* equivalence: weak-head normalization plus structural descent, with the
  per-language eta rules (function eta for the source, closure eta for the
  target)
* typing: syntax-directed inference; conversion happens at checking
  positions only

Public wrappers come in pairs: ``step``/``t_step``, ``equiv``/``t_equiv``,
and so on, with the ``t_`` prefix for the target language.

All reduction is fuel-metered.  Well-typed terms normalize long before the
default budget runs out; the fuel exists so ill-typed input diverges into a
clean ``FuelExhausted`` instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, FalseVal,
    Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, Star, Term, TrueVal, TypingEnv,
    UnitTy, UnitVal, Var, env_names, free_vars, fresh, lookup, rebind, subst,
    subst_parallel,
)

Lang = Literal["cc", "cccc"]

DEFAULT_FUEL = 100_000


class FuelExhausted(Exception):
    """The step budget ran out; the input almost certainly diverges."""


@dataclass
class Fuel:
    """Mutable step budget.

    ``used`` counts spent steps so callers can report how much work separate
    phases took out of one shared budget.
    """

    remaining: int = DEFAULT_FUEL
    used: int = field(default=0)

    def spend(self) -> None:
        if self.remaining <= 0:
            raise FuelExhausted(f"out of fuel after {self.used} steps")
        self.remaining -= 1
        self.used += 1


class TypeCheckError(Exception):
    """A term failed to check.

    ``kind`` is a stable machine-readable tag, ``location`` the offending
    term or environment entry name, ``message`` the human explanation.
    """

    def __init__(self, kind: str, location: object, message: str):
        super().__init__(message)
        self.kind = kind
        self.location = location
        self.message = message


class UnboundVariable(TypeCheckError):
    def __init__(self, name: str):
        super().__init__("unbound-variable", name, f"unbound variable {name}")


class OpenCode(TypeCheckError):
    """Code mentioned a name other than its own two binders."""

    def __init__(self, location: object, names: tuple[str, ...]):
        super().__init__(
            "open-code", location,
            "code must be closed; free names: " + ", ".join(names),
        )
        self.names = names


def _fresh_fuel(fuel: Optional[Fuel]) -> Fuel:
    return fuel if fuel is not None else Fuel()


def _universe(env: TypingEnv, e: Term, ty: Term, what: str) -> Term:
    if not isinstance(ty, (Star, Box)):
        raise TypeCheckError(
            "expected-universe", e, f"{what} must be a type or universe"
        )
    return ty


# ---------------------------------------------------------------------------
# Reduction


def _whnf(env: TypingEnv, e: Term, fuel: Fuel, lang: Lang) -> Term:
    """Head-reduce until the outermost constructor is stable."""
    while True:
        match e:
            case Var(x):
                entry = lookup(env, x)
                if isinstance(entry, Definition):
                    fuel.spend()
                    e = entry.term
                    continue
                return e
            case Let(x, bound, _, body):
                fuel.spend()
                e = subst(body, bound, x)
            case App(fn, arg):
                fn = _whnf(env, fn, fuel, lang)
                if lang == "cc" and isinstance(fn, Lam):
                    fuel.spend()
                    e = subst(fn.body, arg, fn.name)
                    continue
                if lang == "cccc" and isinstance(fn, Clo):
                    code = _whnf(env, fn.code, fuel, lang)
                    if isinstance(code, CodeVal):
                        fuel.spend()
                        # simultaneous: the environment term may mention an
                        # ambient variable spelled like the argument binder
                        e = subst_parallel(
                            code.body,
                            {code.env_name: fn.env, code.arg_name: arg},
                        )
                        continue
                    return App(Clo(code, fn.env), arg)
                return App(fn, arg)
            case Fst(p):
                p = _whnf(env, p, fuel, lang)
                if isinstance(p, Pair):
                    fuel.spend()
                    e = p.first
                    continue
                return Fst(p)
            case Snd(p):
                p = _whnf(env, p, fuel, lang)
                if isinstance(p, Pair):
                    fuel.spend()
                    e = p.second
                    continue
                return Snd(p)
            case If(scrut, then_b, else_b):
                scrut = _whnf(env, scrut, fuel, lang)
                if isinstance(scrut, TrueVal):
                    fuel.spend()
                    e = then_b
                    continue
                if isinstance(scrut, FalseVal):
                    fuel.spend()
                    e = else_b
                    continue
                return If(scrut, then_b, else_b)
            case _:
                return e


def _root_step(env: TypingEnv, e: Term, lang: Lang) -> Optional[Term]:
    match e:
        case Var(x):
            entry = lookup(env, x)
            if isinstance(entry, Definition):
                return entry.term
        case Let(x, bound, _, body):
            return subst(body, bound, x)
        case App(Lam(x, _, body), arg) if lang == "cc":
            return subst(body, arg, x)
        case App(Clo(CodeVal(n, _, x, _, body), envt), arg) if lang == "cccc":
            return subst_parallel(body, {n: envt, x: arg})
        case Fst(Pair(first, _, _)):
            return first
        case Snd(Pair(_, second, _)):
            return second
        case If(TrueVal(), then_b, _):
            return then_b
        case If(FalseVal(), _, else_b):
            return else_b
    return None


def _step(env: TypingEnv, e: Term, lang: Lang) -> Optional[Term]:
    """One leftmost-outermost reduction, or None on a normal form."""
    reduct = _root_step(env, e, lang)
    if reduct is not None:
        return reduct

    def go(sub: Term, extra: TypingEnv = ()) -> Optional[Term]:
        return _step(env + extra, sub, lang)

    match e:
        case Pi(x, dom, cod):
            if (d := go(dom)) is not None:
                return Pi(x, d, cod)
            x, (cod,) = rebind(env_names(env), x, cod)
            if (c := go(cod, (Assumption(x, dom),))) is not None:
                return Pi(x, dom, c)
        case Sigma(x, dom, cod):
            if (d := go(dom)) is not None:
                return Sigma(x, d, cod)
            x, (cod,) = rebind(env_names(env), x, cod)
            if (c := go(cod, (Assumption(x, dom),))) is not None:
                return Sigma(x, dom, c)
        case Lam(x, annot, body):
            if (a := go(annot)) is not None:
                return Lam(x, a, body)
            x, (body,) = rebind(env_names(env), x, body)
            if (b := go(body, (Assumption(x, annot),))) is not None:
                return Lam(x, annot, b)
        case App(fn, arg):
            if (f := go(fn)) is not None:
                return App(f, arg)
            if (a := go(arg)) is not None:
                return App(fn, a)
        case Pair(first, second, annot):
            if (f := go(first)) is not None:
                return Pair(f, second, annot)
            if (s := go(second)) is not None:
                return Pair(first, s, annot)
            if (t := go(annot)) is not None:
                return Pair(first, second, t)
        case Fst(arg):
            if (a := go(arg)) is not None:
                return Fst(a)
        case Snd(arg):
            if (a := go(arg)) is not None:
                return Snd(a)
        case If(scrut, then_b, else_b):
            if (s := go(scrut)) is not None:
                return If(s, then_b, else_b)
            if (t := go(then_b)) is not None:
                return If(scrut, t, else_b)
            if (f := go(else_b)) is not None:
                return If(scrut, then_b, f)
        case CodeTy(n, env_annot, x, arg_annot, result):
            if (ea := go(env_annot)) is not None:
                return CodeTy(n, ea, x, arg_annot, result)
            n, (arg_annot, result) = rebind(env_names(env), n, arg_annot, result)
            under_n: TypingEnv = (Assumption(n, env_annot),)
            if (aa := go(arg_annot, under_n)) is not None:
                return CodeTy(n, env_annot, x, aa, result)
            x, (result,) = rebind(env_names(env) | {n}, x, result)
            under_both = under_n + (Assumption(x, arg_annot),)
            if (r := go(result, under_both)) is not None:
                return CodeTy(n, env_annot, x, arg_annot, r)
        case CodeVal(n, env_annot, x, arg_annot, body):
            if (ea := go(env_annot)) is not None:
                return CodeVal(n, ea, x, arg_annot, body)
            n, (arg_annot, body) = rebind(env_names(env), n, arg_annot, body)
            under_n = (Assumption(n, env_annot),)
            if (aa := go(arg_annot, under_n)) is not None:
                return CodeVal(n, env_annot, x, aa, body)
            x, (body,) = rebind(env_names(env) | {n}, x, body)
            under_both = under_n + (Assumption(x, arg_annot),)
            if (b := go(body, under_both)) is not None:
                return CodeVal(n, env_annot, x, arg_annot, b)
        case Clo(code, envt):
            if (c := go(code)) is not None:
                return Clo(c, envt)
            if (t := go(envt)) is not None:
                return Clo(code, t)
    return None


def _normalize(env: TypingEnv, e: Term, fuel: Fuel, lang: Lang) -> Term:
    while (nxt := _step(env, e, lang)) is not None:
        fuel.spend()
        e = nxt
    return e


# ---------------------------------------------------------------------------
# Equivalence


def _equiv(env: TypingEnv, a: Term, b: Term, fuel: Fuel, lang: Lang) -> bool:
    a = _whnf(env, a, fuel, lang)
    b = _whnf(env, b, fuel, lang)

    if lang == "cc":
        if isinstance(a, Lam) and isinstance(b, Lam):
            if not _equiv(env, a.annot, b.annot, fuel, lang):
                return False
            z = _fresh_binder(env, a.name, a.body, b.body)
            return _equiv(
                env + (Assumption(z, a.annot),),
                subst(a.body, Var(z), a.name),
                subst(b.body, Var(z), b.name),
                fuel, lang,
            )
        # function eta: compare the lambda body against the other side
        # applied to the bound variable
        if isinstance(a, Lam):
            z = _fresh_binder(env, a.name, a.body, b)
            return _equiv(
                env + (Assumption(z, a.annot),),
                subst(a.body, Var(z), a.name),
                App(b, Var(z)),
                fuel, lang,
            )
        if isinstance(b, Lam):
            z = _fresh_binder(env, b.name, b.body, a)
            return _equiv(
                env + (Assumption(z, b.annot),),
                App(a, Var(z)),
                subst(b.body, Var(z), b.name),
                fuel, lang,
            )
    else:
        # closure eta: inline the environment into the code body and compare
        # against the other side applied to the bound variable; when both
        # sides are closures the recursive App(closure, z) beta-reduces,
        # inlining the second environment too
        inlined = _clo_eta(env, a, b, fuel)
        if inlined is not None:
            return inlined
        inlined = _clo_eta(env, b, a, fuel)
        if inlined is not None:
            return inlined

    return _equiv_structural(env, a, b, fuel, lang)


def _clo_eta(
    env: TypingEnv, clo: Term, other: Term, fuel: Fuel
) -> Optional[bool]:
    """Try the closure eta rule with ``clo`` as the side being inlined.

    Returns None when the rule does not apply (not a closure, or its code is
    neutral rather than a code value).
    """
    if not isinstance(clo, Clo):
        return None
    code = _whnf(env, clo.code, fuel, "cccc")
    if not isinstance(code, CodeVal):
        return None
    avoid = env_names(env) | set(free_vars(code.body)) | set(free_vars(clo.env))
    avoid |= set(free_vars(other)) | set(free_vars(code.arg_annot))
    z = fresh(code.arg_name, avoid)
    dom = subst(code.arg_annot, clo.env, code.env_name)
    body = subst_parallel(
        code.body, {code.env_name: clo.env, code.arg_name: Var(z)}
    )
    return _equiv(
        env + (Assumption(z, dom),), body, App(other, Var(z)), fuel, "cccc"
    )


def _fresh_binder(env: TypingEnv, base: str, *terms: Term) -> str:
    avoid = env_names(env)
    for t in terms:
        avoid |= set(free_vars(t))
    return fresh(base, avoid)


def _equiv_structural(
    env: TypingEnv, a: Term, b: Term, fuel: Fuel, lang: Lang
) -> bool:
    if type(a) is not type(b):
        return False
    match a:
        case Var(x):
            return x == b.name
        case Star() | Box() | Bool() | TrueVal() | FalseVal() | UnitTy() | UnitVal():
            return True
        case Pi(x, dom, cod):
            if not _equiv(env, dom, b.domain, fuel, lang):
                return False
            z = _fresh_binder(env, x, cod, b.codomain)
            return _equiv(
                env + (Assumption(z, dom),),
                subst(cod, Var(z), x),
                subst(b.codomain, Var(z), b.name),
                fuel, lang,
            )
        case Sigma(x, dom, cod):
            if not _equiv(env, dom, b.first, fuel, lang):
                return False
            z = _fresh_binder(env, x, cod, b.second)
            return _equiv(
                env + (Assumption(z, dom),),
                subst(cod, Var(z), x),
                subst(b.second, Var(z), b.name),
                fuel, lang,
            )
        case App(fn, arg):
            return _equiv(env, fn, b.fn, fuel, lang) and _equiv(
                env, arg, b.arg, fuel, lang
            )
        case Pair(first, second, annot):
            return (
                _equiv(env, first, b.first, fuel, lang)
                and _equiv(env, second, b.second, fuel, lang)
                and _equiv(env, annot, b.annot, fuel, lang)
            )
        case Fst(arg) | Snd(arg):
            return _equiv(env, arg, b.arg, fuel, lang)
        case If(scrut, then_b, else_b):
            return (
                _equiv(env, scrut, b.scrutinee, fuel, lang)
                and _equiv(env, then_b, b.then_branch, fuel, lang)
                and _equiv(env, else_b, b.else_branch, fuel, lang)
            )
        case CodeTy(n, env_annot, x, arg_annot, result):
            return _equiv_code_parts(
                env, fuel, lang,
                (n, env_annot, x, arg_annot, result),
                (b.env_name, b.env_annot, b.arg_name, b.arg_annot, b.result),
            )
        case CodeVal(n, env_annot, x, arg_annot, body):
            return _equiv_code_parts(
                env, fuel, lang,
                (n, env_annot, x, arg_annot, body),
                (b.env_name, b.env_annot, b.arg_name, b.arg_annot, b.body),
            )
        case Clo(code, envt):
            return _equiv(env, code, b.code, fuel, lang) and _equiv(
                env, envt, b.env, fuel, lang
            )
        case Lam(_, _, _):
            # unreachable: handled by the eta cases
            return False
    return False


def _equiv_code_parts(env, fuel, lang, left, right) -> bool:
    n1, envt1, x1, arg1, res1 = left
    n2, envt2, x2, arg2, res2 = right
    if not _equiv(env, envt1, envt2, fuel, lang):
        return False
    zn = _fresh_binder(env, n1, arg1, arg2, res1, res2)
    env_n = env + (Assumption(zn, envt1),)
    arg1 = subst(arg1, Var(zn), n1)
    arg2 = subst(arg2, Var(zn), n2)
    res1 = subst(res1, Var(zn), n1)
    res2 = subst(res2, Var(zn), n2)
    if not _equiv(env_n, arg1, arg2, fuel, lang):
        return False
    zx = _fresh_binder(env_n, x1, res1, res2)
    env_nx = env_n + (Assumption(zx, arg1),)
    return _equiv(
        env_nx,
        subst(res1, Var(zx), x1),
        subst(res2, Var(zx), x2),
        fuel, lang,
    )


# ---------------------------------------------------------------------------
# Typing


def _infer(env: TypingEnv, e: Term, fuel: Fuel, lang: Lang) -> Term:
    """Infer the type of ``e``; the result is weak-head normal."""
    match e:
        case Var(x):
            entry = lookup(env, x)
            if entry is None:
                raise UnboundVariable(x)
            if entry.type is not None:
                return _whnf(env, entry.type, fuel, lang)
            # unannotated definition (pushed by reduction under a let):
            # recover its type under the prefix that precedes it
            idx = max(i for i, en in enumerate(env) if en.name == x)
            return _whnf(env, _infer(env[:idx], entry.term, fuel, lang), fuel, lang)
        case Star():
            return Box()
        case Box():
            raise TypeCheckError(
                "box-in-term", e, "the top universe cannot appear inside a term"
            )
        case Pi(x, dom, cod):
            _universe(env, dom, _infer(env, dom, fuel, lang), "Pi domain")
            x, (cod,) = rebind(env_names(env), x, cod)
            u = _infer(env + (Assumption(x, dom),), cod, fuel, lang)
            return _universe(env, cod, u, "Pi codomain")
        case Lam(x, annot, body):
            if lang != "cc":
                raise TypeCheckError(
                    "wrong-language", e, "lambda is not part of the target language"
                )
            _universe(env, annot, _infer(env, annot, fuel, lang), "binder annotation")
            x, (body,) = rebind(env_names(env), x, body)
            ty_body = _infer(env + (Assumption(x, annot),), body, fuel, lang)
            if isinstance(ty_body, Box):
                raise TypeCheckError(
                    "no-universe-abstraction", e,
                    "a function body cannot be a universe classifier",
                )
            return Pi(x, annot, ty_body)
        case App(fn, arg):
            ty_fn = _infer(env, fn, fuel, lang)
            if not isinstance(ty_fn, Pi):
                raise TypeCheckError(
                    "expected-function", fn,
                    "only terms of Pi type can be applied",
                )
            _check_at(env, arg, ty_fn.domain, fuel, lang)
            return _whnf(env, subst(ty_fn.codomain, arg, ty_fn.name), fuel, lang)
        case Sigma(x, dom, cod):
            u1 = _universe(env, dom, _infer(env, dom, fuel, lang), "Sigma first component")
            x, (cod,) = rebind(env_names(env), x, cod)
            u2 = _universe(
                env, cod,
                _infer(env + (Assumption(x, dom),), cod, fuel, lang),
                "Sigma second component",
            )
            # impredicative strong pairs are unsound, so the pair type lives
            # in Star only when both components do
            if isinstance(u1, Star) and isinstance(u2, Star):
                return Star()
            return Box()
        case Pair(first, second, annot):
            if not isinstance(annot, Sigma):
                raise TypeCheckError(
                    "pair-annotation", e, "pair annotation must be a Sigma type"
                )
            _universe(env, annot, _infer(env, annot, fuel, lang), "pair annotation")
            _check_at(env, first, annot.first, fuel, lang)
            _check_at(
                env, second, subst(annot.second, first, annot.name), fuel, lang
            )
            return annot
        case Fst(p):
            ty = _infer(env, p, fuel, lang)
            if not isinstance(ty, Sigma):
                raise TypeCheckError(
                    "expected-pair", p, "only terms of Sigma type can be projected"
                )
            return _whnf(env, ty.first, fuel, lang)
        case Snd(p):
            ty = _infer(env, p, fuel, lang)
            if not isinstance(ty, Sigma):
                raise TypeCheckError(
                    "expected-pair", p, "only terms of Sigma type can be projected"
                )
            return _whnf(env, subst(ty.second, Fst(p), ty.name), fuel, lang)
        case Let(x, bound, annot, body):
            if annot is not None:
                _universe(env, annot, _infer(env, annot, fuel, lang), "let annotation")
                _check_at(env, bound, annot, fuel, lang)
                ty_x = annot
            else:
                ty_x = _infer(env, bound, fuel, lang)
            x, (body,) = rebind(env_names(env), x, body)
            ty_body = _infer(
                env + (Definition(x, bound, ty_x),), body, fuel, lang
            )
            return _whnf(env, subst(ty_body, bound, x), fuel, lang)
        case Bool():
            return Star()
        case TrueVal() | FalseVal():
            return Bool()
        case If(scrut, then_b, else_b):
            ty_s = _infer(env, scrut, fuel, lang)
            if not _equiv(env, ty_s, Bool(), fuel, lang):
                raise TypeCheckError(
                    "if-scrutinee", scrut, "if scrutinee must be a Bool"
                )
            ty_t = _infer(env, then_b, fuel, lang)
            ty_f = _infer(env, else_b, fuel, lang)
            if isinstance(ty_t, Box) or isinstance(ty_f, Box):
                raise TypeCheckError(
                    "if-branches", e, "if branches cannot be universe classifiers"
                )
            if not _equiv(env, ty_t, ty_f, fuel, lang):
                raise TypeCheckError(
                    "if-branches", e, "if branches must have the same type"
                )
            return ty_t
        case UnitTy():
            _require_target(e, lang)
            return Star()
        case UnitVal():
            _require_target(e, lang)
            return UnitTy()
        case CodeTy(n, env_annot, x, arg_annot, result):
            _require_target(e, lang)
            _universe(env, env_annot, _infer(env, env_annot, fuel, lang), "code environment annotation")
            n, (arg_annot, result) = rebind(env_names(env), n, arg_annot, result)
            env_n = env + (Assumption(n, env_annot),)
            _universe(env_n, arg_annot, _infer(env_n, arg_annot, fuel, lang), "code argument annotation")
            x, (result,) = rebind(env_names(env_n), x, result)
            env_nx = env_n + (Assumption(x, arg_annot),)
            u = _infer(env_nx, result, fuel, lang)
            return _universe(env_nx, result, u, "code result")
        case CodeVal(n, env_annot, x, arg_annot, body):
            _require_target(e, lang)
            outside = free_vars(e)
            if outside:
                raise OpenCode(e, outside)
            # closedness lets code check under nothing but its two binders
            _universe((), env_annot, _infer((), env_annot, fuel, lang), "code environment annotation")
            env_n: TypingEnv = (Assumption(n, env_annot),)
            _universe(env_n, arg_annot, _infer(env_n, arg_annot, fuel, lang), "code argument annotation")
            x, (body,) = rebind({n}, x, body)
            env_nx = env_n + (Assumption(x, arg_annot),)
            ty_body = _infer(env_nx, body, fuel, lang)
            if isinstance(ty_body, Box):
                raise TypeCheckError(
                    "no-universe-abstraction", e,
                    "a code body cannot be a universe classifier",
                )
            return CodeTy(n, env_annot, x, arg_annot, ty_body)
        case Clo(code, envt):
            _require_target(e, lang)
            ty_code = _infer(env, code, fuel, lang)
            if not isinstance(ty_code, CodeTy):
                raise TypeCheckError(
                    "expected-code", code, "a closure needs code as its first part"
                )
            _check_at(env, envt, ty_code.env_annot, fuel, lang)
            # the resulting Pi keeps the code's argument binder; rename it
            # when the environment term happens to use the same name
            avoid = set(free_vars(envt)) | set(free_vars(ty_code.result))
            avoid |= set(free_vars(ty_code.arg_annot))
            z = fresh(ty_code.arg_name, avoid)
            dom = subst(ty_code.arg_annot, envt, ty_code.env_name)
            cod = subst_parallel(
                ty_code.result,
                {ty_code.env_name: envt, ty_code.arg_name: Var(z)},
            )
            return Pi(z, dom, cod)
    raise TypeCheckError("unknown-term", e, f"cannot type {type(e).__name__}")


def _require_target(e: Term, lang: Lang) -> None:
    if lang != "cccc":
        raise TypeCheckError(
            "wrong-language", e,
            f"{type(e).__name__} is not part of the source language",
        )


def _check_at(env: TypingEnv, e: Term, ty: Term, fuel: Fuel, lang: Lang) -> None:
    actual = _infer(env, e, fuel, lang)
    if not _equiv(env, actual, ty, fuel, lang):
        raise TypeCheckError(
            "type-mismatch", e, "term does not have the required type"
        )


def _check_env(env: TypingEnv, fuel: Fuel, lang: Lang) -> None:
    seen: set[str] = set()
    for i, entry in enumerate(env):
        prefix = env[:i]
        if entry.name in seen:
            raise TypeCheckError(
                "duplicate-name", entry.name,
                f"environment binds {entry.name} twice",
            )
        seen.add(entry.name)
        if isinstance(entry, Assumption):
            _universe(
                prefix, entry.type,
                _infer(prefix, entry.type, fuel, lang),
                f"type of assumption {entry.name}",
            )
        else:
            if entry.type is None:
                raise TypeCheckError(
                    "unannotated-definition", entry.name,
                    f"environment definition {entry.name} needs a type",
                )
            _universe(
                prefix, entry.type,
                _infer(prefix, entry.type, fuel, lang),
                f"type of definition {entry.name}",
            )
            _check_at(prefix, entry.term, entry.type, fuel, lang)


# ---------------------------------------------------------------------------
# Public pairs (source / target)


def step(env: TypingEnv, e: Term) -> Optional[Term]:
    """One leftmost-outermost source reduction; None on a normal form."""
    return _step(env, e, "cc")


def t_step(env: TypingEnv, e: Term) -> Optional[Term]:
    """One leftmost-outermost target reduction; None on a normal form."""
    return _step(env, e, "cccc")


def normalize(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _normalize(env, e, _fresh_fuel(fuel), "cc")


def t_normalize(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _normalize(env, e, _fresh_fuel(fuel), "cccc")


def whnf(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _whnf(env, e, _fresh_fuel(fuel), "cc")


def t_whnf(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _whnf(env, e, _fresh_fuel(fuel), "cccc")


def equiv(env: TypingEnv, e1: Term, e2: Term, fuel: Optional[Fuel] = None) -> bool:
    return _equiv(env, e1, e2, _fresh_fuel(fuel), "cc")


def t_equiv(env: TypingEnv, e1: Term, e2: Term, fuel: Optional[Fuel] = None) -> bool:
    return _equiv(env, e1, e2, _fresh_fuel(fuel), "cccc")


def infer(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _infer(env, e, _fresh_fuel(fuel), "cc")


def t_infer(env: TypingEnv, e: Term, fuel: Optional[Fuel] = None) -> Term:
    return _infer(env, e, _fresh_fuel(fuel), "cccc")


def check(env: TypingEnv, e: Term, ty: Term, fuel: Optional[Fuel] = None) -> None:
    _check_at(env, e, ty, _fresh_fuel(fuel), "cc")


def t_check(env: TypingEnv, e: Term, ty: Term, fuel: Optional[Fuel] = None) -> None:
    _check_at(env, e, ty, _fresh_fuel(fuel), "cccc")


def check_env(env: TypingEnv, fuel: Optional[Fuel] = None) -> None:
    _check_env(env, _fresh_fuel(fuel), "cc")


def t_check_env(env: TypingEnv, fuel: Optional[Fuel] = None) -> None:
    _check_env(env, _fresh_fuel(fuel), "cccc")
