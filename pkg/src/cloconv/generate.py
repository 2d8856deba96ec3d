"""Deterministic generation of well-typed terms and the property suites.

Generation is goal-directed: given a type, the generator searches for an
inhabitant, recursing through the grammar with a depth bound.  Naive
generate-and-filter is hopeless for dependent types (well-typed terms are
vanishingly rare), so every production is built to satisfy its goal by
construction and each emitted term is validated by the checker anyway.

The property suites execute the compiler's metatheory over generated
instances: subject reduction for the source language, the four
translation properties (type preservation, compositionality, preservation
of reduction, coherence), the three model-oracle properties, and the
separate-compilation observation.  Identical configuration yields an
identical stream; each iteration is seeded independently of the others so
suites are reproducible and order-independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .compiler import translate, translate_env
from .core import (
    Fuel, FuelExhausted, TypeCheckError, check, equiv, infer, normalize,
    step, t_check, t_equiv, t_normalize, t_step, whnf,
)
from .linking import separate_compile_check
from .model import decompile, decompile_env
from .sexpr import print_env_entry, print_term
from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, FalseVal,
    Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, Star, Term, TrueVal, TypingEnv,
    Var, env_names, free_vars, fresh, subst, subst_parallel,
)

PROPERTY_NAMES = (
    "subject-reduction",
    "compositionality",
    "reduction-preservation",
    "coherence",
    "type-preservation",
    "model-type-preservation",
    "model-coherence",
    "round-trip",
    "separate-compilation",
)


@dataclass(frozen=True, slots=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 4
    env_profile: str = "mixed"
    iterations: int = 100


@dataclass(frozen=True, slots=True)
class PropertyReport:
    """Outcome of one property suite.

    ``completed`` counts iterations that reached a verdict; the difference
    from ``iterations`` is generator give-ups, which are skips, not
    failures.
    """

    property_name: str
    iterations: int
    failures: tuple[dict, ...]
    completed: int


class GiveUp(Exception):
    """No inhabitant found within the depth bound."""


class _Fail(Exception):
    """Internal: a generation branch hit a dead end."""


# ---------------------------------------------------------------------------
# Environment profiles


def _ground_env() -> TypingEnv:
    return (
        Assumption("b", Bool()),
        Definition("c", TrueVal(), Bool()),
        Assumption("f", Pi("x", Bool(), Bool())),
        Definition(
            "g",
            Lam("x", Bool(), If(Var("x"), FalseVal(), TrueVal())),
            Pi("x", Bool(), Bool()),
        ),
    )


def _poly_env() -> TypingEnv:
    return (
        Assumption("A", Star()),
        Assumption("a", Var("A")),
        Assumption("h", Pi("x", Var("A"), Var("A"))),
        Definition(
            "id",
            Lam("B", Star(), Lam("y", Var("B"), Var("y"))),
            Pi("B", Star(), Pi("y", Var("B"), Var("B"))),
        ),
    )


PROFILES: dict[str, TypingEnv] = {
    "empty": (),
    "ground": _ground_env(),
    "poly": _poly_env(),
    "mixed": _ground_env() + _poly_env(),
}

_ATTEMPTS = 40


# ---------------------------------------------------------------------------
# Generation


def gen_term(
    cfg: GenConfig,
    env: TypingEnv,
    goal: Optional[Term] = None,
    rng: Optional[random.Random] = None,
) -> Term:
    """A term that typechecks under ``env``, at ``goal`` when given.

    Deterministic in (cfg, env, goal): the default stream is seeded from
    ``cfg.seed`` alone.  Raises GiveUp when no inhabitant turns up within
    the depth bound.
    """
    if rng is None:
        rng = random.Random(f"{cfg.seed}:gen")
    for _ in range(_ATTEMPTS):
        try:
            term = _gen(env, goal, cfg.max_depth, rng)
        except _Fail:
            continue
        try:
            if goal is None:
                infer(env, term)
            else:
                check(env, term, goal)
        except (TypeCheckError, FuelExhausted):
            continue
        return term
    raise GiveUp(
        "no inhabitant found"
        + ("" if goal is None else f" for {print_term(goal)}")
    )


def _pick(rng: random.Random, weighted: list[tuple[int, Callable[[], Term]]]) -> Term:
    """Weighted choice, retrying at most two failed branches.

    Exhaustive backtracking at every node is exponential in depth; a couple
    of local retries keeps one attempt cheap and leaves recovery to the
    attempt loop in gen_term.
    """
    pool = list(weighted)
    for _ in range(3):
        if not pool:
            break
        total = sum(w for w, _ in pool)
        r = rng.random() * total
        acc = 0.0
        index = len(pool) - 1
        for k, (w, _) in enumerate(pool):
            acc += w
            if r < acc:
                index = k
                break
        _, thunk = pool.pop(index)
        try:
            return thunk()
        except _Fail:
            continue
    raise _Fail


def _gen(env: TypingEnv, goal: Optional[Term], depth: int, rng: random.Random) -> Term:
    if goal is None:
        goal = _gen_goal(env, depth, rng)
    g = whnf(env, goal, Fuel())
    match g:
        case Bool():
            return _gen_bool(env, depth, rng)
        case Star():
            return _gen_star(env, depth, rng)
        case Box():
            return _gen_box(env, depth, rng)
        case Pi(_, _, _):
            return _gen_pi(env, g, depth, rng)
        case Sigma(_, _, _):
            return _gen_sigma(env, g, depth, rng)
        case _:
            return _gen_neutral(env, g, depth, rng)


def _gen_goal(env: TypingEnv, depth: int, rng: random.Random) -> Term:
    opts: list[Term] = [Bool(), Bool(), Star()]
    for entry in env:
        if isinstance(entry.type, Star):
            opts.append(Var(entry.name))
    if depth > 0:
        opts.append(Pi("p", Bool(), Bool()))
        opts.append(Sigma("p", Bool(), Bool()))
    return rng.choice(opts)


def _vars_of(env: TypingEnv, want: Callable[[Term], bool]) -> list[Term]:
    out: list[Term] = []
    for entry in env:
        if entry.type is not None and want(whnf(env, entry.type, Fuel())):
            out.append(Var(entry.name))
    return out


def _identity_entries(env: TypingEnv) -> list[str]:
    """Names whose type is the polymorphic identity type."""
    out = []
    for entry in env:
        match entry.type:
            case Pi(b, Star(), Pi(_, Var(v1), Var(v2))) if v1 == b and v2 == b:
                out.append(entry.name)
    return out


def _gen_bool(env: TypingEnv, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = [
        (3, TrueVal),
        (3, FalseVal),
    ]
    for v in _vars_of(env, lambda t: isinstance(t, Bool)):
        ws.append((3, lambda v=v: v))
    if depth > 0:
        ws.append((2, lambda: If(
            _gen_bool(env, depth - 1, rng),
            _gen_bool(env, depth - 1, rng),
            _gen_bool(env, depth - 1, rng),
        )))
        for entry in env:
            match entry.type:
                case Pi(_, Bool(), Bool()):
                    ws.append((2, lambda name=entry.name: App(
                        Var(name), _gen_bool(env, depth - 1, rng)
                    )))
        for name in _identity_entries(env):
            ws.append((1, lambda name=name: App(
                App(Var(name), Bool()), _gen_bool(env, depth - 1, rng)
            )))
        ws.append((1, lambda: _gen_redex(env, Bool(), depth, rng)))
        ws.append((1, lambda: _gen_let(env, Bool(), depth, rng)))
        ws.append((1, lambda: _gen_fst(env, Bool(), depth, rng)))
        ws.append((1, lambda: _gen_snd(env, Bool(), depth, rng)))
    return _pick(rng, ws)


def _gen_redex(env: TypingEnv, goal: Term, depth: int, rng: random.Random) -> Term:
    z = fresh("z", env_names(env) | set(free_vars(goal)))
    body = _gen(env + (Assumption(z, Bool()),), goal, depth - 1, rng)
    return App(Lam(z, Bool(), body), _gen_bool(env, depth - 1, rng))


def _gen_let(env: TypingEnv, goal: Term, depth: int, rng: random.Random) -> Term:
    z = fresh("z", env_names(env) | set(free_vars(goal)))
    bound = _gen_bool(env, depth - 1, rng)
    body = _gen(env + (Definition(z, bound, Bool()),), goal, depth - 1, rng)
    return Let(z, bound, Bool(), body)


def _gen_fst(env: TypingEnv, goal: Term, depth: int, rng: random.Random) -> Term:
    z = fresh("z", env_names(env) | set(free_vars(goal)))
    first = _gen(env, goal, depth - 1, rng)
    second = _gen_bool(env, depth - 1, rng)
    return Fst(Pair(first, second, Sigma(z, goal, Bool())))


def _gen_snd(env: TypingEnv, goal: Term, depth: int, rng: random.Random) -> Term:
    z = fresh("z", env_names(env) | set(free_vars(goal)))
    first = _gen_bool(env, depth - 1, rng)
    second = _gen(env, goal, depth - 1, rng)
    return Snd(Pair(first, second, Sigma(z, Bool(), goal)))


def _gen_star(env: TypingEnv, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = [(3, Bool)]
    for v in _vars_of(env, lambda t: isinstance(t, Star)):
        ws.append((2, lambda v=v: v))
    if depth > 0:
        def pi_type() -> Term:
            z = fresh("z", env_names(env))
            dom = _gen_star(env, depth - 1, rng)
            return Pi(z, dom, _gen_star(env + (Assumption(z, dom),), depth - 1, rng))

        def impredicative_pi() -> Term:
            # a Pi over all small types still lives among the small types
            z = fresh("z", env_names(env))
            return Pi(z, Star(), _gen_star(env + (Assumption(z, Star()),), depth - 1, rng))

        def sigma_type() -> Term:
            z = fresh("z", env_names(env))
            dom = _gen_star(env, depth - 1, rng)
            return Sigma(z, dom, _gen_star(env + (Assumption(z, dom),), depth - 1, rng))

        def if_type() -> Term:
            return If(
                _gen_bool(env, depth - 1, rng),
                _gen_star(env, depth - 1, rng),
                _gen_star(env, depth - 1, rng),
            )

        ws.extend([(2, pi_type), (1, impredicative_pi), (2, sigma_type), (1, if_type)])
    return _pick(rng, ws)


def _gen_box(env: TypingEnv, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = [(3, Star)]
    if depth > 0:
        def pi_into_star() -> Term:
            z = fresh("z", env_names(env))
            dom = _gen_star(env, depth - 1, rng)
            return Pi(z, dom, Star())

        ws.append((1, pi_into_star))
    return _pick(rng, ws)


def _gen_pi(env: TypingEnv, g: Pi, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = []

    def lam() -> Term:
        if depth <= 0:
            raise _Fail
        x = fresh(g.name, env_names(env) | set(free_vars(g)))
        body_goal = subst(g.codomain, Var(x), g.name)
        body = _gen(env + (Assumption(x, g.domain),), body_goal, depth - 1, rng)
        return Lam(x, g.domain, body)

    ws.append((4, lam))
    for v in _vars_of(env, lambda t: isinstance(t, Pi)):
        def var_at(v=v) -> Term:
            if not equiv(env, infer(env, v), g):
                raise _Fail
            return v
        ws.append((2, var_at))
    for name in _identity_entries(env):
        def id_inst(name=name) -> Term:
            candidate = App(Var(name), g.domain)
            if not equiv(env, infer(env, candidate), g):
                raise _Fail
            return candidate
        ws.append((1, id_inst))
    if depth > 0:
        ws.append((1, lambda: If(
            _gen_bool(env, depth - 1, rng),
            _gen_pi(env, g, depth - 1, rng),
            _gen_pi(env, g, depth - 1, rng),
        )))
    return _pick(rng, ws)


def _gen_sigma(env: TypingEnv, g: Sigma, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = []

    def pair() -> Term:
        if depth <= 0:
            raise _Fail
        first = _gen(env, g.first, depth - 1, rng)
        second_goal = subst(g.second, first, g.name)
        second = _gen(env, second_goal, depth - 1, rng)
        return Pair(first, second, g)

    ws.append((4, pair))
    for v in _vars_of(env, lambda t: isinstance(t, Sigma)):
        def var_at(v=v) -> Term:
            if not equiv(env, infer(env, v), g):
                raise _Fail
            return v
        ws.append((2, var_at))
    return _pick(rng, ws)


def _gen_neutral(env: TypingEnv, g: Term, depth: int, rng: random.Random) -> Term:
    ws: list[tuple[int, Callable[[], Term]]] = []
    for entry in env:
        if entry.type is None:
            continue
        def var_at(name=entry.name) -> Term:
            if not equiv(env, infer(env, Var(name)), g):
                raise _Fail
            return Var(name)
        ws.append((3, var_at))
    if depth > 0:
        for entry in env:
            match entry.type:
                case Pi(x, dom, cod):
                    def applied(name=entry.name, x=x, dom=dom, cod=cod) -> Term:
                        arg = _gen(env, dom, depth - 1, rng)
                        if not equiv(env, subst(cod, arg, x), g):
                            raise _Fail
                        return App(Var(name), arg)
                    ws.append((2, applied))
        for name in _identity_entries(env):
            ws.append((2, lambda name=name: App(
                App(Var(name), g), _gen(env, g, depth - 1, rng)
            )))
        ws.append((1, lambda: If(
            _gen_bool(env, depth - 1, rng),
            _gen(env, g, depth - 1, rng),
            _gen(env, g, depth - 1, rng),
        )))
        ws.append((1, lambda: _gen_redex(env, g, depth, rng)))
        ws.append((1, lambda: _gen_let(env, g, depth, rng)))
        ws.append((1, lambda: _gen_fst(env, g, depth, rng)))
    return _pick(rng, ws)


def _gen_stepping(cfg: GenConfig, env: TypingEnv, rng: random.Random) -> Term:
    """A well-typed term that is not in normal form."""
    e = gen_term(cfg, env, None, rng)
    if step(env, e) is not None:
        return e
    z = fresh("z", env_names(env) | set(free_vars(e)))
    # a throwaway let always zeta-steps and leaves the type unchanged
    return Let(z, TrueVal(), Bool(), e)


# ---------------------------------------------------------------------------
# Shrinking


def _children(e: Term) -> tuple[Term, ...]:
    match e:
        case Pi(_, dom, cod) | Sigma(_, dom, cod):
            return (dom, cod)
        case Lam(_, annot, body):
            return (annot, body)
        case App(fn, arg):
            return (fn, arg)
        case Pair(first, second, annot):
            return (first, second, annot)
        case Fst(arg) | Snd(arg):
            return (arg,)
        case Let(_, bound, annot, body):
            return (bound, body) if annot is None else (bound, annot, body)
        case If(scrut, then_b, else_b):
            return (scrut, then_b, else_b)
        case CodeTy(_, env_annot, _, arg_annot, result):
            return (env_annot, arg_annot, result)
        case CodeVal(_, env_annot, _, arg_annot, body):
            return (env_annot, arg_annot, body)
        case Clo(code, envt):
            return (code, envt)
    return ()


def _size(e: Term) -> int:
    return 1 + sum(_size(c) for c in _children(e))


def _shrink_candidates(e: Term) -> list[Term]:
    seen: list[Term] = []

    def walk(t: Term) -> None:
        for child in _children(t):
            if child not in seen:
                seen.append(child)
            walk(child)

    walk(e)
    for leaf in (TrueVal(), FalseVal()):
        if leaf not in seen and leaf != e:
            seen.append(leaf)
    return sorted(seen, key=_size)


def shrink(e: Term, still_fails: Callable[[Term], bool]) -> Term:
    """Greedy minimization by subterm replacement.

    ``still_fails`` must return True only for candidates that remain inside
    the property's precondition and still violate it; it is expected to
    swallow its own exceptions.
    """
    improved = True
    while improved:
        improved = False
        for cand in _shrink_candidates(e):
            if _size(cand) >= _size(e):
                break
            if still_fails(cand):
                e = cand
                improved = True
                break
    return e


def _guarded(attempt: Callable[[Term], Optional[dict]]) -> Callable[[Term], bool]:
    def fails(t: Term) -> bool:
        try:
            return attempt(t) is not None
        except Exception:
            return False
    return fails


def _verdict(e: Term, attempt: Callable[[Term], Optional[dict]]) -> Optional[dict]:
    """Run a property body; on failure, shrink the term and re-report."""
    witness = attempt(e)
    if witness is None:
        return None
    smaller = shrink(e, _guarded(attempt))
    final = attempt(smaller)
    return final if final is not None else witness


# ---------------------------------------------------------------------------
# Property suites


def _witness(i: int, env: TypingEnv, relation: str, **terms: Term) -> dict:
    return {
        "iteration": i,
        "env": " ".join(print_env_entry(entry) for entry in env),
        "relation": relation,
        **{key: print_term(t) for key, t in terms.items()},
    }


def _prop_subject_reduction(env, cfg, rng, i):
    e = _gen_stepping(cfg, env, rng)

    def attempt(t: Term) -> Optional[dict]:
        t2 = step(env, t)
        if t2 is None:
            return None
        ty = infer(env, t)
        ty2 = infer(env, t2)
        if equiv(env, ty, ty2):
            return None
        return _witness(
            i, env, "the type is preserved by one reduction step",
            term=t, stepped=t2, type_before=ty, type_after=ty2,
        )

    return _verdict(e, attempt)


def _prop_type_preservation(env, cfg, rng, i):
    e = gen_term(cfg, env, None, rng)

    def attempt(t: Term) -> Optional[dict]:
        out = translate(env, t)
        try:
            t_check(out.env, out.term, out.type)
            return None
        except TypeCheckError as ex:
            return _witness(
                i, env,
                f"the translated term checks at the translated type ({ex.kind})",
                term=t, translated=out.term, translated_type=out.type,
            )

    return _verdict(e, attempt)


def _prop_compositionality(env, cfg, rng, i):
    positions = [j for j, entry in enumerate(env) if isinstance(entry, Assumption)]
    if not positions:
        raise GiveUp("no assumption to substitute for")
    rng.shuffle(positions)
    # some assumptions have no inhabitant in their own prefix (an abstract
    # type's element, say); fall through to the next position
    for j in positions:
        prefix = env[:j]
        try:
            e2 = gen_term(cfg, prefix, env[j].type, rng)
        except GiveUp:
            continue
        break
    else:
        raise GiveUp("no substitutable assumption")
    x = env[j].name
    e1 = gen_term(cfg, env, None, rng)

    def substituted_env() -> TypingEnv:
        out = list(prefix)
        for entry in env[j + 1:]:
            if isinstance(entry, Assumption):
                out.append(Assumption(entry.name, subst(entry.type, e2, x)))
            else:
                out.append(Definition(
                    entry.name,
                    subst(entry.term, e2, x),
                    subst(entry.type, e2, x),
                ))
        return tuple(out)

    env_sub = substituted_env()
    e2_t = translate(prefix, e2).term

    def attempt(t: Term) -> Optional[dict]:
        lhs = translate(env_sub, subst(t, e2, x)).term
        rhs = subst(translate(env, t).term, e2_t, x)
        if t_equiv(translate_env(env_sub), lhs, rhs):
            return None
        return _witness(
            i, env, "translation commutes with substitution",
            term=t, replacement=e2, substituted_then_translated=lhs,
            translated_then_substituted=rhs,
        )

    return _verdict(e1, attempt)


def _prop_reduction_preservation(env, cfg, rng, i):
    e = _gen_stepping(cfg, env, rng)
    env_t = translate_env(env)

    def attempt(t: Term) -> Optional[dict]:
        t2 = step(env, t)
        if t2 is None:
            return None
        before = translate(env, t).term
        after = translate(env, t2).term
        reduced = t_normalize(env_t, before, Fuel())
        if t_equiv(env_t, reduced, after):
            return None
        return _witness(
            i, env,
            "the translation of a term reduces to the translation of its reduct",
            term=t, stepped=t2, translated=before, translated_reduct=after,
        )

    return _verdict(e, attempt)


def _prop_coherence(env, cfg, rng, i):
    e = _gen_stepping(cfg, env, rng)
    steps = rng.randint(1, 3)
    eta = rng.random() < 0.3
    env_t = translate_env(env)

    def variant(t: Term) -> Optional[Term]:
        out = t
        for _ in range(steps):
            nxt = step(env, out)
            if nxt is None:
                break
            out = nxt
        if eta:
            ty = infer(env, out)
            if isinstance(ty, Pi):
                z = fresh(ty.name, env_names(env) | set(free_vars(out)))
                out = Lam(z, ty.domain, App(out, Var(z)))
        if out == t:
            return None
        return out

    def attempt(t: Term) -> Optional[dict]:
        other = variant(t)
        if other is None:
            return None
        if t_equiv(env_t, translate(env, t).term, translate(env, other).term):
            return None
        return _witness(
            i, env, "equivalent terms translate to equivalent terms",
            term=t, equivalent_variant=other,
        )

    return _verdict(e, attempt)


def _prop_model_type_preservation(env, cfg, rng, i):
    e = gen_term(cfg, env, None, rng)

    def attempt(t: Term) -> Optional[dict]:
        out = translate(env, t)
        denv = decompile_env(out.env)
        dterm = decompile(out.env, out.term)
        dty = out.type if isinstance(out.type, Box) else decompile(out.env, out.type)
        try:
            check(denv, dterm, dty)
            return None
        except TypeCheckError as ex:
            return _witness(
                i, env,
                f"the decompiled term checks at the decompiled type ({ex.kind})",
                term=t, decompiled=dterm,
            )

    return _verdict(e, attempt)


def _prop_model_coherence(env, cfg, rng, i):
    e = _gen_stepping(cfg, env, rng)

    def attempt(t: Term) -> Optional[dict]:
        out = translate(env, t)
        t0 = out.term
        t1 = t_step(out.env, t0)
        if t1 is None:
            return None
        denv = decompile_env(out.env)
        d0 = decompile(out.env, t0)
        d1 = decompile(out.env, t1)
        # the reduction direction: the decompilation of the redex reaches
        # (up to equivalence) the decompilation of the reduct
        if not equiv(denv, normalize(denv, d0, Fuel()), d1):
            return _witness(
                i, env,
                "decompilation preserves reduction",
                term=t, target=t0, target_stepped=t1,
                decompiled=d0, decompiled_reduct=d1,
            )
        if not equiv(denv, d0, d1):
            return _witness(
                i, env,
                "equivalent target terms decompile to equivalent terms",
                term=t, target=t0, target_stepped=t1,
            )
        return None

    return _verdict(e, attempt)


def _prop_round_trip(env, cfg, rng, i):
    e = gen_term(cfg, env, None, rng)

    def attempt(t: Term) -> Optional[dict]:
        out = translate(env, t)
        back = decompile(out.env, out.term)
        if equiv(env, t, back):
            return None
        return _witness(
            i, env, "a term is equivalent to its translation decompiled",
            term=t, round_tripped=back,
        )

    return _verdict(e, attempt)


def _prop_separate_compilation(env, cfg, rng, i):
    if i % 5 == 0:
        env = ()  # whole-program special case
    closing: dict[str, Term] = {}
    subst_map: dict[str, Term] = {}
    for entry in env:
        if isinstance(entry, Assumption):
            closed_ty = subst_parallel(entry.type, closing)
            image = gen_term(cfg, (), closed_ty, rng)
            subst_map[entry.name] = image
            closing[entry.name] = image
        else:
            closing[entry.name] = subst_parallel(entry.term, closing)
    e = gen_term(cfg, env, Bool(), rng)

    def attempt(t: Term) -> Optional[dict]:
        report = separate_compile_check(env, t, subst_map)
        if report.related:
            return None
        return _witness(
            i, env, "both pipelines observe the same Bool value",
            term=t, source_value=report.source_value,
            target_value=report.target_value,
        )

    return _verdict(e, attempt)


_PROPERTY_IMPLS = {
    "subject-reduction": _prop_subject_reduction,
    "compositionality": _prop_compositionality,
    "reduction-preservation": _prop_reduction_preservation,
    "coherence": _prop_coherence,
    "type-preservation": _prop_type_preservation,
    "model-type-preservation": _prop_model_type_preservation,
    "model-coherence": _prop_model_coherence,
    "round-trip": _prop_round_trip,
    "separate-compilation": _prop_separate_compilation,
}


def run_property(name: str, cfg: GenConfig) -> PropertyReport:
    """Execute a named property over cfg.iterations generated instances."""
    if name not in _PROPERTY_IMPLS:
        raise ValueError(
            f"unknown property {name!r}; expected one of {', '.join(PROPERTY_NAMES)}"
        )
    base_env = PROFILES[cfg.env_profile]
    impl = _PROPERTY_IMPLS[name]
    failures: list[dict] = []
    completed = 0
    for i in range(cfg.iterations):
        # string seeding is stable across runs and processes
        rng = random.Random(f"{cfg.seed}:{name}:{i}")
        try:
            witness = impl(base_env, cfg, rng, i)
        except GiveUp:
            continue
        completed += 1
        if witness is not None:
            failures.append(witness)
    return PropertyReport(name, cfg.iterations, tuple(failures), completed)
