"""Type-preserving closure conversion for a dependently typed calculus.

The source language is a Calculus of Constructions with dependent pairs
and booleans; the target replaces functions with closed code and explicit
closures.  The package provides both type checkers, the translation
between the languages, a decompiler used as a semantic oracle, linking
with a separate-compilation check, a deterministic property-test harness
for the metatheory, and an s-expression CLI.
"""

from .compiler import (
    ArityMismatch, CompileOutput, dfv, encode_ntuple, expand_match,
    sigma_chain, translate, translate_env,
)
from .core import (
    DEFAULT_FUEL, Fuel, FuelExhausted, OpenCode, TypeCheckError,
    UnboundVariable, check, check_env, equiv, infer, normalize, step,
    t_check, t_check_env, t_equiv, t_infer, t_normalize, t_step, t_whnf,
    whnf,
)
from .generate import (
    PROFILES, PROPERTY_NAMES, GenConfig, GiveUp, PropertyReport, gen_term,
    run_property, shrink,
)
from .linking import (
    ClosingSubst, NonGroundType, ObservationReport, SubstError, check_subst,
    closing_map, link, separate_compile_check,
)
from .model import church_unit_type, church_unit_value, decompile, decompile_env
from .sexpr import (
    AssumeDecl, DefDecl, MainDecl, ParseError, SourceFile, format_file,
    parse, parse_subst, parse_term, print_term,
)
from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, EnvEntry,
    FalseVal, Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, SourceTerm, Star,
    TargetTerm, Telescope, Term, TrueVal, TypingEnv, UnitTy, UnitVal,
    Universe, Var, alpha_eq, env_names, free_vars, fresh, lookup, subst,
    subst_parallel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
