"""S-expression surface syntax: parser, printer, and source files.

One grammar serves both languages; the ``language`` argument ("cc" or
"cccc") controls which constructs are admitted.  The source language
rejects the target-only forms (code, closures, unit) and the target
language rejects lambda.

A file is a sequence of declarations::

    (assume name type)
    (def name term type)
    (main term)            ; at most one

which elaborate left-to-right into a typing environment plus an optional
main term.  Line comments start with ``;``.

The top universe has no surface form.  The printer renders it as ``[]``
so inferred classifiers can appear in diagnostics, but the parser rejects
it, keeping it out of user terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .syntax import (
    App, Assumption, Bool, Box, Clo, CodeTy, CodeVal, Definition, FalseVal,
    Fst, If, Lam, Let, Pair, Pi, Sigma, Snd, Star, Term, TrueVal, TypingEnv,
    UnitTy, UnitVal, Var,
)


class ParseError(Exception):
    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"{line}:{column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


@dataclass(frozen=True, slots=True)
class DefDecl:
    name: str
    term: Term
    type: Term


@dataclass(frozen=True, slots=True)
class AssumeDecl:
    name: str
    type: Term


@dataclass(frozen=True, slots=True)
class MainDecl:
    term: Term


Declaration = Union[DefDecl, AssumeDecl, MainDecl]


@dataclass(frozen=True, slots=True)
class SourceFile:
    declarations: tuple[Declaration, ...]
    language: str

    def environment(self) -> TypingEnv:
        out: list = []
        for decl in self.declarations:
            if isinstance(decl, AssumeDecl):
                out.append(Assumption(decl.name, decl.type))
            elif isinstance(decl, DefDecl):
                out.append(Definition(decl.name, decl.term, decl.type))
        return tuple(out)

    def main_term(self) -> Optional[Term]:
        for decl in self.declarations:
            if isinstance(decl, MainDecl):
                return decl.term
        return None


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True, slots=True)
class _Token:
    text: str  # "(", ")", or an atom
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "()":
            tokens.append(_Token(ch, line, col))
            col += 1
            i += 1
        else:
            start = i
            start_col = col
            while i < n and text[i] not in " \t\r\n();":
                i += 1
                col += 1
            tokens.append(_Token(text[start:i], line, start_col))
    return tokens


class _Tokens:
    def __init__(self, tokens: list[_Token], text_len_line: tuple[int, int]):
        self.tokens = tokens
        self.pos = 0
        self.end_line, self.end_col = text_len_line

    def peek(self) -> Optional[_Token]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def next(self, expected: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.end_line, self.end_col, expected)
        self.pos += 1
        return tok

    def expect(self, text: str, expected: str) -> _Token:
        tok = self.next(expected)
        if tok.text != text:
            raise ParseError(tok.line, tok.column, expected)
        return tok


def _end_position(text: str) -> tuple[int, int]:
    line = text.count("\n") + 1
    last = text.rfind("\n")
    return line, len(text) - last if last >= 0 else len(text) + 1


RESERVED = frozenset({
    "lam", "Pi", "app", "Sigma", "pair", "fst", "snd", "let", "if",
    "code", "clo", "Code", "def", "assume", "main", "bind",
    "Bool", "true", "false", "unit", "Unit", "*", "[]",
})

_FORM_HEADS = frozenset({
    "lam", "Pi", "app", "Sigma", "pair", "fst", "snd", "let", "if",
    "code", "clo", "Code",
})


def _is_identifier(text: str) -> bool:
    if not text or text in RESERVED:
        return False
    if not (text[0].isalpha() or text[0] == "_"):
        return False
    return all(c.isalnum() or c in "_'" for c in text[1:])


def _identifier(tok: _Token) -> str:
    if not _is_identifier(tok.text):
        raise ParseError(tok.line, tok.column, "an identifier")
    return tok.text


# ---------------------------------------------------------------------------
# Parser


def parse(text: str, language: str) -> SourceFile:
    """Parse a declaration file in the given language ("cc" or "cccc")."""
    _check_language_arg(language)
    ts = _Tokens(_tokenize(text), _end_position(text))
    decls: list[Declaration] = []
    names: set[str] = set()
    saw_main = False
    while ts.peek() is not None:
        ts.expect("(", "a declaration")
        head = ts.next("def, assume, or main")
        if head.text == "def":
            name_tok = ts.next("a name")
            name = _identifier(name_tok)
            term = _parse_term(ts, language)
            ty = _parse_term(ts, language)
            decl: Declaration = DefDecl(name, term, ty)
        elif head.text == "assume":
            name_tok = ts.next("a name")
            name = _identifier(name_tok)
            ty = _parse_term(ts, language)
            decl = AssumeDecl(name, ty)
        elif head.text == "main":
            if saw_main:
                raise ParseError(head.line, head.column, "at most one main declaration")
            saw_main = True
            decl = MainDecl(_parse_term(ts, language))
        else:
            raise ParseError(head.line, head.column, "def, assume, or main")
        if not isinstance(decl, MainDecl):
            if decl.name in names:
                raise ParseError(
                    name_tok.line, name_tok.column,
                    f"a name not already declared ({decl.name} is taken)",
                )
            names.add(decl.name)
        ts.expect(")", "a closing parenthesis")
        decls.append(decl)
    return SourceFile(tuple(decls), language)


def parse_term(text: str, language: str) -> Term:
    """Parse a single term; trailing input is an error."""
    _check_language_arg(language)
    ts = _Tokens(_tokenize(text), _end_position(text))
    term = _parse_term(ts, language)
    tok = ts.peek()
    if tok is not None:
        raise ParseError(tok.line, tok.column, "end of input")
    return term


def parse_subst(text: str, language: str) -> dict[str, Term]:
    """Parse a substitution file: a sequence of ``(bind name term)`` forms."""
    _check_language_arg(language)
    ts = _Tokens(_tokenize(text), _end_position(text))
    out: dict[str, Term] = {}
    while ts.peek() is not None:
        ts.expect("(", "a (bind name term) form")
        ts.expect("bind", "bind")
        name_tok = ts.next("a name")
        name = _identifier(name_tok)
        if name in out:
            raise ParseError(
                name_tok.line, name_tok.column,
                f"a name not already bound ({name} is repeated)",
            )
        out[name] = _parse_term(ts, language)
        ts.expect(")", "a closing parenthesis")
    return out


def _check_language_arg(language: str) -> None:
    if language not in ("cc", "cccc"):
        raise ValueError(f"language must be 'cc' or 'cccc', not {language!r}")


def _reject(tok: _Token, language: str, what: str) -> None:
    wanted = "source" if language == "cc" else "target"
    raise ParseError(
        tok.line, tok.column, f"a {wanted}-language term ({what} is not one)"
    )


def _parse_term(ts: _Tokens, language: str) -> Term:
    tok = ts.next("a term")
    if tok.text != "(":
        return _parse_atom(tok, language)
    head = ts.next("a term form")
    if head.text == "(" or head.text == ")":
        raise ParseError(head.line, head.column, "a term form")
    term = _parse_form(ts, head, language)
    ts.expect(")", "a closing parenthesis")
    return term


def _parse_atom(tok: _Token, language: str) -> Term:
    match tok.text:
        case "*":
            return Star()
        case "Bool":
            return Bool()
        case "true":
            return TrueVal()
        case "false":
            return FalseVal()
        case "unit":
            if language == "cc":
                _reject(tok, language, "unit")
            return UnitVal()
        case "Unit":
            if language == "cc":
                _reject(tok, language, "Unit")
            return UnitTy()
        case ")":
            raise ParseError(tok.line, tok.column, "a term")
        case "[]":
            raise ParseError(
                tok.line, tok.column,
                "a term (the top universe has no surface syntax)",
            )
    return Var(_identifier(tok))


def _parse_binder(ts: _Tokens, language: str) -> tuple[str, Term]:
    """A ``(name type)`` group."""
    ts.expect("(", "a (name type) binder")
    name = _identifier(ts.next("a name"))
    ty = _parse_term(ts, language)
    ts.expect(")", "a closing parenthesis")
    return name, ty


def _parse_form(ts: _Tokens, head: _Token, language: str) -> Term:
    match head.text:
        case "lam":
            if language == "cccc":
                _reject(head, language, "lam")
            x, a = _parse_binder(ts, language)
            return Lam(x, a, _parse_term(ts, language))
        case "Pi":
            x, a = _parse_binder(ts, language)
            return Pi(x, a, _parse_term(ts, language))
        case "Sigma":
            x, a = _parse_binder(ts, language)
            return Sigma(x, a, _parse_term(ts, language))
        case "app":
            return App(_parse_term(ts, language), _parse_term(ts, language))
        case "pair":
            first = _parse_term(ts, language)
            second = _parse_term(ts, language)
            return Pair(first, second, _parse_term(ts, language))
        case "fst":
            return Fst(_parse_term(ts, language))
        case "snd":
            return Snd(_parse_term(ts, language))
        case "let":
            # (let (x bound) body) or (let (x bound annot) body)
            ts.expect("(", "a (name term) or (name term type) group")
            x = _identifier(ts.next("a name"))
            bound = _parse_term(ts, language)
            nxt = ts.peek()
            annot: Optional[Term] = None
            if nxt is not None and nxt.text != ")":
                annot = _parse_term(ts, language)
            ts.expect(")", "a closing parenthesis")
            return Let(x, bound, annot, _parse_term(ts, language))
        case "if":
            scrut = _parse_term(ts, language)
            then_b = _parse_term(ts, language)
            return If(scrut, then_b, _parse_term(ts, language))
        case "code":
            if language == "cc":
                _reject(head, language, "code")
            n, x = _parse_double_binder(ts, language)
            return CodeVal(*n, *x, _parse_term(ts, language))
        case "Code":
            if language == "cc":
                _reject(head, language, "Code")
            n, x = _parse_double_binder(ts, language)
            return CodeTy(*n, *x, _parse_term(ts, language))
        case "clo":
            if language == "cc":
                _reject(head, language, "clo")
            return Clo(_parse_term(ts, language), _parse_term(ts, language))
    if _is_identifier(head.text):
        raise ParseError(
            head.line, head.column,
            "a term form (bare application is written (app f x))",
        )
    raise ParseError(head.line, head.column, "a term form")


def _parse_double_binder(
    ts: _Tokens, language: str
) -> tuple[tuple[str, Term], tuple[str, Term]]:
    """A ``((n A') (x A))`` group."""
    ts.expect("(", "a ((name type) (name type)) group")
    env_binder = _parse_binder(ts, language)
    arg_binder = _parse_binder(ts, language)
    ts.expect(")", "a closing parenthesis")
    return env_binder, arg_binder


# ---------------------------------------------------------------------------
# Printer


def print_term(e: Term) -> str:
    """Single-line rendering; parsing it back yields an equal term."""
    match e:
        case Var(name):
            return name
        case Star():
            return "*"
        case Box():
            return "[]"
        case Bool():
            return "Bool"
        case TrueVal():
            return "true"
        case FalseVal():
            return "false"
        case UnitTy():
            return "Unit"
        case UnitVal():
            return "unit"
        case Lam(x, annot, body):
            return f"(lam ({x} {print_term(annot)}) {print_term(body)})"
        case Pi(x, dom, cod):
            return f"(Pi ({x} {print_term(dom)}) {print_term(cod)})"
        case Sigma(x, dom, cod):
            return f"(Sigma ({x} {print_term(dom)}) {print_term(cod)})"
        case App(fn, arg):
            return f"(app {print_term(fn)} {print_term(arg)})"
        case Pair(first, second, annot):
            return f"(pair {print_term(first)} {print_term(second)} {print_term(annot)})"
        case Fst(arg):
            return f"(fst {print_term(arg)})"
        case Snd(arg):
            return f"(snd {print_term(arg)})"
        case Let(x, bound, annot, body):
            if annot is None:
                return f"(let ({x} {print_term(bound)}) {print_term(body)})"
            return f"(let ({x} {print_term(bound)} {print_term(annot)}) {print_term(body)})"
        case If(scrut, then_b, else_b):
            return f"(if {print_term(scrut)} {print_term(then_b)} {print_term(else_b)})"
        case CodeVal(n, env_annot, x, arg_annot, body):
            return (
                f"(code (({n} {print_term(env_annot)}) ({x} {print_term(arg_annot)})) "
                f"{print_term(body)})"
            )
        case CodeTy(n, env_annot, x, arg_annot, result):
            return (
                f"(Code (({n} {print_term(env_annot)}) ({x} {print_term(arg_annot)})) "
                f"{print_term(result)})"
            )
        case Clo(code, envt):
            return f"(clo {print_term(code)} {print_term(envt)})"
    raise AssertionError(f"cannot print {type(e).__name__}")


def print_env_entry(entry) -> str:
    if isinstance(entry, Assumption):
        return f"(assume {entry.name} {print_term(entry.type)})"
    annot = "" if entry.type is None else f" {print_term(entry.type)}"
    return f"(def {entry.name} {print_term(entry.term)}{annot})"


def format_file(sf: SourceFile) -> str:
    """One declaration per line, parseable back to an equal file."""
    lines = []
    for decl in sf.declarations:
        if isinstance(decl, DefDecl):
            lines.append(
                f"(def {decl.name} {print_term(decl.term)} {print_term(decl.type)})"
            )
        elif isinstance(decl, AssumeDecl):
            lines.append(f"(assume {decl.name} {print_term(decl.type)})")
        else:
            lines.append(f"(main {print_term(decl.term)})")
    return "\n".join(lines) + ("\n" if lines else "")
