"""Recursive-descent parsers for spec files and terms.

Spec grammar::

    spec      := atomdecl* datatypes binders?
    atomdecl  := "atom_decl" IDENT+
    datatypes := "nominal_datatype" tydecl ("and" tydecl)*
    tydecl    := IDENT "=" ctor ("|" ctor)*
    ctor      := IDENT arg* clause*
    arg       := (IDENT "::")? kind
    kind      := IDENT | "(" IDENT "set" ")" | "(" IDENT "list" ")"
    clause    := ","? "binds" mode? (binder+ | "{}" | "∅") "in" IDENT+
    mode      := "(set)" | "(set+)"
    binder    := IDENT | IDENT "(" IDENT ")"
    binders   := "binder" bnsig ("and" bnsig)* "where" bnclause ("|" bnclause)*
    bnsig     := IDENT "::" IDENT "=>" ("atom set" | "atom list")
    bnclause  := IDENT "(" IDENT IDENT* ")" "=" bnexpr
    bnexpr    := item (("@" | "∪" | "union") item)*
    item      := "{}" | "[]" | "[atom" IDENT "]" | "{atom" IDENT "}"
               | "atoms" IDENT | IDENT "(" IDENT ")" | "(" bnexpr ")"

``#`` starts a line comment. ``fset`` is accepted for ``set`` and ``⇒`` for ``=>``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from ..abstraction import BindingMode
from ..nominal import Atom
from ..terms import Term
from .ast import (
    PRIMITIVES, Arg, AtomListOf, AtomSetOf, AtomSort, BindingClause, BnClause, BnDef,
    Call, Constructor, Deep, Empty, Join, Location, Prim, RecType, Shallow, Single, Spec,
    SpecError, TypeDecl, error,
)

KEYWORDS = {"atom_decl", "nominal_datatype", "and", "binds", "in", "binder", "where"}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<str>"(?:[^"\\\n]|\\.)*")
  | (?P<int>-?\d+(?![\w.]))
  | (?P<ident>[A-Za-z_][\w']*(?:\.[A-Za-z_][\w']*)?)
  | (?P<sym>::|=>|⇒|[=|()\[\]{}@∪∅,+])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "sym" | "str" | "int" | "eof"
    text: str
    loc: Location


def tokenize(text: str) -> list[Token]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        loc = Location(line, pos - line_start + 1)
        if m is None:
            raise SpecError([error("SyntaxError", f"unexpected character {text[pos]!r}", loc)])
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            toks.append(Token(kind, "=>" if chunk == "⇒" else chunk, loc))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + chunk.rindex("\n") + 1
        pos = m.end()
    eof_loc = Location(line, pos - line_start + 1)
    toks.append(Token("eof", "", eof_loc))
    return toks


class _Stream:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "ident") and self.tok.text == text

    def at_ident(self) -> bool:
        return self.tok.kind == "ident" and self.tok.text not in KEYWORDS

    def fail(self, what: str):
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise SpecError([error("SyntaxError", f"expected {what}, found {found}", tok.loc)])

    def next(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.next()

    def ident(self, what: str = "identifier") -> Token:
        if not self.at_ident() or "." in self.tok.text:
            self.fail(what)
        return self.next()


class _SpecParser:
    def __init__(self, text: str):
        self.s = _Stream(text)
        self.sorts: list[str] = []

    def parse(self) -> Spec:
        s = self.s
        if s.tok.kind == "eof":
            s.fail("'atom_decl' or 'nominal_datatype'")
        declared = False
        while s.at("atom_decl"):
            declared = True
            s.next()
            if not s.at_ident():
                s.fail("atom sort name")
            while s.at_ident():
                self.sorts.append(s.ident("atom sort name").text)
        if not declared:
            self.sorts = ["name"]
        s.expect("nominal_datatype")
        types = [self.tydecl()]
        while s.at("and"):
            s.next()
            types.append(self.tydecl())
        bns = self.binders() if s.at("binder") else []
        if s.tok.kind != "eof":
            s.fail("'and', 'binder' or end of input")
        return Spec(tuple(self.sorts), tuple(types), tuple(bns))

    def tydecl(self) -> TypeDecl:
        s = self.s
        name = s.ident("type name")
        s.expect("=")
        ctors = [self.ctor()]
        while s.at("|"):
            s.next()
            ctors.append(self.ctor())
        return TypeDecl(name.text, tuple(ctors), name.loc)

    def ctor(self) -> Constructor:
        s = self.s
        name = s.ident("constructor name")
        args = []
        while s.at_ident() or s.at("("):
            args.append(self.arg())
        clauses = []
        while s.at("binds") or (s.at(",") and s.peek().text == "binds"):
            if s.at(","):
                s.next()
            clauses.append(self.clause())
        return Constructor(name.text, tuple(args), tuple(clauses), name.loc)

    def arg(self) -> Arg:
        s = self.s
        label = None
        if s.at_ident() and s.peek().text == "::":
            label = s.ident("label").text
            s.next()
        return Arg(label, self.kind())

    def kind(self):
        s = self.s
        if s.at("("):
            s.next()
            base = s.ident("atom sort")
            cont = s.ident("'set' or 'list'")
            if cont.text not in ("set", "fset", "list"):
                raise SpecError([error("SyntaxError", f"expected 'set' or 'list', found {cont.text!r}", cont.loc)])
            s.expect(")")
            if base.text not in self.sorts:
                raise SpecError([error(
                    "NestedType", f"({base.text} {cont.text}): only atom sorts may be collected in sets or lists",
                    base.loc)])
            return AtomListOf(base.text) if cont.text == "list" else AtomSetOf(base.text)
        name = s.ident("argument type").text
        if name in self.sorts:
            return AtomSort(name)
        if name in PRIMITIVES:
            return Prim(name)
        return RecType(name)

    def clause(self) -> BindingClause:
        s = self.s
        kw = s.expect("binds")
        mode = BindingMode.LIST
        if s.at("("):
            s.next()
            s.expect("set")
            if s.at("+"):
                s.next()
                mode = BindingMode.SET_PLUS
            else:
                mode = BindingMode.SET
            s.expect(")")
        binders = []
        if s.at("∅"):
            s.next()
            return self._bodies(kw, mode, binders)
        if s.at("{") and s.peek().text == "}":
            s.next()
            s.next()
            return self._bodies(kw, mode, binders)
        while s.at_ident():
            label = s.ident("binder")
            if s.at("("):
                s.next()
                arg = s.ident("binder argument label")
                s.expect(")")
                binders.append(Deep(label.text, arg.text))
            else:
                binders.append(Shallow(label.text))
        if not binders:
            s.fail("binder")
        return self._bodies(kw, mode, binders)

    def _bodies(self, kw, mode, binders) -> BindingClause:
        s = self.s
        s.expect("in")
        bodies = [s.ident("body label").text]
        while s.at_ident():
            bodies.append(s.ident().text)
        return BindingClause(mode, tuple(binders), tuple(bodies), kw.loc)

    def binders(self) -> list[BnDef]:
        s = self.s
        s.expect("binder")
        sigs = [self.bnsig()]
        while s.at("and"):
            s.next()
            sigs.append(self.bnsig())
        s.expect("where")
        clauses = [self.bnclause()]
        while s.at("|"):
            s.next()
            clauses.append(self.bnclause())
        return [BnDef(name, dom, rng, tuple(c for c in clauses if c.bn == name), loc)
                for name, dom, rng, loc in sigs] + self._orphans(sigs, clauses)

    @staticmethod
    def _orphans(sigs, clauses) -> list[BnDef]:
        # clauses for undeclared bns are kept so validation can report them
        known = {name for name, *_ in sigs}
        missing = sorted({c.bn for c in clauses if c.bn not in known})
        return [BnDef(name, "", "", tuple(c for c in clauses if c.bn == name),
                      next(c.loc for c in clauses if c.bn == name)) for name in missing]

    def bnsig(self):
        s = self.s
        name = s.ident("binding function name")
        s.expect("::")
        dom = s.ident("domain type").text
        s.expect("=>")
        s.expect("atom")
        rng = s.ident("'set' or 'list'")
        if rng.text not in ("set", "list"):
            raise SpecError([error("SyntaxError", f"expected 'set' or 'list', found {rng.text!r}", rng.loc)])
        return name.text, dom, rng.text, name.loc

    def bnclause(self) -> BnClause:
        s = self.s
        name = s.ident("binding function name")
        s.expect("(")
        ctor = s.ident("constructor name").text
        params = []
        while s.at_ident():
            params.append(s.ident().text)
        s.expect(")")
        s.expect("=")
        return BnClause(name.text, ctor, tuple(params), self.bnexpr(), name.loc)

    def bnexpr(self):
        s = self.s
        expr = self.bnitem()
        while s.at("@") or s.at("∪") or s.at("union"):
            op = "@" if s.next().text == "@" else "∪"
            expr = Join(expr, self.bnitem(), op)
        return expr

    def bnitem(self):
        s = self.s
        if s.at("{") or s.at("["):
            close = "}" if s.tok.text == "{" else "]"
            form = "set" if close == "}" else "list"
            s.next()
            if s.at(close):
                s.next()
                return Empty(form)
            s.expect("atom")
            label = s.ident("label").text
            s.expect(close)
            return Single(label, form)
        if s.at("atoms"):
            s.next()
            return Single(s.ident("label").text, "atoms")
        if s.at("("):
            s.next()
            expr = self.bnexpr()
            s.expect(")")
            return expr
        name = s.ident("binding function call")
        s.expect("(")
        label = s.ident("label").text
        s.expect(")")
        return Call(name.text, label)


def parse_spec(text: str) -> Spec:
    """Parse spec source text; raises :class:`SpecError` on syntax errors."""
    return _SpecParser(text).parse()


# terms

class _TermParser:
    def __init__(self, spec: Spec, text: str):
        self.spec = spec
        self.s = _Stream(text)

    def fail(self, code: str, message: str, loc: Location):
        raise SpecError([error(code, message, loc)])

    def parse(self, ty: str) -> Term:
        if not self.spec.has_type(ty):
            self.fail("UnknownType", f"unknown type {ty!r}", self.s.tok.loc)
        t = self.term(ty)
        if self.s.tok.kind != "eof":
            self.s.fail("end of term")
        return t

    def term(self, ty: str) -> Term:
        s = self.s
        if s.tok.kind == "eof":
            s.fail("term")
        loc = s.tok.loc
        wrapped = s.at("(")
        if wrapped:
            s.next()
        name = s.ident("constructor name")
        if not self.spec.has_ctor(name.text):
            self.fail("UnknownConstructor", f"unknown constructor {name.text!r}", name.loc)
        owner = self.spec.type_of_ctor(name.text)
        if owner != ty:
            self.fail("SortError", f"{name.text} builds a {owner}, expected {ty}", name.loc)
        ctor = self.spec.ctor(name.text)
        args = []
        if wrapped:
            while not s.at(")"):
                if s.tok.kind == "eof":
                    s.fail("')'")
                if len(args) == len(ctor.args):
                    self.fail("ArityError", f"{ctor.name} takes {len(ctor.args)} arguments", s.tok.loc)
                args.append(self.value(ctor.args[len(args)].kind))
            s.next()
        if len(args) != len(ctor.args):
            self.fail("ArityError",
                      f"{ctor.name} takes {len(ctor.args)} arguments, got {len(args)}", loc)
        return Term(ctor.name, args)

    def atom(self, sort: str) -> Atom:
        tok = self.s.tok
        if tok.kind != "ident" or tok.text in KEYWORDS:
            self.s.fail(f"atom of sort {sort}")
        self.s.next()
        if "." in tok.text:
            a_sort, _, name = tok.text.partition(".")
        elif self.spec.default_sort is not None:
            a_sort, name = self.spec.default_sort, tok.text
        else:
            self.fail("SortError", f"atom {tok.text!r} needs a sort prefix", tok.loc)
        if a_sort != sort:
            self.fail("SortError", f"atom {tok.text} is not of sort {sort}", tok.loc)
        return Atom(a_sort, name)

    def atoms(self, sort: str, close: str) -> list[Atom]:
        s = self.s
        s.next()
        out = []
        while not s.at(close):
            out.append(self.atom(sort))
            if s.at(","):
                s.next()
        s.next()
        return out

    def value(self, kind):
        s = self.s
        tok = s.tok
        if isinstance(kind, RecType):
            return self.term(kind.name)
        if isinstance(kind, Prim):
            if kind.name == "string" and tok.kind == "str":
                s.next()
                return json.loads(tok.text)
            if kind.name == "integer" and tok.kind == "int":
                s.next()
                return int(tok.text)
            self.fail("SortError", f"expected a {kind.name} literal", tok.loc)
        if isinstance(kind, AtomSort):
            return self.atom(kind.sort)
        # a bare atom stands for the singleton collection
        if isinstance(kind, AtomSetOf):
            if s.at("{"):
                return frozenset(self.atoms(kind.sort, "}"))
            if tok.kind == "ident":
                return frozenset((self.atom(kind.sort),))
            self.fail("SortError", f"expected a set of {kind.sort} atoms", tok.loc)
        if isinstance(kind, AtomListOf):
            if s.at("["):
                return tuple(self.atoms(kind.sort, "]"))
            if tok.kind == "ident":
                return (self.atom(kind.sort),)
            self.fail("SortError", f"expected a list of {kind.sort} atoms", tok.loc)
        raise AssertionError(kind)


def parse_term(spec: Spec, ty: str, text: str) -> Term:
    """Parse a well-sorted term of type ``ty``; raises :class:`SpecError`."""
    return _TermParser(spec, text).parse(ty)


def parse_perm_pairs(spec: Spec, text: str) -> list[tuple[Atom, Atom]]:
    """Parse ``(a b)(c d)...`` into atom pairs."""
    s = _Stream(text)
    pairs = []
    while s.tok.kind != "eof":
        s.expect("(")
        pair = []
        for _ in range(2):
            tok = s.tok
            if tok.kind != "ident":
                s.fail("atom")
            s.next()
            if "." in tok.text:
                sort, _, name = tok.text.partition(".")
            elif spec.default_sort is not None:
                sort, name = spec.default_sort, tok.text
            else:
                raise SpecError([error("SortError", f"atom {tok.text!r} needs a sort prefix", tok.loc)])
            if sort not in spec.atom_sorts:
                raise SpecError([error("SortError", f"unknown atom sort {sort!r}", tok.loc)])
            pair.append(Atom(sort, name))
        s.expect(")")
        if pair[0].sort != pair[1].sort:
            raise SpecError([error("SortError", f"cannot swap {pair[0]} and {pair[1]}", s.tok.loc)])
        pairs.append((pair[0], pair[1]))
    return pairs
