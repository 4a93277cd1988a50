"""Specification language: AST, parsers, validation, completion and printing."""
from .ast import (
    Arg, AtomListOf, AtomSetOf, AtomSort, BindingClause, BnClause, BnDef, Call, Constructor,
    Deep, Diagnostic, Empty, Join, Location, Prim, RecType, Shallow, Single, Spec, SpecError,
    TypeDecl,
)
from .parser import parse_perm_pairs, parse_spec, parse_term
from .printer import pretty_print
from .validate import complete, has_errors, validate

__all__ = [
    "Arg", "AtomListOf", "AtomSetOf", "AtomSort", "BindingClause", "BnClause", "BnDef", "Call",
    "Constructor", "Deep", "Diagnostic", "Empty", "Join", "Location", "Prim", "RecType",
    "Shallow", "Single", "Spec", "SpecError", "TypeDecl", "complete", "has_errors",
    "parse_perm_pairs", "parse_spec", "parse_term", "pretty_print", "validate",
]
