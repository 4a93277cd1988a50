"""Render a :class:`Spec` back to source text that parses to the same AST."""
from __future__ import annotations

from .ast import Arg, BnExpr, Constructor, Join, Spec


def _arg(a: Arg) -> str:
    return f"{a.label}::{a.kind}" if a.label else str(a.kind)


def _ctor(c: Constructor) -> str:
    parts = [c.name] + [_arg(a) for a in c.args] + [str(cl) for cl in c.clauses]
    return " ".join(parts)


def _expr(e: BnExpr) -> str:
    if isinstance(e, Join):
        right = f"({_expr(e.right)})" if isinstance(e.right, Join) else _expr(e.right)
        return f"{_expr(e.left)} {e.op} {right}"
    return str(e)


def pretty_print(spec: Spec) -> str:
    lines = [f"atom_decl {' '.join(spec.atom_sorts)}", ""]
    for i, t in enumerate(spec.type_decls):
        lines.append(f"{'nominal_datatype' if i == 0 else 'and'} {t.name} =")
        for j, c in enumerate(t.constructors):
            lines.append(f"  {'|' if j else ' '} {_ctor(c)}")
    sigs = [b for b in spec.bn_defs if b.range]
    clauses = [c for b in spec.bn_defs for c in b.clauses]
    if sigs:
        lines.append("binder")
        lines.append("\nand\n".join(f"  {b.name} :: {b.domain} => atom {b.range}" for b in sigs))
        lines.append("where")
        for j, c in enumerate(clauses):
            params = " ".join((c.ctor,) + c.params)
            lines.append(f"  {'|' if j else ' '} {c.bn}({params}) = {_expr(c.rhs)}")
    return "\n".join(lines) + "\n"
