"""``nombind``: check specs and evaluate terms from the shell.

Every command prints one JSON object ``{ok, command, data, diagnostics}`` on
stdout and human-readable diagnostics on stderr. Exit status is 0 on success,
1 for validation or evaluation failures, 2 for I/O or usage problems.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from .abstraction import CapExceeded
from .nominal import Atom, swaps
from .semantics import (
    DEFAULT_CAP, EQ_ALPHA, EQ_SYNTACTIC, AlphaContext, alpha_ty, eval_bn, eval_fa_ty,
    permute_bn, permute_term, supp_oracle,
)
from .speclang import Diagnostic, Spec, SpecError, parse_perm_pairs, parse_spec, parse_term, validate
from .speclang.ast import error
from .terms import format_atom, format_term

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CliResult:
    command: str
    data: Any = None
    diagnostics: list[Diagnostic] = field(default_factory=list)
    exit_code: int | None = None

    @property
    def ok(self) -> bool:
        return not any(d.is_error for d in self.diagnostics)

    @property
    def code(self) -> int:
        if self.exit_code is not None:
            return self.exit_code
        return EXIT_OK if self.ok else EXIT_FAIL

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "command": self.command,
            "data": self.data,
            "diagnostics": [d.to_json() for d in sorted(self.diagnostics, key=lambda d: d.location)],
        }


class _Abort(Exception):
    def __init__(self, diagnostics, exit_code=EXIT_FAIL):
        self.diagnostics = list(diagnostics)
        self.exit_code = exit_code


def _cap() -> int:
    raw = os.environ.get("NOMBIND_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise _Abort([error("Usage", f"NOMBIND_CAP must be a positive integer, got {raw!r}")], EXIT_USAGE)
    return cap


def _load(path: str) -> Spec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Abort([error("IOError", f"{path}: {exc.strerror or exc}")], EXIT_USAGE) from None
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise _Abort(exc.diagnostics) from None


def _context(path: str) -> tuple[AlphaContext, list[Diagnostic]]:
    spec = _load(path)
    diags = validate(spec)
    if any(d.is_error for d in diags):
        raise _Abort(diags)
    return AlphaContext(spec, cap=_cap()), diags


def _term(ctx: AlphaContext, ty: str, text: str):
    try:
        return parse_term(ctx.spec, ty, text)
    except SpecError as exc:
        raise _Abort(exc.diagnostics) from None


def _atom(ctx: AlphaContext, a: Atom) -> str:
    return format_atom(a, ctx.spec.default_sort)


def _atoms(ctx: AlphaContext, xs) -> list[str]:
    if isinstance(xs, tuple):
        return [_atom(ctx, a) for a in xs]
    return [_atom(ctx, a) for a in sorted(xs)]


def _summary(spec: Spec) -> dict:
    return {
        "sorts": list(spec.atom_sorts),
        "types": [
            {"name": t.name, "constructors": [
                {"name": c.name,
                 "args": [{"label": c.ref(i), "kind": str(a.kind)} for i, a in enumerate(c.args)],
                 "clauses": [str(cl) for cl in c.clauses]}
                for c in t.constructors]}
            for t in spec.type_decls
        ],
        "binders": [{"name": b.name, "domain": b.domain, "range": b.range} for b in spec.bn_defs],
    }


# commands

def cmd_check(args) -> CliResult:
    spec = _load(args.spec)
    diags = validate(spec)
    if any(d.is_error for d in diags):
        return CliResult("check", None, diags)
    ctx = AlphaContext(spec, cap=_cap())
    return CliResult("check", _summary(ctx.spec), diags)


def cmd_alpha(args) -> CliResult:
    ctx, diags = _context(args.spec)
    t1, t2 = _term(ctx, args.type, args.term1), _term(ctx, args.type, args.term2)
    trace = alpha_ty(ctx, args.type, t1, t2)
    witnesses = [] if trace is None else [
        {"clause": w.clause,
         "permutation": [[_atom(ctx, a), _atom(ctx, b)] for a, b in w.permutation.pairs()]}
        for w in trace.witnesses
    ]
    return CliResult("alpha", {"equal": trace is not None, "witnesses": witnesses}, diags)


def cmd_fa(args) -> CliResult:
    ctx, diags = _context(args.spec)
    t = _term(ctx, args.type, args.term)
    return CliResult("fa", _atoms(ctx, eval_fa_ty(ctx, args.type, t)), diags)


def cmd_bn(args) -> CliResult:
    ctx, diags = _context(args.spec)
    if not ctx.spec.has_bn(args.bn):
        raise _Abort([error("UnknownBinder", f"unknown binding function {args.bn!r}")])
    t = _term(ctx, ctx.spec.bn(args.bn).domain, args.term)
    return CliResult("bn", _atoms(ctx, eval_bn(ctx, args.bn, t)), diags)


def cmd_supp(args) -> CliResult:
    ctx, diags = _context(args.spec)
    t = _term(ctx, args.type, args.term)
    eq = EQ_ALPHA if args.eq == "alpha" else EQ_SYNTACTIC
    return CliResult("supp", _atoms(ctx, supp_oracle(ctx, args.type, t, eq)), diags)


def cmd_permute(args) -> CliResult:
    ctx, diags = _context(args.spec)
    t = _term(ctx, args.type, args.term)
    try:
        perm = swaps(parse_perm_pairs(ctx.spec, args.perm))
    except SpecError as exc:
        raise _Abort(exc.diagnostics) from None
    if args.bn:
        if not ctx.spec.has_bn(args.bn):
            raise _Abort([error("UnknownBinder", f"unknown binding function {args.bn!r}")])
        if ctx.spec.bn(args.bn).domain != args.type:
            raise _Abort([error("SortError", f"{args.bn} is defined over {ctx.spec.bn(args.bn).domain}, "
                                             f"not {args.type}")])
        out = permute_bn(ctx, args.bn, perm, t)
    else:
        out = permute_term(perm, t)
    return CliResult("permute", format_term(out, ctx.spec.default_sort), diags)


COMMANDS = {
    "check": cmd_check, "alpha": cmd_alpha, "fa": cmd_fa,
    "bn": cmd_bn, "supp": cmd_supp, "permute": cmd_permute,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nombind", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="validate a spec and print its completed form")
    c.add_argument("spec")
    c = sub.add_parser("alpha", help="decide alpha-equivalence of two terms")
    c.add_argument("spec")
    c.add_argument("type")
    c.add_argument("term1")
    c.add_argument("term2")
    c = sub.add_parser("fa", help="free atoms of a term")
    c.add_argument("spec")
    c.add_argument("type")
    c.add_argument("term")
    c = sub.add_parser("bn", help="atoms a binding function picks out")
    c.add_argument("spec")
    c.add_argument("bn")
    c.add_argument("term")
    c = sub.add_parser("supp", help="support by fresh-atom probing")
    c.add_argument("spec")
    c.add_argument("type")
    c.add_argument("term")
    c.add_argument("--eq", choices=("alpha", "raw"), default="alpha")
    c = sub.add_parser("permute", help="apply a permutation '(a b)(c d)...' to a term")
    c.add_argument("spec")
    c.add_argument("type")
    c.add_argument("term")
    c.add_argument("perm")
    c.add_argument("--bn", help="act only on the atoms this binding function binds")
    return p


def run(argv: list[str] | None = None) -> CliResult:
    """Parse arguments and execute; never writes output. Usage errors from
    argparse still raise ``SystemExit``."""
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except _Abort as exc:
        return CliResult(args.command, None, exc.diagnostics, exc.exit_code)
    except CapExceeded as exc:
        return CliResult(args.command, None, [error("CapExceeded", str(exc))])


def main(argv: list[str] | None = None) -> int:
    result = run(argv)
    for d in result.diagnostics:
        print(str(d), file=sys.stderr)
    json.dump(result.to_json(), sys.stdout, ensure_ascii=False, indent=2)
    sys.stdout.write("\n")
    return result.code


if __name__ == "__main__":
    sys.exit(main())
