"""Free atoms, binding functions, alpha-equivalence and support for raw terms
of a validated spec.

All operations take an :class:`AlphaContext`, which owns the completed spec
and memo tables. Argument values follow the carriers of :mod:`nombind.terms`.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .abstraction import BindingMode, check
from .nominal import Atom, NominalError, Permutation, act, atoms, fresh_atom, identity, probe_support
from .speclang.ast import (
    AtomListOf, AtomSetOf, AtomSort, BindingClause, Call, Constructor, Empty,
    RecType, Shallow, Single, Spec, SpecError,
)
from .speclang.validate import complete, has_errors, validate
from .terms import Term

DEFAULT_CAP = 8


class TypeMismatch(NominalError, TypeError):
    pass


class Equality(enum.Enum):
    SYNTACTIC = "raw"
    ALPHA = "alpha"


EQ_SYNTACTIC = Equality.SYNTACTIC
EQ_ALPHA = Equality.ALPHA


@dataclass(frozen=True)
class ClauseWitness:
    index: int
    clause: str
    permutation: Permutation


@dataclass(frozen=True)
class AlphaTrace:
    """Evidence for an alpha-equivalence: one witness per binding clause of
    the outermost constructor."""
    ctor: str
    witnesses: tuple[ClauseWitness, ...]


class AlphaContext:
    """A spec that passed validation, completed, plus evaluation caches."""

    def __init__(self, spec: Spec, cap: int = DEFAULT_CAP):
        diags = validate(spec)
        if has_errors(diags):
            raise SpecError([d for d in diags if d.is_error])
        if cap < 1:
            raise ValueError("cap must be positive")
        self.source = spec
        self.spec = complete(spec)
        self.warnings = diags
        self.cap = cap
        self._fa: dict = {}
        self._alpha: dict = {}

    def clear_caches(self):
        self._fa.clear()
        self._alpha.clear()


# helpers

_CACHE_LIMIT = 200_000


def _remember(table: dict, key, value):
    if len(table) >= _CACHE_LIMIT:
        table.clear()
    table[key] = value


def _arg(ctor: Constructor, t: Term, label: str):
    return t.args[ctor.index(label)]


def _coerce(value, range_: str):
    """Atom, atom set or atom list as an atom list or set."""
    if isinstance(value, Atom):
        return (value,) if range_ == "list" else frozenset((value,))
    if isinstance(value, tuple):
        return value if range_ == "list" else frozenset(value)
    return frozenset(value)


def _value_fa(ctx: AlphaContext, kind, value) -> frozenset[Atom]:
    if isinstance(kind, RecType):
        return eval_fa_ty(ctx, kind.name, value)
    if isinstance(kind, (AtomSort, AtomSetOf, AtomListOf)):
        return atoms(value)
    return frozenset()


def _ctor_of(ctx: AlphaContext, ty: str, t: Term) -> Constructor:
    spec = ctx.spec
    if not isinstance(t, Term) or not spec.has_ctor(t.ctor):
        raise TypeMismatch(f"{t!r} is not a term of this spec")
    owner = spec.type_of_ctor(t.ctor)
    if owner != ty:
        raise TypeMismatch(f"{t.ctor} builds a {owner}, not a {ty}")
    return spec.ctor(t.ctor)


def _bn_setup(ctx: AlphaContext, bn_name: str, t: Term):
    bn = ctx.spec.bn(bn_name)
    ctor = _ctor_of(ctx, bn.domain, t)
    clause = bn.clause_for(t.ctor)
    return bn, ctor, clause


def _binding_clauses(ctor: Constructor) -> list[BindingClause]:
    return [c for c in ctor.clauses if c.binders]


def _covered(ctor: Constructor) -> set[str]:
    """Labels mentioned by a clause with binders; such arguments never occur
    in a binding-function right-hand side."""
    return {l for c in ctor.clauses if c.binders for l in c.binder_labels + c.bodies}


# permutation action

def permute_term(perm: Permutation, t: Term) -> Term:
    return act(perm, t)


# binding functions

def eval_bn(ctx: AlphaContext, bn_name: str, t: Term):
    """Atoms picked out by ``bn_name``: a tuple for list-valued functions,
    a frozenset for set-valued ones."""
    bn, ctor, clause = _bn_setup(ctx, bn_name, t)
    env = dict(zip(clause.params, t.args))

    def ev(e):
        if isinstance(e, Empty):
            return () if bn.range == "list" else frozenset()
        if isinstance(e, Single):
            return _coerce(env[e.label], bn.range)
        if isinstance(e, Call):
            return eval_bn(ctx, e.bn, env[e.label])
        left, right = ev(e.left), ev(e.right)
        return left + right if bn.range == "list" else left | right

    return ev(clause.rhs)


def eval_fa_bn(ctx: AlphaContext, bn_name: str, t: Term) -> frozenset[Atom]:
    """Atoms of ``t`` left free by ``bn_name``."""
    key = ("bn", bn_name, t)
    hit = ctx._fa.get(key)
    if hit is not None:
        return hit
    bn, ctor, clause = _bn_setup(ctx, bn_name, t)
    # arguments under a binding clause of their own constructor count through it
    out: set[Atom] = set()
    for bc in _binding_clauses(ctor):
        out |= _clause_fa(ctx, ctor, bc, t)
    covered = _covered(ctor)
    for i, (param, arg, value) in enumerate(zip(clause.params, ctor.args, t.args)):
        if ctor.ref(i) in covered:
            continue
        use = clause.uses.get(param)
        if use is None:
            out |= _value_fa(ctx, arg.kind, value)
        elif isinstance(use, Call):
            out |= eval_fa_bn(ctx, use.bn, value)
    res = frozenset(out)
    _remember(ctx._fa, key, res)
    return res


def permute_bn(ctx: AlphaContext, bn_name: str, perm: Permutation, t: Term) -> Term:
    """Apply ``perm`` only to the atoms ``bn_name`` designates as bound."""
    if not perm:
        return t
    bn, ctor, clause = _bn_setup(ctx, bn_name, t)
    args = []
    for param, value in zip(clause.params, t.args):
        use = clause.uses.get(param)
        if use is None:
            args.append(value)
        elif isinstance(use, Call):
            args.append(permute_bn(ctx, use.bn, perm, value))
        else:
            args.append(act(perm, value))
    return Term(t.ctor, args)


# free atoms

def _binder_atoms(ctx: AlphaContext, ctor: Constructor, clause: BindingClause, t: Term):
    """The clause's bound atoms: a tuple in LIST mode, else a frozenset."""
    as_list = clause.mode is BindingMode.LIST
    parts = []
    for b in clause.binders:
        value = _arg(ctor, t, b.label)
        if isinstance(b, Shallow):
            parts.append(_coerce(value, "list" if as_list else "set"))
        else:
            parts.append(eval_bn(ctx, b.bn, value))
    if as_list:
        return tuple(a for p in parts for a in p)
    return frozenset().union(*parts)


def _clause_fa(ctx, ctor, clause, t) -> frozenset[Atom]:
    d = frozenset().union(*(_value_fa(ctx, ctor.kind(l), _arg(ctor, t, l)) for l in clause.bodies))
    b = frozenset(_binder_atoms(ctx, ctor, clause, t))
    b2 = frozenset().union(*(eval_fa_bn(ctx, x.bn, _arg(ctor, t, x.label))
                             for x in clause.deep_binders if not clause.is_recursive(x)))
    return (d - b) | b2


def eval_fa_ty(ctx: AlphaContext, ty: str, t: Term) -> frozenset[Atom]:
    """Free atoms of ``t`` at type ``ty``."""
    key = ("ty", ty, t)
    hit = ctx._fa.get(key)
    if hit is not None:
        return hit
    ctor = _ctor_of(ctx, ty, t)
    res = frozenset().union(*(_clause_fa(ctx, ctor, c, t) for c in ctor.clauses))
    _remember(ctx._fa, key, res)
    return res


# alpha-equivalence

def _body_rel(ctx: AlphaContext, kinds):
    def rel(xs, ys):
        for kind, x, y in zip(kinds, xs, ys):
            if isinstance(kind, RecType):
                if alpha_ty(ctx, kind.name, x, y) is None:
                    return False
            elif x != y:
                return False
        return True
    return rel


def _body_fa(ctx: AlphaContext, kinds):
    def fa(xs):
        return frozenset().union(*(_value_fa(ctx, k, x) for k, x in zip(kinds, xs)))
    return fa


def _alpha_clause(ctx, ctor, clause, t1, t2) -> Permutation | None:
    kinds = [ctor.kind(l) for l in clause.bodies]
    d1 = tuple(_arg(ctor, t1, l) for l in clause.bodies)
    d2 = tuple(_arg(ctor, t2, l) for l in clause.bodies)
    rel = _body_rel(ctx, kinds)
    if not clause.binders:
        return identity() if rel(d1, d2) else None
    for b in clause.deep_binders:
        if not clause.is_recursive(b):
            if not alpha_bn(ctx, b.bn, _arg(ctor, t1, b.label), _arg(ctor, t2, b.label)):
                return None
    b1 = _binder_atoms(ctx, ctor, clause, t1)
    b2 = _binder_atoms(ctx, ctor, clause, t2)
    w = check(clause.mode, b1, d1, b2, d2, rel=rel, fa=_body_fa(ctx, kinds), act=act,
              cap=None if clause.mode is BindingMode.LIST else ctx.cap)
    return None if w is None else w.permutation


def alpha_ty(ctx: AlphaContext, ty: str, t1: Term, t2: Term) -> AlphaTrace | None:
    """Decide alpha-equivalence at ``ty``; returns per-clause witnesses or None.

    Raises :class:`TypeMismatch` when a term is not of type ``ty``. Clauses
    with more than ``ctx.cap`` bound atoms in a set mode raise
    :class:`~nombind.abstraction.CapExceeded`.
    """
    ctor = _ctor_of(ctx, ty, t1)
    _ctor_of(ctx, ty, t2)
    key = (ty, t1, t2)
    if key in ctx._alpha:
        return ctx._alpha[key]
    trace = None
    if t1.ctor == t2.ctor:
        found = []
        for i, clause in enumerate(ctor.clauses):
            pi = _alpha_clause(ctx, ctor, clause, t1, t2)
            if pi is None:
                break
            found.append(ClauseWitness(i, str(clause), pi))
        else:
            trace = AlphaTrace(t1.ctor, tuple(found))
    _remember(ctx._alpha, key, trace)
    return trace


def alpha_bn(ctx: AlphaContext, bn_name: str, t1: Term, t2: Term) -> bool:
    """Relate two binder arguments, ignoring the atoms ``bn_name`` binds."""
    bn, ctor, clause = _bn_setup(ctx, bn_name, t1)
    _ctor_of(ctx, bn.domain, t2)
    if t1.ctor != t2.ctor:
        return False
    for bc in _binding_clauses(ctor):
        if _alpha_clause(ctx, ctor, bc, t1, t2) is None:
            return False
    covered = _covered(ctor)
    for i, (param, arg, x, y) in enumerate(zip(clause.params, ctor.args, t1.args, t2.args)):
        if ctor.ref(i) in covered:
            continue
        use = clause.uses.get(param)
        if use is None:
            if isinstance(arg.kind, RecType):
                if alpha_ty(ctx, arg.kind.name, x, y) is None:
                    return False
            elif x != y:
                return False
        elif isinstance(use, Call):
            if not alpha_bn(ctx, use.bn, x, y):
                return False
    return True


# support

def supp_oracle(ctx: AlphaContext, ty: str, t: Term, eq: Equality = EQ_ALPHA) -> frozenset[Atom]:
    """Support of ``t`` found by swapping each atom with a fresh one."""
    _ctor_of(ctx, ty, t)
    if eq is EQ_SYNTACTIC:
        return probe_support(t)
    return probe_support(t, lambda u, v: alpha_ty(ctx, ty, u, v) is not None)


# alpha-variants

def alpha_variant(ctx: AlphaContext, ty: str, t: Term, seed: int = 0) -> Term:
    """An alpha-equivalent copy of ``t`` with bound atoms renamed to fresh
    ones; deterministic for a given seed."""
    rng = random.Random(seed)
    avoid = set(atoms(t))
    return _variant(ctx, ty, t, rng, avoid)


def _variant(ctx, ty, t, rng, avoid) -> Term:
    ctor = _ctor_of(ctx, ty, t)
    args = [
        _variant(ctx, a.kind.name, v, rng, avoid) if isinstance(a.kind, RecType) else v
        for a, v in zip(ctor.args, t.args)
    ]
    varied = Term(t.ctor, args)
    body_of = {l: i for i, c in enumerate(ctor.clauses) for l in c.bodies}
    renaming: dict[Atom, Atom] = {}
    new = list(args)
    for i, clause in enumerate(ctor.clauses):
        if not clause.binders:
            continue
        # a binder that is a body of another clause is free there
        if any(body_of.get(l, i) != i for l in clause.binder_labels):
            continue
        pairs = []
        for a in sorted(frozenset(_binder_atoms(ctx, ctor, clause, varied))):
            if a not in renaming:
                if rng.random() < 0.25:
                    renaming[a] = a
                else:
                    renaming[a] = fresh_atom(a.sort, avoid)
                    avoid.add(renaming[a])
            if renaming[a] != a:
                pairs.append((a, renaming[a]))
        if not pairs:
            continue
        pi = Permutation({**dict(pairs), **{b: a for a, b in pairs}})
        for b in clause.binders:
            j = ctor.index(b.label)
            if isinstance(b, Shallow):
                new[j] = act(pi, args[j])
            elif not clause.is_recursive(b):
                new[j] = permute_bn(ctx, b.bn, pi, args[j])
        for l in clause.bodies:
            j = ctor.index(l)
            new[j] = act(pi, args[j])
    return Term(t.ctor, new)


__all__ = [
    "AlphaContext", "AlphaTrace", "ClauseWitness", "DEFAULT_CAP", "EQ_ALPHA", "EQ_SYNTACTIC",
    "Equality", "TypeMismatch", "alpha_bn", "alpha_ty", "alpha_variant", "eval_bn",
    "eval_fa_bn", "eval_fa_ty", "permute_bn", "permute_term", "supp_oracle",
]
