"""Well-formedness restrictions on specs, and completion with empty clauses.

Error codes:

    R1  a body occurs in more than one binding clause of a constructor
    R2  a binder does not fit its clause's mode
    R3  a deep binder argument has more than one binding function
    R4  a recursive deep binder occurs in more than one binding clause
    R5  a binding function returns atoms mentioned in a binding clause
    R6  malformed binding-function right-hand side
    R7  binding function not total over its domain
    R8  a type has no finite inhabitant
    W1  a shallow binder label is also used as a body

plus ``Duplicate``, ``UnknownType``, ``UnknownLabel``, ``UnknownBinder`` and
``BinderDomain`` for name-resolution problems. A single offending argument
is reported once, under the most specific of R3, R4 and R1.
"""
from __future__ import annotations

from collections import Counter

from ..abstraction import BindingMode
from .ast import (
    ATOMIC_KINDS, AtomListOf, AtomSetOf, AtomSort, BindingClause, Call, Constructor,
    Deep, Diagnostic, Empty, Join, RecType, Shallow, Single, Spec, TypeDecl, error,
    rhs_items, warning,
)


def _sorted(diags: list[Diagnostic]) -> list[Diagnostic]:
    return sorted(diags, key=lambda d: (d.location, d.code, d.message))


def validate(spec: Spec) -> list[Diagnostic]:
    """All diagnostics for ``spec``, sorted by location."""
    out: list[Diagnostic] = []
    out += _names(spec)
    for ty in spec.type_decls:
        for ctor in ty.constructors:
            out += _ctor_clauses(spec, ctor)
    out += _binding_functions(spec)
    out += _inhabitation(spec)
    return _sorted(out)


def has_errors(diags) -> bool:
    return any(d.is_error for d in diags)


def _names(spec: Spec) -> list[Diagnostic]:
    out = []

    def dups(kind, items):
        counts = Counter(name for name, _ in items)
        seen = set()
        for name, loc in items:
            if counts[name] > 1 and name not in seen:
                seen.add(name)
                out.append(error("Duplicate", f"{kind} {name!r} is declared {counts[name]} times", loc))

    first = spec.type_decls[0].loc if spec.type_decls else None
    dups("atom sort", [(s, first) for s in spec.atom_sorts])
    dups("type", [(t.name, t.loc) for t in spec.type_decls])
    dups("constructor", [(c.name, c.loc) for t in spec.type_decls for c in t.constructors])
    dups("binding function", [(b.name, b.loc) for b in spec.bn_defs])
    for t in spec.type_decls:
        if t.name in spec.atom_sorts:
            out.append(error("Duplicate", f"type {t.name!r} clashes with an atom sort", t.loc))
        for c in t.constructors:
            dups(f"label in {c.name}: argument", [(a.label, c.loc) for a in c.args if a.label])
            for a in c.args:
                if isinstance(a.kind, RecType) and not spec.has_type(a.kind.name):
                    out.append(error("UnknownType", f"{c.name}: unknown type {a.kind.name!r}", c.loc))
    return out


def _binder_fits(spec: Spec, ctor: Constructor, clause: BindingClause, b) -> str | None:
    """Why binder ``b`` is wrong for ``clause``, or None."""
    kind = ctor.kind(b.label)
    if isinstance(b, Shallow):
        allowed = (AtomSort, AtomListOf) if clause.mode is BindingMode.LIST else (AtomSort, AtomSetOf)
        if not isinstance(kind, allowed):
            want = "an atom or atom list" if clause.mode is BindingMode.LIST else "an atom or atom set"
            return f"shallow binder {b.label} has kind {kind}; {clause.mode.keyword} needs {want}"
        return None
    bn = spec.bn(b.bn)
    want = "list" if clause.mode is BindingMode.LIST else "set"
    if bn.range != want:
        return f"binding function {bn.name} returns an atom {bn.range}; {clause.mode.keyword} needs an atom {want}"
    return None


def _ctor_clauses(spec: Spec, ctor: Constructor) -> list[Diagnostic]:
    out = []
    ok_clauses = []
    for clause in ctor.clauses:
        bad = False
        for label in clause.binder_labels + clause.bodies:
            if not ctor.has_ref(label):
                out.append(error("UnknownLabel", f"{ctor.name}: no argument labelled {label!r}", clause.loc))
                bad = True
        for b in clause.deep_binders:
            if not spec.has_bn(b.bn):
                out.append(error("UnknownBinder", f"{ctor.name}: unknown binding function {b.bn!r}", clause.loc))
                bad = True
            elif ctor.has_ref(b.label):
                kind = ctor.kind(b.label)
                dom = spec.bn(b.bn).domain
                if kind != RecType(dom):
                    out.append(error("BinderDomain",
                                     f"{ctor.name}: {b.bn} is defined over {dom}, but {b.label} has kind {kind}",
                                     clause.loc))
                    bad = True
        if not bad:
            ok_clauses.append(clause)

    for clause in ok_clauses:
        for b in clause.binders:
            why = _binder_fits(spec, ctor, clause, b)
            if why:
                out.append(error("R2", f"{ctor.name}: {why}", clause.loc))

    # R3 / R4 / R1, one report per argument, most specific first
    reported = set()
    bns_of: dict[str, set[str]] = {}
    for clause in ok_clauses:
        for b in clause.deep_binders:
            bns_of.setdefault(b.label, set()).add(b.bn)
    for label, names in sorted(bns_of.items()):
        if len(names) > 1:
            reported.add(label)
            out.append(error("R3", f"{ctor.name}: deep binder {label} has several binding functions "
                                   f"({', '.join(sorted(names))})", ctor.loc))
    binder_uses = Counter(l for c in ok_clauses for l in c.binder_labels)
    recursive = {b.label for c in ok_clauses for b in c.deep_binders if c.is_recursive(b)}
    for label in sorted(recursive - reported):
        if binder_uses[label] > 1:
            reported.add(label)
            out.append(error("R4", f"{ctor.name}: recursive deep binder {label} occurs in more than one "
                                   f"binding clause", ctor.loc))
    body_uses = Counter(l for c in ok_clauses for l in c.bodies)
    for label in sorted(body_uses):
        if body_uses[label] > 1 and label not in reported:
            out.append(error("R1", f"{ctor.name}: body {label} occurs in more than one binding clause",
                             ctor.loc))

    shallow = {b.label for c in ok_clauses for b in c.binders if isinstance(b, Shallow)}
    for label in sorted(shallow & set(body_uses)):
        out.append(warning("W1", f"{ctor.name}: shallow binder {label} is also used as a body", ctor.loc))
    return out


def _binding_functions(spec: Spec) -> list[Diagnostic]:
    out = []
    for bn in spec.bn_defs:
        if not bn.range:
            out.append(error("UnknownBinder", f"clauses given for undeclared binding function {bn.name!r}",
                             bn.loc))
            continue
        if not spec.has_type(bn.domain):
            out.append(error("UnknownType", f"{bn.name}: unknown domain type {bn.domain!r}", bn.loc))
            continue
        domain = spec.type_decl(bn.domain)
        counts = Counter(c.ctor for c in bn.clauses)
        for ctor in domain.constructors:
            if counts[ctor.name] == 0:
                out.append(error("R7", f"{bn.name} has no clause for {ctor.name}", bn.loc))
            elif counts[ctor.name] > 1:
                out.append(error("R7", f"{bn.name} has {counts[ctor.name]} clauses for {ctor.name}", bn.loc))
        for clause in bn.clauses:
            if not any(c.name == clause.ctor for c in domain.constructors):
                out.append(error("R7", f"{bn.name}: {clause.ctor} is not a constructor of {bn.domain}",
                                 clause.loc))
                continue
            out += _bn_clause(spec, bn, spec.ctor(clause.ctor), clause)
    return out


def _bn_clause(spec: Spec, bn, ctor: Constructor, clause) -> list[Diagnostic]:
    out = []
    where = f"{bn.name}({clause.ctor} ...)"
    if len(clause.params) != len(ctor.args):
        return [error("R7", f"{where}: {ctor.name} takes {len(ctor.args)} arguments, "
                            f"the clause names {len(clause.params)}", clause.loc)]
    for name, n in Counter(clause.params).items():
        if n > 1:
            out.append(error("Duplicate", f"{where}: parameter {name!r} repeated", clause.loc))
    kinds = dict(zip(clause.params, (a.kind for a in ctor.args)))
    refs = dict(zip(clause.params, (ctor.ref(i) for i in range(len(ctor.args)))))

    def shape(msg):
        out.append(error("R6", f"{where}: {msg}", clause.loc))

    def walk(e):
        if isinstance(e, Empty):
            if e.range != bn.range:
                shape(f"{e} is not an atom {bn.range}")
        elif isinstance(e, Join):
            if (e.op == "@") != (bn.range == "list"):
                shape(f"{e.op!r} does not combine atom {bn.range}s")
            walk(e.left)
            walk(e.right)

    walk(clause.rhs)
    items = rhs_items(clause.rhs)
    for name, n in Counter(i.label for i in items).items():
        if n > 1:
            shape(f"{name} occurs {n} times")
    bound_refs = {l for c in ctor.clauses if c.binders for l in c.binder_labels + c.bodies}
    for item in items:
        if item.label not in kinds:
            out.append(error("UnknownLabel", f"{where}: {item.label!r} is not a parameter", clause.loc))
            continue
        kind = kinds[item.label]
        if isinstance(item, Single):
            if not isinstance(kind, ATOMIC_KINDS):
                shape(f"{item} needs an atom argument, {item.label} has kind {kind}")
            elif item.form in ("set", "list") and item.form != bn.range:
                shape(f"{item} is not an atom {bn.range}")
            elif bn.range == "list" and isinstance(kind, AtomSetOf):
                shape(f"an atom set ({item.label}) has no list order")
        else:
            if not spec.has_bn(item.bn):
                out.append(error("UnknownBinder", f"{where}: unknown binding function {item.bn!r}", clause.loc))
                continue
            callee = spec.bn(item.bn)
            if kind != RecType(callee.domain):
                shape(f"{item} needs a {callee.domain} argument, {item.label} has kind {kind}")
            elif callee.range != bn.range:
                shape(f"{callee.name} returns an atom {callee.range}, {bn.name} an atom {bn.range}")
        if refs[item.label] in bound_refs:
            out.append(error("R5", f"{where}: returns {item.label}, which is mentioned in a binding "
                                   f"clause of {ctor.name}", clause.loc))
    return out


def _inhabitation(spec: Spec) -> list[Diagnostic]:
    inhabited: set[str] = set()
    changed = True
    while changed:
        changed = False
        for t in spec.type_decls:
            if t.name in inhabited:
                continue
            for c in t.constructors:
                if all(not isinstance(a.kind, RecType) or a.kind.name in inhabited for a in c.args):
                    inhabited.add(t.name)
                    changed = True
                    break
    return [error("R8", f"type {t.name} has no finite inhabitant", t.loc)
            for t in spec.type_decls if t.name not in inhabited
            if all(spec.has_type(a.kind.name) for c in t.constructors
                   for a in c.args if isinstance(a.kind, RecType))]


def complete(spec: Spec) -> Spec:
    """Give every argument that no clause mentions an empty binding clause."""
    types = []
    for t in spec.type_decls:
        ctors = []
        for c in t.constructors:
            mentioned = {l for cl in c.clauses for l in cl.binder_labels + cl.bodies}
            missing = tuple(c.ref(i) for i in range(len(c.args)) if c.ref(i) not in mentioned)
            if missing:
                c = Constructor(c.name, c.args, c.clauses + (BindingClause(BindingMode.LIST, (), missing),),
                                c.loc)
            ctors.append(c)
        types.append(TypeDecl(t.name, tuple(ctors), t.loc))
    return Spec(spec.atom_sorts, tuple(types), spec.bn_defs)
