from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Union

from ..abstraction import BindingMode

PRIMITIVES = ("string", "integer")


@dataclass(frozen=True, order=True)
class Location:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


NOWHERE = Location(0, 0)


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "ERROR" | "WARNING"
    code: str
    message: str
    location: Location = NOWHERE

    @property
    def is_error(self) -> bool:
        return self.severity == "ERROR"

    def __str__(self):
        where = "" if self.location == NOWHERE else f"{self.location}: "
        return f"{where}{self.severity} {self.code}: {self.message}"

    def to_json(self) -> dict:
        return {"severity": self.severity, "code": self.code, "message": self.message,
                "line": self.location.line, "column": self.location.column}


def error(code: str, message: str, loc: Location = NOWHERE) -> Diagnostic:
    return Diagnostic("ERROR", code, message, loc)


def warning(code: str, message: str, loc: Location = NOWHERE) -> Diagnostic:
    return Diagnostic("WARNING", code, message, loc)


class SpecError(Exception):
    """Raised with the diagnostics that stopped parsing or evaluation."""

    def __init__(self, diagnostics):
        self.diagnostics = sorted(diagnostics, key=lambda d: d.location)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


# argument kinds

@dataclass(frozen=True)
class AtomSort:
    sort: str

    def __str__(self):
        return self.sort


@dataclass(frozen=True)
class AtomSetOf:
    sort: str

    def __str__(self):
        return f"({self.sort} set)"


@dataclass(frozen=True)
class AtomListOf:
    sort: str

    def __str__(self):
        return f"({self.sort} list)"


@dataclass(frozen=True)
class RecType:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Prim:
    name: str

    def __str__(self):
        return self.name


ArgKind = Union[AtomSort, AtomSetOf, AtomListOf, RecType, Prim]
ATOMIC_KINDS = (AtomSort, AtomSetOf, AtomListOf)


@dataclass(frozen=True)
class Arg:
    label: Optional[str]
    kind: ArgKind


# binding clauses

@dataclass(frozen=True)
class Shallow:
    label: str

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Deep:
    bn: str
    label: str

    def __str__(self):
        return f"{self.bn}({self.label})"


Binder = Union[Shallow, Deep]


@dataclass(frozen=True)
class BindingClause:
    mode: BindingMode
    binders: tuple[Binder, ...]
    bodies: tuple[str, ...]
    loc: Location = field(default=NOWHERE, compare=False)

    @property
    def binder_labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.binders)

    @property
    def deep_binders(self) -> tuple[Deep, ...]:
        return tuple(b for b in self.binders if isinstance(b, Deep))

    def is_recursive(self, binder: Deep) -> bool:
        return binder.label in self.bodies

    def __str__(self):
        binders = " ".join(map(str, self.binders)) or "{}"
        return f"{self.mode.keyword} {binders} in {' '.join(self.bodies)}"


@dataclass(frozen=True)
class Constructor:
    name: str
    args: tuple[Arg, ...]
    clauses: tuple[BindingClause, ...] = ()
    loc: Location = field(default=NOWHERE, compare=False)

    def ref(self, i: int) -> str:
        """Clause-level name of argument ``i``: its label, or ``_n`` (1-based)."""
        return self.args[i].label or f"_{i + 1}"

    @cached_property
    def _index(self) -> dict[str, int]:
        return {self.ref(i): i for i in range(len(self.args))}

    def index(self, ref: str) -> int:
        return self._index[ref]

    def has_ref(self, ref: str) -> bool:
        return ref in self._index

    def kind(self, ref: str) -> ArgKind:
        return self.args[self.index(ref)].kind


@dataclass(frozen=True)
class TypeDecl:
    name: str
    constructors: tuple[Constructor, ...]
    loc: Location = field(default=NOWHERE, compare=False)


# binding functions

@dataclass(frozen=True)
class Empty:
    range: str  # "set" | "list"

    def __str__(self):
        return "{}" if self.range == "set" else "[]"


@dataclass(frozen=True)
class Single:
    label: str
    form: str  # "set" -> {atom l}, "list" -> [atom l], "atoms" -> atoms l

    def __str__(self):
        if self.form == "set":
            return f"{{atom {self.label}}}"
        if self.form == "list":
            return f"[atom {self.label}]"
        return f"atoms {self.label}"


@dataclass(frozen=True)
class Join:
    left: BnExpr
    right: BnExpr
    op: str  # "@" | "∪"

    def __str__(self):
        return f"{self.left} {self.op} {self.right}"


@dataclass(frozen=True)
class Call:
    bn: str
    label: str

    def __str__(self):
        return f"{self.bn}({self.label})"


BnExpr = Union[Empty, Single, Join, Call]


def rhs_items(expr: BnExpr) -> list[Union[Single, Call]]:
    """Leaves of a bn right-hand side, left to right."""
    if isinstance(expr, Join):
        return rhs_items(expr.left) + rhs_items(expr.right)
    if isinstance(expr, (Single, Call)):
        return [expr]
    return []


@dataclass(frozen=True)
class BnClause:
    bn: str
    ctor: str
    params: tuple[str, ...]
    rhs: BnExpr
    loc: Location = field(default=NOWHERE, compare=False)

    @cached_property
    def uses(self) -> dict[str, Union[Single, Call]]:
        """Parameter name -> the rhs leaf mentioning it (first occurrence)."""
        out: dict[str, Union[Single, Call]] = {}
        for item in rhs_items(self.rhs):
            out.setdefault(item.label, item)
        return out

    def __str__(self):
        return f"{self.bn}({' '.join((self.ctor,) + self.params)}) = {self.rhs}"


@dataclass(frozen=True)
class BnDef:
    name: str
    domain: str
    range: str  # "set" | "list"
    clauses: tuple[BnClause, ...] = ()
    loc: Location = field(default=NOWHERE, compare=False)

    def clause_for(self, ctor: str) -> BnClause:
        for c in self.clauses:
            if c.ctor == ctor:
                return c
        raise KeyError(f"{self.name} has no clause for {ctor}")


@dataclass(frozen=True)
class Spec:
    atom_sorts: tuple[str, ...]
    type_decls: tuple[TypeDecl, ...]
    bn_defs: tuple[BnDef, ...] = ()

    @cached_property
    def _types(self) -> dict[str, TypeDecl]:
        return {t.name: t for t in self.type_decls}

    @cached_property
    def _ctors(self) -> dict[str, tuple[TypeDecl, Constructor]]:
        return {c.name: (t, c) for t in self.type_decls for c in t.constructors}

    @cached_property
    def _bns(self) -> dict[str, BnDef]:
        return {b.name: b for b in self.bn_defs}

    @property
    def default_sort(self) -> str | None:
        return self.atom_sorts[0] if len(self.atom_sorts) == 1 else None

    def type_decl(self, name: str) -> TypeDecl:
        return self._types[name]

    def has_type(self, name: str) -> bool:
        return name in self._types

    def ctor(self, name: str) -> Constructor:
        return self._ctors[name][1]

    def has_ctor(self, name: str) -> bool:
        return name in self._ctors

    def type_of_ctor(self, name: str) -> str:
        return self._ctors[name][0].name

    def bn(self, name: str) -> BnDef:
        return self._bns[name]

    def has_bn(self, name: str) -> bool:
        return name in self._bns

    def bns_over(self, ty: str) -> list[BnDef]:
        return [b for b in self.bn_defs if b.domain == ty]
