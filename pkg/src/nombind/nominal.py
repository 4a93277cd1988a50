"""Sorted atoms, finitely supported permutations and the generic permutation action.

Permutations are stored as normalized finite bijections: the mapping never
contains ``a -> a`` pairs, so the support of a permutation is exactly the
domain of its mapping and two permutations are equal iff their mappings are.

Composition follows the usual function convention::

    compose(p1, p2)(a) == p1(p2(a))        # p2 acts first
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping


class NominalError(Exception):
    pass


class SortMismatch(NominalError, ValueError):
    pass


class UniverseTooSmall(NominalError, ValueError):
    pass


@dataclass(frozen=True, order=True)
class Atom:
    sort: str
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        # atoms are hashed constantly during permutation search
        object.__setattr__(self, "_hash", hash((self.sort, self.name)))

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"{self.sort}.{self.name}"

    def __repr__(self):
        return f"Atom({self.sort!r}, {self.name!r})"


def atom(text: str, default_sort: str | None = None) -> Atom:
    """Parse ``sort.name``; a bare ``name`` needs ``default_sort``."""
    if "." in text:
        sort, _, name = text.partition(".")
        return Atom(sort, name)
    if default_sort is None:
        raise ValueError(f"atom {text!r} has no sort prefix")
    return Atom(default_sort, text)


class Permutation:
    """A sort-respecting bijection on atoms that moves finitely many of them."""

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[Atom, Atom] | Iterable[tuple[Atom, Atom]] = ()):
        pairs = dict(mapping)
        for src, dst in pairs.items():
            if src.sort != dst.sort:
                raise SortMismatch(f"{src} and {dst} have different sorts")
        moved = {a: b for a, b in pairs.items() if a != b}
        if set(moved) != set(moved.values()):
            raise ValueError("mapping is not a bijection on its domain")
        self._map = moved
        self._hash = hash(frozenset(moved.items()))

    def __call__(self, a: Atom) -> Atom:
        return self._map.get(a, a)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._map)

    def __len__(self):
        return len(self._map)

    def __repr__(self):
        if not self._map:
            return "Permutation()"
        return "Permutation({%s})" % ", ".join(f"{a} -> {b}" for a, b in self.pairs())

    def __str__(self):
        if not self._map:
            return "()"
        return "".join("(" + " ".join(str(a) for a in cyc) + ")" for cyc in self.cycles())

    @property
    def support(self) -> frozenset[Atom]:
        return frozenset(self._map)

    def pairs(self) -> list[tuple[Atom, Atom]]:
        """The moved atoms as sorted ``(source, target)`` pairs."""
        return sorted(self._map.items())

    def cycles(self) -> list[tuple[Atom, ...]]:
        seen = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self._map[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self._map[nxt]
            out.append(tuple(cyc))
        return out

    def permute(self, perm: Permutation) -> Permutation:
        # conjugation: perm + self - perm
        return compose(perm, compose(self, invert(perm)))

    def atoms(self) -> frozenset[Atom]:
        return self.support


def identity() -> Permutation:
    return Permutation()


def swap(a: Atom, b: Atom) -> Permutation:
    if a.sort != b.sort:
        raise SortMismatch(f"cannot swap {a} and {b}: sorts differ")
    if a == b:
        return Permutation()
    return Permutation({a: b, b: a})


def apply_perm(perm: Permutation, a: Atom) -> Atom:
    return perm(a)


def compose(p1: Permutation, p2: Permutation) -> Permutation:
    """The permutation acting as ``p2`` first, then ``p1``."""
    dom = p1.support | p2.support
    return Permutation({a: p1(p2(a)) for a in dom})


def invert(perm: Permutation) -> Permutation:
    return Permutation({b: a for a, b in perm._map.items()})


def perm_support(perm: Permutation) -> frozenset[Atom]:
    return perm.support


def swaps(pairs: Iterable[tuple[Atom, Atom]]) -> Permutation:
    """Compose swappings left to right: ``(a b)(c d)`` acts as ``(a b)`` after ``(c d)``."""
    out = identity()
    for a, b in pairs:
        out = compose(out, swap(a, b))
    return out


_PRIMITIVES = (str, int, float, bool, bytes, type(None))


def act(perm: Permutation, value: Any) -> Any:
    """The permutation action, pushed structurally through first-order data.

    Objects outside the built-in cases participate by defining
    ``permute(perm)``.
    """
    if isinstance(value, Atom):
        return perm(value)
    if isinstance(value, _PRIMITIVES):
        return value
    if not perm:
        return value
    if isinstance(value, tuple):
        return tuple(perm(v) if type(v) is Atom else act(perm, v) for v in value)
    if isinstance(value, list):
        return [act(perm, v) for v in value]
    if isinstance(value, frozenset):
        return frozenset(act(perm, v) for v in value)
    if isinstance(value, set):
        return {act(perm, v) for v in value}
    permute = getattr(value, "permute", None)
    if callable(permute):
        return permute(perm)
    raise TypeError(f"no permutation action for {type(value).__name__}")


def atoms(value: Any) -> frozenset[Atom]:
    """Every atom occurring syntactically in ``value``."""
    if isinstance(value, Atom):
        return frozenset((value,))
    if isinstance(value, _PRIMITIVES):
        return frozenset()
    if isinstance(value, (tuple, list, frozenset, set)):
        out = set()
        for v in value:
            if type(v) is Atom:
                out.add(v)
            else:
                out |= atoms(v)
        return frozenset(out)
    occurring = getattr(value, "atoms", None)
    if callable(occurring):
        return frozenset(occurring())
    raise TypeError(f"cannot collect atoms of {type(value).__name__}")


def fresh_atom(sort: str, avoid: Iterable[Atom], stem: str = "f") -> Atom:
    taken = {a.name for a in avoid if a.sort == sort}
    for i in itertools.count(1):
        name = f"{stem}{i}"
        if name not in taken:
            return Atom(sort, name)


def fresh_atoms(sort: str, n: int, avoid: Iterable[Atom], stem: str = "f") -> list[Atom]:
    avoid = set(avoid)
    out = []
    for _ in range(n):
        a = fresh_atom(sort, avoid, stem)
        avoid.add(a)
        out.append(a)
    return out


def supports_check(support: Iterable[Atom], value: Any, universe: Iterable[Atom]) -> bool:
    """Finite version of "S supports x": every swap of two universe atoms
    outside ``support`` (of the same sort) must leave ``value`` unchanged."""
    support = frozenset(support)
    universe = frozenset(universe)
    outside: dict[str, list[Atom]] = {}
    for a in sorted(universe - support):
        outside.setdefault(a.sort, []).append(a)
    for sort in {a.sort for a in universe | atoms(value)}:
        if len(outside.get(sort, ())) < 2:
            raise UniverseTooSmall(
                f"need at least 2 atoms of sort {sort!r} outside the candidate support")
    for pool in outside.values():
        for a, b in itertools.combinations(pool, 2):
            if act(swap(a, b), value) != value:
                return False
    return True


def probe_support(value: Any, equal: Callable[[Any, Any], bool] | None = None) -> frozenset[Atom]:
    """Support computed by swapping each occurring atom with one fresh atom.

    All fresh atoms behave alike under an equivariant equality, so a single
    probe per atom decides membership. Atoms not occurring in ``value`` are
    never in the result.
    """
    if equal is None:
        equal = lambda u, v: u == v  # noqa: E731
    occurring = atoms(value)
    out = set()
    for a in occurring:
        b = fresh_atom(a.sort, occurring, stem="_probe")
        if not equal(act(swap(a, b), value), value):
            out.add(a)
    return frozenset(out)
