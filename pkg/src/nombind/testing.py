"""Random generators for terms and permutations, used by the property suites
and the demos."""
from __future__ import annotations

import random
from functools import lru_cache

from .nominal import Atom, Permutation, identity, swaps
from .speclang.ast import AtomListOf, AtomSetOf, AtomSort, Prim, RecType, Spec
from .terms import Term

NAMES = ("a", "b", "c", "d")
STRINGS = ("s", "t")


def atom_pool(spec: Spec, size: int = 3) -> dict[str, list[Atom]]:
    return {s: [Atom(s, n) for n in NAMES[:size]] for s in spec.atom_sorts}


@lru_cache(maxsize=64)
def _heights(spec: Spec) -> dict[str, int]:
    """Height of the smallest term of each type (nullary constructors: 1)."""
    inf = float("inf")
    h = {t.name: inf for t in spec.type_decls}
    changed = True
    while changed:
        changed = False
        for t in spec.type_decls:
            for c in t.constructors:
                v = 1 + max((h[a.kind.name] for a in c.args if isinstance(a.kind, RecType)), default=0)
                if v < h[t.name]:
                    h[t.name] = v
                    changed = True
    return h


def _ctor_height(spec: Spec, ctor) -> float:
    h = _heights(spec)
    return 1 + max((h[a.kind.name] for a in ctor.args if isinstance(a.kind, RecType)), default=0)


def random_term(spec: Spec, ty: str, rng: random.Random, depth: int = 3,
                pool: dict[str, list[Atom]] | None = None) -> Term:
    """A random well-sorted term of ``ty`` of height at most ``max(depth, minimum)``."""
    pool = pool or atom_pool(spec)
    ctors = spec.type_decl(ty).constructors
    fits = [c for c in ctors if _ctor_height(spec, c) <= depth]
    ctor = rng.choice(fits) if fits else min(ctors, key=lambda c: _ctor_height(spec, c))
    args = []
    for a in ctor.args:
        k = a.kind
        if isinstance(k, RecType):
            args.append(random_term(spec, k.name, rng, depth - 1, pool))
        elif isinstance(k, AtomSort):
            args.append(rng.choice(pool[k.sort]))
        elif isinstance(k, AtomSetOf):
            n = rng.randint(0, len(pool[k.sort]))
            args.append(frozenset(rng.sample(pool[k.sort], n)))
        elif isinstance(k, AtomListOf):
            n = rng.randint(0, 3)
            args.append(tuple(rng.choice(pool[k.sort]) for _ in range(n)))
        elif isinstance(k, Prim):
            args.append(rng.choice(STRINGS) if k.name == "string" else rng.randint(0, 2))
    return Term(ctor.name, args)


def random_perm(pool: dict[str, list[Atom]], rng: random.Random, max_swaps: int = 3,
                extra: int = 2) -> Permutation:
    """A product of random same-sort swaps over ``pool`` plus ``extra``
    unused atoms per sort."""
    sorts = sorted(pool)
    if not sorts:
        return identity()
    pairs = []
    for _ in range(rng.randint(0, max_swaps)):
        s = rng.choice(sorts)
        cands = pool[s] + [Atom(s, f"e{i}") for i in range(extra)]
        pairs.append(tuple(rng.sample(cands, 2)))
    return swaps(pairs)
