"""Permutations of atoms and how they act on ordinary Python data."""
from nombind.nominal import Atom, act, atoms, compose, invert, probe_support, swap, swaps

a, b, c = (Atom("name", n) for n in "abc")

# %% Swaps and composition. compose(p, q) applies q first.
p = compose(swap(a, b), swap(b, c))
print("p =", p)
print("p(c) =", p(c))
print("p composed with its inverse is the identity:", compose(p, invert(p)) == swaps([]))

# %% The action reaches into tuples, lists and sets.
data = ((a, b), [c], frozenset({a, c}))
print("act(p, data) =", act(p, data))
print("atoms(data) =", sorted(x.name for x in atoms(data)))

# %% Support by probing with fresh atoms: the atoms whose swapping changes the value.
print("support of (a, b):", sorted(x.name for x in probe_support((a, b))))
