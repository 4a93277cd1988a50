"""Binding a set or a list of atoms in a body, and the three checkers."""
from nombind.abstraction import Abstraction, BindingMode, abs_supp, alpha_list, alpha_set, alpha_set_plus
from nombind.nominal import Atom

x, y, z = (Atom("name", n) for n in "xyz")

# %% List binding cares about order; set binding does not.
print("list [x,y].(x,y) vs [y,x].(x,y):", alpha_list([x, y], (x, y), [y, x], (x, y)))
print("set  {x,y}.(x,y) vs {x,y}.(y,x):", alpha_set({x, y}, (x, y), {x, y}, (y, x)))

# %% Plain set binding requires equal binder counts. The relaxed mode ignores vacuous binders.
print("set  {x}.x vs {x,y}.x:", alpha_set({x}, x, {x, y}, x))
print("set+ {x}.x vs {x,y}.x:", alpha_set_plus({x}, x, {x, y}, x))

# %% Abstractions as values: == means alpha-equivalence.
left = Abstraction(BindingMode.SET_PLUS, {x, y}, (x, z))
right = Abstraction(BindingMode.SET_PLUS, {y}, (y, z))
print("equal:", left == right, " support:", sorted(a.name for a in abs_supp(left)))
