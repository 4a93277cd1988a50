"""Free atoms, binding functions and alpha-equivalence for a user-defined language."""
from nombind import corpus
from nombind.nominal import Atom, swap
from nombind.semantics import (
    AlphaContext, alpha_ty, alpha_variant, eval_bn, eval_fa_bn, eval_fa_ty, permute_bn, supp_oracle,
)
from nombind.speclang import parse_spec, parse_term
from nombind.terms import format_term

ctx = AlphaContext(parse_spec(corpus.text("letrec")))


def t(ty, text):
    return parse_term(ctx.spec, ty, text)


def show(atoms):
    return "{" + ", ".join(a.name for a in sorted(atoms)) + "}"


# %% Let binds only in the body; Let_rec also binds in the assignments.
let = t("trm", "(Let (ACons x (Var x) ANil) (Var x))")
rec = t("trm", "(Let_rec (ACons x (Var x) ANil) (Var x))")
print("fa(Let)     =", show(eval_fa_ty(ctx, "trm", let)))
print("fa(Let_rec) =", show(eval_fa_ty(ctx, "trm", rec)))

# %% Binding functions and the atoms they leave free.
assn = t("assn", "(ACons x (Var y) (ACons z (Var x) ANil))")
print("bn =", [a.name for a in eval_bn(ctx, "bn", assn)], " fa_bn =", show(eval_fa_bn(ctx, "bn", assn)))
print("permute_bn (x y):", format_term(permute_bn(ctx, "bn", swap(Atom("name", "x"), Atom("name", "y")), assn), "name"))

# %% Random alpha-variants stay equivalent, and the probed support matches the free atoms.
v = alpha_variant(ctx, "trm", rec, seed=0)
print("variant:", format_term(v, "name"), " equivalent:", alpha_ty(ctx, "trm", rec, v) is not None)
trace = alpha_ty(ctx, "trm", rec, v)
for w in trace.witnesses:
    print("  clause", w.index, "witness", w.permutation)
print("supp(Let) by probing =", show(supp_oracle(ctx, "trm", let)))
