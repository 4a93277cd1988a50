"""Parsing binding specifications, validating them and printing the completed form."""
from nombind import corpus
from nombind.speclang import complete, parse_spec, pretty_print, validate

source = """
atom_decl name
nominal_datatype trm =
  Var name
| App trm trm
| Let a::assn t::trm binds bn(a) in t
and assn =
  ANil
| ACons name trm assn
binder
  bn :: assn => atom list
where
    bn(ANil) = []
  | bn(ACons x t as) = [atom x] @ bn(as)
"""
spec = parse_spec(source)
print("diagnostics:", validate(spec) or "none")
print(pretty_print(complete(spec)))

# %% Specs that break the well-formedness rules are reported, not rejected at parse time.
for name in corpus.INVALID:
    for d in validate(parse_spec(corpus.text(name))):
        print(f"{name}: {d}")
