"""General binders in nominal style: permutations and support, alpha-equivalence
for set, set+ and list abstractions, a binding-specification language, and the
derived free-atom, binding-function and alpha functions for raw terms."""
from .abstraction import (
    Abstraction, AlphaWitness, BindingMode, CapExceeded, UniverseTooLarge, abs_supp,
    alpha_list, alpha_set, alpha_set_plus, brute_force_alpha,
)
from .nominal import (
    Atom, NominalError, Permutation, SortMismatch, UniverseTooSmall, act, apply_perm, atom,
    atoms, compose, identity, invert, perm_support, probe_support, supports_check, swap, swaps,
)
from .semantics import (
    EQ_ALPHA, EQ_SYNTACTIC, AlphaContext, AlphaTrace, TypeMismatch, alpha_bn, alpha_ty,
    alpha_variant, eval_bn, eval_fa_bn, eval_fa_ty, permute_bn, permute_term, supp_oracle,
)
from .speclang import (
    Diagnostic, Spec, SpecError, complete, parse_spec, parse_term, pretty_print, validate,
)
from .terms import Term, format_term

__version__ = "0.1.0"

__all__ = [
    "Abstraction", "AlphaContext", "AlphaTrace", "AlphaWitness", "Atom", "BindingMode",
    "CapExceeded", "Diagnostic", "EQ_ALPHA", "EQ_SYNTACTIC", "NominalError", "Permutation",
    "SortMismatch", "Spec", "SpecError", "Term", "TypeMismatch", "UniverseTooLarge",
    "UniverseTooSmall", "abs_supp", "act", "alpha_bn", "alpha_list", "alpha_set",
    "alpha_set_plus", "alpha_ty", "alpha_variant", "apply_perm", "atom", "atoms",
    "brute_force_alpha", "complete", "compose", "eval_bn", "eval_fa_bn", "eval_fa_ty",
    "format_term", "identity", "invert", "parse_spec", "parse_term", "perm_support",
    "permute_bn", "permute_term", "pretty_print", "probe_support", "supp_oracle",
    "supports_check", "swap", "swaps", "validate",
]
