import random

import pytest

from nombind import corpus
from nombind.abstraction import BindingMode
from nombind.nominal import Atom
from nombind.speclang import (
    BindingClause, Spec, SpecError, complete, parse_perm_pairs, parse_spec, parse_term,
    pretty_print, validate,
)
from nombind.terms import Term


def codes(text):
    return [d.code for d in validate(parse_spec(text)) if d.is_error]


def test_parse_lam():
    spec = parse_spec(corpus.text("lam"))
    assert [t.name for t in spec.type_decls] == ["lam"]
    assert [c.name for c in spec.type_decls[0].constructors] == ["Var", "App", "Lam"]


def test_parse_letpat():
    spec = parse_spec(corpus.text("letpat"))
    assert [t.name for t in spec.type_decls] == ["trm", "pat"]
    assert spec.bn("bn").domain == "pat" and spec.bn("bn").range == "list"


def test_empty_input():
    with pytest.raises(SpecError) as exc:
        parse_spec("")
    assert exc.value.diagnostics[0].code == "SyntaxError"


def test_syntax_error_location():
    with pytest.raises(SpecError) as exc:
        parse_spec("nominal_datatype t =\n  A binds in t")
    d = exc.value.diagnostics[0]
    assert (d.code, d.location.line) == ("SyntaxError", 2)


def test_nested_type_rejected():
    with pytest.raises(SpecError) as exc:
        parse_spec("nominal_datatype t = A (t list)")
    assert exc.value.diagnostics[0].code == "NestedType"


@pytest.mark.parametrize("name", corpus.VALID)
def test_corpus_valid(name):
    assert codes(corpus.text(name)) == []


@pytest.mark.parametrize("name,code", sorted(corpus.INVALID.items()))
def test_corpus_invalid(name, code):
    assert codes(corpus.text(name)) == [code]


@pytest.mark.parametrize("name", corpus.VALID + tuple(corpus.INVALID))
def test_round_trip(name):
    spec = parse_spec(corpus.text(name))
    assert parse_spec(pretty_print(spec)) == spec
    done = complete(spec)
    assert parse_spec(pretty_print(done)) == done


@pytest.mark.parametrize("name", corpus.VALID)
def test_complete_idempotent(name):
    done = complete(parse_spec(corpus.text(name)))
    assert complete(done) == done


def test_complete_lam():
    spec = complete(parse_spec(corpus.text("lam")))
    var, app, lam = spec.type_decls[0].constructors
    assert var.clauses == (BindingClause(BindingMode.LIST, (), ("_1",)),)
    assert app.clauses == (BindingClause(BindingMode.LIST, (), ("_1", "_2")),)
    assert len(lam.clauses) == 1


def test_complete_letrec_assignments():
    spec = complete(parse_spec(corpus.text("letrec")))
    assert spec.ctor("ANil").clauses == ()
    assert spec.ctor("ACons").clauses == (BindingClause(BindingMode.LIST, (), ("_1", "_2", "_3")),)
    # Let mentions both arguments already
    assert len(spec.ctor("Let").clauses) == 1


def test_validate_order_independent():
    spec = parse_spec(corpus.text("bnexp_bad"))
    rng = random.Random(0)
    base = [(d.code, d.message) for d in validate(spec)]
    for _ in range(5):
        types = list(spec.type_decls)
        bns = list(spec.bn_defs)
        rng.shuffle(types)
        rng.shuffle(bns)
        shuffled = Spec(spec.atom_sorts, tuple(types), tuple(bns))
        assert sorted((d.code, d.message) for d in validate(shuffled)) == sorted(base)
    assert validate(spec) == validate(spec)


HEAD = "atom_decl name\nnominal_datatype trm =\n    Var name\n"
PAT = "and pat = PVar name | PTup pat pat\n"


def test_r2_shallow_kind():
    assert codes(HEAD + "  | L t::trm s::trm binds t in s\n") == ["R2"]
    assert codes(HEAD + "  | L xs::(name set) t::trm binds xs in t\n") == ["R2"]
    assert codes(HEAD + "  | L xs::(name list) t::trm binds (set) xs in t\n") == ["R2"]


def test_r2_deep_range():
    text = (HEAD + "  | L p::pat t::trm binds (set) bn(p) in t\n" + PAT
            + "binder bn :: pat => atom list where bn(PVar x) = [atom x] | bn(PTup a b) = bn(a) @ bn(b)\n")
    assert codes(text) == ["R2"]


def test_r4_recursive_binder_twice():
    text = (HEAD + "  | L p::pat t::trm s::trm binds bn(p) in p t, binds bn(p) in s\n" + PAT
            + "binder bn :: pat => atom list where bn(PVar x) = [atom x] | bn(PTup a b) = bn(a) @ bn(b)\n")
    assert codes(text) == ["R4"]


def test_r6_shapes():
    tail = HEAD + "  | L p::pat t::trm binds bn(p) in t\n" + PAT + "binder bn :: pat => atom list where "
    assert codes(tail + "bn(PVar x) = {atom x} | bn(PTup a b) = bn(a) @ bn(b)\n") == ["R6"]
    assert codes(tail + "bn(PVar x) = [atom x] | bn(PTup a b) = bn(a) ∪ bn(b)\n") == ["R6"]
    assert codes(tail + "bn(PVar x) = [atom x] | bn(PTup a b) = bn(a) @ bn(a)\n") == ["R6"]
    assert codes(tail + "bn(PVar x) = [atom x] | bn(PTup a b) = [atom a]\n") == ["R6"]


def test_r7_totality():
    text = (HEAD + "  | L p::pat t::trm binds bn(p) in t\n" + PAT
            + "binder bn :: pat => atom list where bn(PVar x) = [atom x]\n")
    assert codes(text) == ["R7"]


def test_r8_inhabitation():
    assert codes("nominal_datatype t = A t\n") == ["R8"]
    assert codes("nominal_datatype t = A u and u = B t | C\n") == []


def test_unknown_names():
    assert codes(HEAD + "  | L x::name t::trm binds x in s\n") == ["UnknownLabel"]
    assert codes(HEAD + "  | L x::name t::foo binds x in t\n") == ["UnknownType"]
    assert codes(HEAD + "  | L p::trm t::trm binds bn(p) in t\n") == ["UnknownBinder"]
    assert "Duplicate" in codes(HEAD + "  | Var name\n")


def test_w1_warning():
    diags = validate(parse_spec(HEAD + "  | L x::name t::trm binds x in t, binds {} in x\n"))
    assert [(d.severity, d.code) for d in diags] == [("WARNING", "W1")]


def test_parse_term():
    spec = parse_spec(corpus.text("lam"))
    x = Atom("name", "x")
    assert parse_term(spec, "lam", "(Lam name.x (Var x))") == Term("Lam", [x, Term("Var", [x])])


@pytest.mark.parametrize("text,code", [
    ("(Lam name.x)", "ArityError"),
    ("(Foo x)", "UnknownConstructor"),
    ("(Var tvar.x)", "SortError"),
    ("(Var x", "SyntaxError"),
])
def test_parse_term_errors(text, code):
    spec = parse_spec(corpus.text("lam"))
    with pytest.raises(SpecError) as exc:
        parse_term(spec, "lam", text)
    assert exc.value.diagnostics[0].code == code


def test_parse_term_type_scheme():
    spec = parse_spec(corpus.text("tysch"))
    a = Atom("tvar", "a")
    t = parse_term(spec, "tsc", "(TAll tvar.a (TVar tvar.a))")
    assert t == Term("TAll", [frozenset({a}), Term("TVar", [a])])


def test_parse_term_primitives():
    spec = parse_spec(corpus.text("corehaskell"))
    t = parse_term(spec, "trm", '(K "Just")')
    assert t.args == ("Just",)


def test_parse_perm_pairs():
    spec = parse_spec(corpus.text("lam"))
    x, y = Atom("name", "x"), Atom("name", "y")
    assert parse_perm_pairs(spec, "(x y)(y name.z)") == [(x, y), (y, Atom("name", "z"))]
    assert parse_perm_pairs(spec, "") == []
    with pytest.raises(SpecError):
        parse_perm_pairs(spec, "(x tvar.y)")
