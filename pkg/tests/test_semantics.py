import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import load, name, term
from nombind import corpus
from nombind.abstraction import CapExceeded
from nombind.nominal import act, compose, identity, invert, swap
from nombind.semantics import (
    EQ_ALPHA, EQ_SYNTACTIC, AlphaContext, TypeMismatch, alpha_bn, alpha_ty, alpha_variant, eval_bn,
    eval_fa_bn, eval_fa_ty, permute_bn, permute_term, supp_oracle,
)
from nombind.speclang import SpecError, parse_spec
from nombind.terms import Term
from nombind.testing import atom_pool, random_perm, random_term

x, y, z = name("x"), name("y"), name("z")


def L(text):
    return term("letrec", "trm", text)


def A(text):
    return term("letrec", "assn", text)


def test_invalid_spec_rejected():
    with pytest.raises(SpecError):
        AlphaContext(parse_spec(corpus.text("baz1")))


def test_permute_term():
    assert permute_term(swap(x, y), term("lam", "lam", "(Lam x (Var x))")) == term("lam", "lam", "(Lam y (Var y))")
    t = L("(Let (ACons x (Var z) ANil) (Var x))")
    assert permute_term(identity(), t) == t
    assert permute_term(swap(x, y), t) == L("(Let (ACons y (Var z) ANil) (Var y))")


def test_eval_bn():
    c = load("letrec")
    assert eval_bn(c, "bn", A("ANil")) == ()
    assert eval_bn(c, "bn", A("(ACons x (Var y) ANil)")) == (x,)
    p = load("letpat")
    assert eval_bn(p, "bn", term("letpat", "pat", "(PTup (PVar x) (PVar y))")) == (x, y)


def test_eval_fa_ty():
    c = load("letrec")
    assert eval_fa_ty(c, "trm", L("(Let (ACons x (Var x) ANil) (Var x))")) == {x}
    assert eval_fa_ty(c, "trm", L("(Let_rec (ACons x (Var x) ANil) (Var x))")) == frozenset()
    assert eval_fa_ty(load("lam"), "lam", term("lam", "lam", "(Var x)")) == {x}
    assert eval_fa_ty(c, "assn", A("(ACons x (Var y) ANil)")) == {x, y}


def test_eval_fa_bn():
    c = load("letrec")
    assert eval_fa_bn(c, "bn", A("ANil")) == frozenset()
    assert eval_fa_bn(c, "bn", A("(ACons x (Var y) ANil)")) == {y}
    assert eval_fa_bn(c, "bn", A("(ACons x (Var x) ANil)")) == {x}


def test_fa_bn_through_own_clause():
    c = load("bnexp")
    t = term("bnexp", "assn", "(ACons' x y (App (Var y) (Var z)) ANil')")
    assert eval_fa_bn(c, "bn", t) == {z}


def test_alpha_foo():
    c = load("foo")
    f = lambda s: term("foo", "foo", s)  # noqa: E731
    assert alpha_ty(c, "foo", f("(Foo1 {a, b} (Pair a b) (Pair a b))"), f("(Foo1 {a, b} (Pair a b) (Pair b a))")) is None
    assert alpha_ty(c, "foo", f("(Foo2 {a, b} (Pair a b) (Pair a b))"), f("(Foo2 {a, b} (Pair a b) (Pair b a))")) is not None


def test_alpha_lam_witness():
    c = load("lam")
    trace = alpha_ty(c, "lam", term("lam", "lam", "(Lam x (Var x))"), term("lam", "lam", "(Lam y (Var y))"))
    assert [w.permutation for w in trace.witnesses] == [swap(x, y)]


def test_alpha_type_mismatch():
    with pytest.raises(TypeMismatch):
        alpha_ty(load("letrec"), "trm", L("(Var x)"), A("ANil"))


def test_alpha_list_misc():
    c = load("misc")
    m = lambda s: term("misc", "trm", s)  # noqa: E731
    # one list binder over both bodies: the same renaming must work for both
    assert alpha_ty(c, "trm", m("(Foo1 x y (Var x) (Var y))"), m("(Foo1 y x (Var y) (Var x))")) is not None
    assert alpha_ty(c, "trm", m("(Foo2 x y (Var x) (Var x))"), m("(Foo2 x y (Var x) (Var y))")) is None


def test_alpha_bn():
    c = load("letrec")
    assert alpha_bn(c, "bn", A("(ACons x (Var y) ANil)"), A("(ACons z (Var y) ANil)"))
    assert not alpha_bn(c, "bn", A("(ACons x (Var y) ANil)"), A("(ACons x (Var z) ANil)"))
    assert alpha_bn(c, "bn", A("ANil"), A("ANil"))


def test_permute_bn():
    c = load("letrec")
    assert permute_bn(c, "bn", swap(x, y), A("(ACons x (Var x) ANil)")) == A("(ACons y (Var x) ANil)")
    t = A("(ACons x (Var x) ANil)")
    assert permute_bn(c, "bn", identity(), t) == t
    assert permute_bn(c, "bn", swap(x, y), A("ANil")) == A("ANil")


def test_supp_oracle():
    c = load("lam")
    lam = term("lam", "lam", "(Lam x (Var x))")
    assert supp_oracle(c, "lam", lam, EQ_ALPHA) == frozenset()
    assert supp_oracle(c, "lam", term("lam", "lam", "(Var x)"), EQ_ALPHA) == {x}
    assert supp_oracle(c, "lam", lam, EQ_SYNTACTIC) == {x}


def test_let_support_equation():
    # supp (Let as t) = (supp t - set (bn as)) U fa_bn as
    c = load("letrec")
    t = L("(Let (ACons x (Var y) (ACons y (Var z) ANil)) (App (Var x) (Var w)))")
    body = L("(App (Var x) (Var w))")
    as_ = A("(ACons x (Var y) (ACons y (Var z) ANil))")
    expect = (supp_oracle(c, "trm", body) - set(eval_bn(c, "bn", as_))) | eval_fa_bn(c, "bn", as_)
    assert supp_oracle(c, "trm", t) == expect == {name("w"), y, z}


def test_alpha_variant_examples():
    c = load("lam")
    v = alpha_variant(c, "lam", term("lam", "lam", "(Lam x (Var x))"), seed=0)
    assert v.args[0] not in {x} and v == Term("Lam", [v.args[0], Term("Var", [v.args[0]])])
    assert alpha_variant(c, "lam", term("lam", "lam", "(Var x)"), seed=0) == term("lam", "lam", "(Var x)")
    r = load("letrec")
    rec = L("(Let_rec (ACons x (Var x) ANil) (Var x))")
    let = L("(Let (ACons x (Var x) ANil) (Var x))")
    renamed = {s: alpha_variant(r, "trm", rec, seed=s) for s in range(6)}
    assert any(x not in v.atoms() for v in renamed.values())
    for s in range(6):
        v = alpha_variant(r, "trm", let, seed=s)
        assert alpha_ty(r, "trm", let, v) is not None
        # the free x inside the assignment survives
        assert v.args[0].args[1] == Term("Var", [x])


def test_alpha_variant_deterministic():
    c = load("letpat")
    t = term("letpat", "trm", "(Let_pat (PTup (PVar x) (PVar y)) (Var z) (App (Var x) (Var y)))")
    assert alpha_variant(c, "trm", t, seed=7) == alpha_variant(c, "trm", t, seed=7)


def test_cap_exceeded():
    c = AlphaContext(parse_spec(corpus.text("tysch")), cap=2)
    t = term("tysch", "tsc", "(TAll {a, b, c} (TFun (TVar a) (TFun (TVar b) (TVar c))))")
    with pytest.raises(CapExceeded):
        alpha_ty(c, "tsc", t, t)


spec_names = st.sampled_from(corpus.VALID)


def _draw(data):
    name_ = data.draw(spec_names)
    c = load(name_)
    ty = data.draw(st.sampled_from([t.name for t in c.spec.type_decls]))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    return c, ty, random_term(c.spec, ty, rng, depth=3), rng


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_congruence_with_permutation(data):
    c, ty, t, rng = _draw(data)
    v = alpha_variant(c, ty, t, seed=rng.randint(0, 99))
    pi = random_perm(atom_pool(c.spec), rng)
    assert alpha_ty(c, ty, permute_term(pi, t), permute_term(pi, v)) is not None


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_witness_relates_bodies(data):
    c, ty, t, rng = _draw(data)
    v = alpha_variant(c, ty, t, seed=rng.randint(0, 99))
    trace = alpha_ty(c, ty, t, v)
    back = alpha_ty(c, ty, v, t)
    assert trace is not None and back is not None
    assert len(trace.witnesses) == len(c.spec.ctor(t.ctor).clauses)
    for w in trace.witnesses:
        assert compose(w.permutation, invert(w.permutation)) == identity()


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_fa_within_atoms(data):
    c, ty, t, _ = _draw(data)
    assert eval_fa_ty(c, ty, t) <= t.atoms()
    assert act(swap(name("q1"), name("q2")), t) == t
