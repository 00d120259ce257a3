import dataclasses

import pytest

from qsymball.ncalg import (
    NcExpr,
    gen_expr,
    local_confluence_check,
    nc_equal,
    nc_mul,
    nc_star,
    normal_form,
    preset,
)
from qsymball.scalars import ONE, LaurentScalar

_q = LaurentScalar.q_pow

PRESETS = ("pol-matsym-q", "c-su2-q", "uq-sl2", "pol-c-q")


@pytest.mark.parametrize("name", PRESETS)
def test_defining_relations_rewrite_consistently(name):
    P = preset(name)
    for lhs, rhs in P.relations:
        assert nc_equal(lhs, rhs, P)


@pytest.mark.parametrize("name", PRESETS)
def test_local_confluence_degree_three(name):
    assert local_confluence_check(preset(name), max_deg=3) == []


def test_normal_form_orders_holomorphic_generators():
    P = preset("pol-matsym-q")
    z11, z21 = P.gen("z11"), P.gen("z21")
    # z21 z11 -> q^-2 z11 z21
    nf = normal_form(NcExpr.word(z21, z11), P)
    assert nf == NcExpr.word(z11, z21, coeff=_q(-2))


def test_star_is_an_antihomomorphism():
    P = preset("pol-matsym-q")
    a = gen_expr(P, "z11")
    b = gen_expr(P, "z21", star=True)
    lhs = nc_star(nc_mul(a, b, P), P)
    rhs = nc_mul(nc_star(b, P), nc_star(a, P), P)
    assert nc_equal(lhs, rhs, P)


def test_star_squares_to_identity():
    P = preset("pol-matsym-q")
    x = nc_mul(gen_expr(P, "z22"), gen_expr(P, "z11", star=True), P)
    assert nc_equal(nc_star(nc_star(x, P), P), x, P)


def test_multiplication_is_associative_after_rewriting():
    P = preset("pol-matsym-q")
    a, b, c = (gen_expr(P, n) for n in ("z22", "z21", "z11"))
    assert nc_equal(
        nc_mul(nc_mul(a, b, P), c, P), nc_mul(a, nc_mul(b, c, P), P), P
    )


def test_uq_sl2_commutator_relation():
    P = preset("uq-sl2")
    E, F, K = (gen_expr(P, n) for n in ("E", "F", "K"))
    Ki = gen_expr(P, "Kinv")
    dinv = LaurentScalar.delta_inv()
    lhs = nc_mul(E, F, P) - nc_mul(F, E, P)
    rhs = (K - Ki).scale(dinv)
    assert nc_equal(lhs, rhs, P)


def test_alias_z12_scales_z21():
    P = preset("pol-matsym-q")
    coeff, gen = P.aliases["z12"]
    assert gen == P.gen("z21")
    assert coeff == _q(1)


def test_gen_rejects_foreign_names():
    with pytest.raises(KeyError):
        preset("pol-c-q").gen("z11")


def test_dropping_a_rewrite_rule_is_detected():
    P = preset("pol-matsym-q")
    key = (P.gen("z21", star=True), P.gen("z21"))
    assert key in P.rules
    rules = {k: v for k, v in P.rules.items() if k != key}
    mutant = dataclasses.replace(P, name="pol-matsym-q-mutant", rules=rules)
    bad = [
        (lhs, rhs) for lhs, rhs in P.relations
        if not nc_equal(lhs, rhs, mutant)
    ]
    assert bad, "mutated presentation must fail at least one relation"
