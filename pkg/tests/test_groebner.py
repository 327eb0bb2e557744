import random
from fractions import Fraction

import pytest

from repfinite.fields import GF, QQ
from repfinite.groebner import (GroebnerBasis, buchberger, contains_one,
                                eliminate, is_algebraic_mod_ideal,
                                normal_form, s_poly)
from repfinite.oracles import naive_buchberger
from repfinite.poly import (BlockEliminate, GrevLex, Lex, coordinate_ring,
                            parse_poly)

from conftest import small_ring


def _pp(ring, text):
    return parse_poly(ring, text)


# ---------------------------------------------------------------- division


def test_normal_form_basic(ring_q):
    x = ring_q.var("x")
    assert normal_form(x ** 2, [x ** 2 - 1], GrevLex()) == ring_q.one()


def test_normal_form_to_zero(ring_q):
    x, y = ring_q.var("x"), ring_q.var("y")
    assert normal_form(x ** 2 * y - y, [x ** 2 - 1], GrevLex()).is_zero()


def test_normal_form_idempotent(ring_q):
    G = [_pp(ring_q, "x^2 - y"), _pp(ring_q, "y^2 - 1")]
    p = _pp(ring_q, "x^4*y + x*y^3 - 3*x + 1/2")
    r = normal_form(p, G, GrevLex())
    assert normal_form(r, G, GrevLex()) == r


def test_normal_form_no_divisible_terms(ring_q):
    order = GrevLex()
    G = [_pp(ring_q, "x^2 - y"), _pp(ring_q, "x*y - z")]
    p = _pp(ring_q, "x^3 + x^2*y + x*y^2 + 5")
    r = normal_form(p, G, order)
    lms = [g.leading_term(order)[0] for g in G]
    for m in r.terms:
        assert not any(all(a >= b for a, b in zip(m, lm)) for lm in lms)


def test_normal_form_exact_fractions(ring_q):
    x = ring_q.var("x")
    g = x ** 2 - ring_q.constant(Fraction(1, 3))
    r = normal_form(x ** 3, [g], GrevLex())
    assert r == x.scale(Fraction(1, 3))


def test_normal_form_linearity(ring_f5):
    rng = random.Random(7)
    G = [_pp(ring_f5, "x^2 + y"), _pp(ring_f5, "y^2 + 2*z")]
    for _ in range(10):
        p = ring_f5.from_terms({(rng.randrange(4), rng.randrange(4),
                                 rng.randrange(3)): rng.randrange(1, 5)
                                for _ in range(4)})
        q = ring_f5.from_terms({(rng.randrange(4), rng.randrange(4),
                                 rng.randrange(3)): rng.randrange(1, 5)
                                for _ in range(4)})
        lhs = normal_form(p + q, G, GrevLex())
        rhs = normal_form(p, G, GrevLex()) + normal_form(q, G, GrevLex())
        assert lhs == rhs


def test_s_poly_example(ring_q):
    f = _pp(ring_q, "x^2 - y")
    g = _pp(ring_q, "x*y - 1")
    assert s_poly(f, g, GrevLex()) == _pp(ring_q, "x - y^2")


def test_s_poly_zero_raises(ring_q):
    with pytest.raises(ValueError):
        s_poly(ring_q.zero(), ring_q.one(), GrevLex())


# ------------------------------------------------------------- buchberger


def test_buchberger_univariate(ring_q):
    gb = buchberger([_pp(ring_q, "x^2 - y"), _pp(ring_q, "x^3 - x")],
                    GrevLex())
    assert set(gb.generators) == {_pp(ring_q, "x^2 - y"),
                                  _pp(ring_q, "x*y - x"),
                                  _pp(ring_q, "y^2 - y")}


def test_buchberger_already_groebner(ring_q):
    G = [_pp(ring_q, "x^2 - 1"), _pp(ring_q, "y^2 - 1")]
    gb = buchberger(G, GrevLex())
    assert set(gb.generators) == set(G)


def test_buchberger_empty():
    ring = small_ring(QQ)
    assert buchberger([ring.zero()], GrevLex()).generators == ()


def test_buchberger_unit(ring_q):
    gb = buchberger([_pp(ring_q, "x"), _pp(ring_q, "x + 1")], GrevLex())
    assert gb.generators == (ring_q.one(),)
    assert gb.is_unit_ideal


def test_buchberger_monic_output(ring_f5):
    gb = buchberger([_pp(ring_f5, "3*x^2 + y"), _pp(ring_f5, "2*x*y + 1")],
                    GrevLex())
    for g in gb:
        assert g.leading_term(gb.order)[1] == 1


def test_contains_one(ring_q):
    assert contains_one([_pp(ring_q, "x"), _pp(ring_q, "x + 1")], GrevLex())
    assert not contains_one([_pp(ring_q, "x^2 - 1")], GrevLex())
    assert not contains_one([], GrevLex())


def test_basis_spolys_reduce_to_zero(ring_f5):
    gb = buchberger([_pp(ring_f5, "x^2 + y*z"), _pp(ring_f5, "x*z - y"),
                     _pp(ring_f5, "y^3 + x")], GrevLex())
    gens = list(gb)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            sp = s_poly(gens[i], gens[j], gb.order)
            assert normal_form(sp, gens, gb.order).is_zero()


def test_reduced_basis_is_autoreduced(ring_q):
    order = GrevLex()
    gb = buchberger([_pp(ring_q, "x^2 + y^2 + z^2 - 1"),
                     _pp(ring_q, "x*y - z"), _pp(ring_q, "y*z - x")], order)
    gens = list(gb)
    for i, g in enumerate(gens):
        rest = gens[:i] + gens[i + 1:]
        lms = [h.leading_term(order)[0] for h in rest]
        for m in g.terms:
            assert not any(all(a >= b for a, b in zip(m, lm)) for lm in lms)


# -------------------------------------------------- randomized oracle check


def _random_system(ring, rng, npolys, maxdeg=2):
    nv = len(ring.variables)
    out = []
    for _ in range(npolys):
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            m = [0] * nv
            for _ in range(rng.randrange(maxdeg + 1)):
                m[rng.randrange(nv)] += 1
            c = rng.randrange(-4, 5)
            if c:
                terms[tuple(m)] = terms.get(tuple(m), 0) + c
        out.append(ring.from_terms(terms))
    return out


@pytest.mark.parametrize("field,order", [
    (QQ, GrevLex()), (QQ, Lex()),
    (GF(5), GrevLex()), (GF(2), GrevLex()),
])
def test_engine_matches_naive_oracle(field, order):
    ring = small_ring(field)
    rng = random.Random(f"gb-{field.modulus}-{type(order).__name__}")
    for _ in range(25):
        F = _random_system(ring, rng, rng.randrange(2, 4))
        fast = buchberger(F, order)
        slow = naive_buchberger(F, order)
        assert set(fast.generators) == set(slow.generators)


def test_engine_matches_naive_block_order():
    ring = small_ring(QQ)
    rng = random.Random("gb-block")
    order = BlockEliminate(frozenset({0, 1}))
    for _ in range(15):
        F = _random_system(ring, rng, 2)
        fast = buchberger(F, order)
        slow = naive_buchberger(F, order)
        assert set(fast.generators) == set(slow.generators)


def test_membership_agrees_with_naive(ring_f5):
    rng = random.Random("member")
    order = GrevLex()
    for _ in range(10):
        F = _random_system(ring_f5, rng, 3)
        gb = buchberger(F, order)
        for f in F:
            assert normal_form(f, list(gb), order).is_zero()


# ------------------------------------------------------------- elimination


def test_eliminate_linear(ring_q):
    # x = y on the circle: the shadow is 2y^2 - 1
    out = eliminate([_pp(ring_q, "x^2 + y^2 - 1"), _pp(ring_q, "x - y")],
                    ["x"])
    assert out == [_pp(ring_q, "y^2 - 1/2")]


def test_eliminate_parametrized_curve(ring_q):
    # x = z^2, y = z^3  =>  y^2 = x^3
    out = eliminate([_pp(ring_q, "x - z^2"), _pp(ring_q, "y - z^3")], ["z"])
    assert _pp(ring_q, "x^3 - y^2") in out


def test_eliminate_nothing_left(ring_q):
    out = eliminate([_pp(ring_q, "x - y")], ["x", "y"])
    assert out == []


def test_eliminate_empty_input(ring_q):
    assert eliminate([], ["x"]) == []


# ----------------------------------------------------------- algebraicity


def _aux_ring(field, n=1, s=1):
    return coordinate_ring(field, n, s, ["X", "Y"][:s])


def test_is_algebraic_with_relation():
    ring = _aux_ring(QQ)
    x = ring.var("x11")
    res = is_algebraic_mod_ideal(x, [x ** 2 - 1])
    assert res.algebraic
    v = ring.var("v")
    assert normal_form(v ** 2 - 1, [res.annihilator], GrevLex()).is_zero() \
        or res.annihilator in (v - 1, v + 1, v ** 2 - 1)


def test_is_algebraic_annihilator_kills_candidate():
    ring = _aux_ring(GF(5))
    x = ring.var("x11")
    rels = [x ** 3 - x]
    res = is_algebraic_mod_ideal(x ** 2 + 1, rels)
    assert res.algebraic
    ann = res.annihilator
    # substituting the candidate for v must land in the relation ideal
    pulled = ann.substitute("v", x ** 2 + 1)
    assert normal_form(pulled, rels, GrevLex()).is_zero()


def test_free_variable_is_not_algebraic():
    ring = _aux_ring(QQ)
    x = ring.var("x11")
    res = is_algebraic_mod_ideal(x, [])
    assert not res.algebraic
    assert res.annihilator is None


def test_unit_relation_ideal_is_algebraic():
    ring = _aux_ring(QQ)
    x = ring.var("x11")
    res = is_algebraic_mod_ideal(x, [ring.one()])
    assert res.algebraic
    assert res.annihilator == ring.one()


def test_constant_candidate():
    ring = _aux_ring(QQ)
    res = is_algebraic_mod_ideal(ring.constant(3), [])
    assert res.algebraic


def test_warm_start_matches_cold():
    ring = _aux_ring(GF(7), n=1, s=2)
    x, y = ring.var("x11"), ring.var("y11")
    rels = [x ** 2 - 2, y ** 2 - x]
    order = BlockEliminate(frozenset(ring.coordinate_indices))
    warm = buchberger(rels, order)
    for cand in [x * y, x + y, x ** 3 * y]:
        cold = is_algebraic_mod_ideal(cand, rels)
        hot = is_algebraic_mod_ideal(cand, rels, rel_basis=warm)
        assert cold.algebraic == hot.algebraic


def test_rejects_aux_in_input():
    ring = _aux_ring(QQ)
    v = ring.var("v")
    with pytest.raises(ValueError):
        is_algebraic_mod_ideal(v, [])
    with pytest.raises(ValueError):
        is_algebraic_mod_ideal(ring.var("x11"), [v - 1])
