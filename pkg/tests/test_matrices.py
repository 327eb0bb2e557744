import random

import pytest

from repfinite.fields import GF, QQ
from repfinite.freealg import cyclic_representatives, parse_presentation, words_up_to
from repfinite.matrices import (char_poly, eval_ncpoly, eval_word,
                                generic_matrix, matrix_from_values, rel_entries,
                                scalar_matrix, zero_matrix)
from repfinite.oracles import charpoly_cofactor
from repfinite.poly import coordinate_ring

PSL2Z = "field Q\ndim 3\ngens X Y\nrel X^2 - 1\nrel Y^3 - 1\n"
SL2_Q = ("field Q\ndim 3\ngens X Y\n"
         "rel (X*Y - Y*X)*X - X*(X*Y - Y*X) - 2*X\n"
         "rel (X*Y - Y*X)*Y - Y*(X*Y - Y*X) + 2*Y\n")


def test_generic_matrix_1x1():
    ring = coordinate_ring(QQ, 1, 1, ["X"])
    m = generic_matrix(ring, 1, 1)
    assert m.entries[0][0] == ring.var("x11")


def test_generic_matrix_entries_distinct():
    ring = coordinate_ring(QQ, 3, 2, ["X", "Y"])
    mx = generic_matrix(ring, 1, 3)
    my = generic_matrix(ring, 2, 3)
    vars_x = set().union(*(e.variables_used() for r in mx.entries for e in [r[0], r[1], r[2]]))
    vars_y = set().union(*(e.variables_used() for r in my.entries for e in [r[0], r[1], r[2]]))
    assert vars_x.isdisjoint(vars_y)
    assert len(vars_x) == 9 and len(vars_y) == 9


def test_eval_word_single():
    ring = coordinate_ring(QQ, 2, 2, ["X", "Y"])
    assert eval_word(ring, (1,), 2).entries == generic_matrix(ring, 1, 2).entries


def test_eval_word_1x1_product():
    ring = coordinate_ring(QQ, 1, 2, ["X", "Y"])
    m = eval_word(ring, (1, 2), 1)
    assert m.entries[0][0] == ring.var("x11") * ring.var("y11")


def test_eval_word_2x2_entry():
    ring = coordinate_ring(QQ, 2, 2, ["X", "Y"])
    m = eval_word(ring, (1, 2), 2)
    expect = (ring.var("x11") * ring.var("y11")
              + ring.var("x12") * ring.var("y21"))
    assert m.entries[0][0] == expect


def test_eval_ncpoly_psl2z_relation():
    pres, _ = parse_presentation(PSL2Z)
    ring = coordinate_ring(QQ, 3, 2, pres.generator_names)
    m = eval_ncpoly(ring, pres.relations[0], 3)
    x = generic_matrix(ring, 1, 3)
    expect = x * x - scalar_matrix(ring, 3, 1)
    assert m.entries == expect.entries


def test_eval_ncpoly_zero():
    from repfinite.freealg import NcPoly
    ring = coordinate_ring(QQ, 3, 1, ["X"])
    assert eval_ncpoly(ring, NcPoly(), 3).is_zero()


def test_rel_entries_psl2z():
    pres, _ = parse_presentation(PSL2Z)
    entries = rel_entries(pres, 3)
    assert len(entries) == 18
    assert sorted({e.total_degree() for e in entries}) == [2, 3]
    nvars = set()
    for e in entries:
        nvars |= e.variables_used()
    assert len(nvars) == 18


def test_rel_entries_unit_relation():
    from repfinite.freealg import NcPoly, Presentation
    pres = Presentation(QQ, ("X",), (NcPoly.constant(1),))
    entries = rel_entries(pres, 2)
    assert any(e.is_constant() for e in entries)


def test_rel_entries_free_algebra():
    from repfinite.freealg import Presentation
    pres = Presentation(QQ, ("X",), ())
    assert rel_entries(pres, 3) == []


def test_char_poly_2x2_numeric():
    ring = coordinate_ring(QQ, 2, 1, ["W"])
    M = matrix_from_values(ring, [[1, 2], [3, 4]])
    coefs = char_poly(M).coefs
    assert [str(c) for c in coefs] == ["-5", "-2"]


def test_char_poly_generic_3x3_formula():
    ring = coordinate_ring(QQ, 3, 1, ["W"])
    M = generic_matrix(ring, 1, 3)
    coefs = char_poly(M).coefs
    w = {f"w{i}{j}": ring.var(f"w{i}{j}") for i in (1, 2, 3) for j in (1, 2, 3)}
    trace = w["w11"] + w["w22"] + w["w33"]
    second = (w["w11"] * w["w22"] + w["w11"] * w["w33"] + w["w22"] * w["w33"]
              - w["w12"] * w["w21"] - w["w13"] * w["w31"] - w["w23"] * w["w32"])
    assert coefs[0] == -trace
    assert coefs[1] == second
    # lambda^0 coefficient is -det
    det = sum(
        (sign * w[f"w1{a}"] * w[f"w2{b}"] * w[f"w3{c}"]
         for (a, b, c), sign in [((1, 2, 3), 1), ((2, 3, 1), 1), ((3, 1, 2), 1),
                                 ((3, 2, 1), -1), ((1, 3, 2), -1), ((2, 1, 3), -1)]),
        ring.zero())
    assert coefs[2] == -det


def test_char_poly_identity_f2():
    ring = coordinate_ring(GF(2), 3, 1, ["W"])
    coefs = char_poly(scalar_matrix(ring, 3, 1)).coefs
    assert [str(c) for c in coefs] == ["1", "1", "1"]


def test_berkowitz_matches_cofactor_symbolic():
    for n in (1, 2, 3):
        ring = coordinate_ring(QQ, n, 1, ["W"])
        M = generic_matrix(ring, 1, n)
        assert char_poly(M).coefs == charpoly_cofactor(M).coefs


def test_berkowitz_matches_cofactor_numeric_f7():
    rng = random.Random(20240817)
    ring = coordinate_ring(GF(7), 4, 1, ["W"])
    for _ in range(25):
        M = matrix_from_values(ring, [[rng.randrange(7) for _ in range(4)]
                                      for _ in range(4)])
        assert char_poly(M).coefs == charpoly_cofactor(M).coefs


def test_cyclic_invariance_exhaustive_n2():
    ring = coordinate_ring(QQ, 2, 2, ["X", "Y"])
    for w in words_up_to(2, 3):
        base = char_poly(eval_word(ring, w, 2)).coefs
        for i in range(1, len(w)):
            rot = w[i:] + w[:i]
            assert char_poly(eval_word(ring, rot, 2)).coefs == base


def test_cyclic_invariance_spot_n3():
    ring = coordinate_ring(GF(5), 3, 2, ["X", "Y"])
    for w in [(1, 2), (1, 1, 2), (1, 2, 2)]:
        base = char_poly(eval_word(ring, w, 3)).coefs
        for i in range(1, len(w)):
            rot = w[i:] + w[:i]
            assert char_poly(eval_word(ring, rot, 3)).coefs == base


def test_cayley_hamilton_numeric_f5():
    rng = random.Random(99)
    for n in (1, 2, 3):
        ring = coordinate_ring(GF(5), n, 1, ["W"])
        for _ in range(10):
            M = matrix_from_values(ring, [[rng.randrange(5) for _ in range(n)]
                                          for _ in range(n)])
            coefs = char_poly(M).coefs
            acc = zero_matrix(ring, n)
            power = scalar_matrix(ring, n, 1)
            # lambda^0 coefficient first
            for c in reversed(coefs):
                acc = acc + power.scale(c.constant_value())
                power = power * M
            acc = acc + power
            assert acc.is_zero()


def test_char_coef_degree_bound():
    pres, _ = parse_presentation(PSL2Z)
    ring = coordinate_ring(QQ, 3, 2, pres.generator_names)
    for w in words_up_to(2, 3):
        for c in char_poly(eval_word(ring, w, 3)).coefs:
            assert c.total_degree() <= 9
