import pytest

from repfinite.detector import (Answer, DegreeBoundViolation, _check_degree,
                                candidate_coefs, detect)
from repfinite.fields import GF, QQ
from repfinite.freealg import NcPoly, Presentation, parse_presentation
from repfinite.groebner import buchberger, normal_form
from repfinite.matrices import rel_entries
from repfinite.poly import GrevLex

FREE_ONE = Presentation(QQ, ("X",), ())
FREE_TWO = Presentation(QQ, ("X", "Y"), ())
INVOLUTION = Presentation(QQ, ("X",), (NcPoly({(1, 1): 1, (): -1}),))
UNIT = Presentation(QQ, ("X",), (NcPoly.constant(1),))
PSL2Z = parse_presentation(
    "field Q\ndim 3\ngens X Y\nrel X^2 - 1\nrel Y^3 - 1\n")[0]


def test_free_algebra_dim1_infinite():
    v = detect(FREE_ONE, 1)
    assert v.answer is Answer.INFINITE
    assert v.witness is not None
    assert v.witness.poly == -v.ring.var("x11")
    assert v.witness.coef_index == 0


def test_free_algebra_dim2_infinite():
    v = detect(FREE_ONE, 2)
    assert v.answer is Answer.INFINITE
    # first candidate is the trace, already non-algebraic
    assert v.witness.source_word == (1,)


def test_unit_relation_finite():
    v = detect(UNIT, 2)
    assert v.answer is Answer.FINITE
    assert v.witness is None
    assert all(o.algebraic for o in v.log)


def test_involution_dim2_finite():
    v = detect(INVOLUTION, 2, all_coefficients=True)
    assert v.answer is Answer.FINITE
    assert len(v.log) == v.num_candidates
    assert all(o.algebraic for o in v.log)


def test_involution_annihilators_pull_back():
    v = detect(INVOLUTION, 2, all_coefficients=True)
    rels = rel_entries(INVOLUTION, 2, v.ring)
    gb = buchberger(rels, GrevLex())
    for cand, ann in v.annihilators.items():
        if ann.is_constant():
            continue
        pulled = ann.substitute("v", cand.poly)
        assert normal_form(pulled, list(gb), GrevLex()).is_zero()


def test_two_free_generators_dim1_infinite():
    v = detect(FREE_TWO, 1)
    assert v.answer is Answer.INFINITE


def test_candidate_counts_dim3():
    deduped = candidate_coefs(PSL2Z, 3)
    raw = candidate_coefs(PSL2Z, 3, cyclic_dedup=False)
    assert len(deduped) == 27
    assert len(raw) == 42
    assert {c.poly for c in deduped} <= {c.poly for c in raw}


def test_candidates_sorted_by_degree():
    cands = candidate_coefs(PSL2Z, 3)
    degs = [c.degree for c in cands]
    assert degs == sorted(degs)
    assert all(c.degree == c.poly.total_degree() for c in cands)


def test_candidate_labels():
    cands = candidate_coefs(PSL2Z, 3)
    assert cands[0].label(("X", "Y")) == "coef[0] of charpoly(X)"


def test_word_counts_recorded():
    v = detect(UNIT, 3)
    assert v.num_words == 3  # x, x^2, x^3 collapse to 3 cyclic classes
    v2 = detect(UNIT, 3, cyclic_dedup=False)
    assert v2.num_words == 3


def test_verdict_independent_of_dedup():
    for pres in (FREE_ONE, INVOLUTION, UNIT):
        a = detect(pres, 2).answer
        b = detect(pres, 2, cyclic_dedup=False).answer
        assert a == b


def test_verdict_independent_of_processing_order():
    # the answer quantifies over the whole candidate set, so retesting in
    # reverse order must agree with detect's cheapest-first scan
    from repfinite.groebner import is_algebraic_mod_ideal
    for pres in (FREE_TWO, INVOLUTION):
        v = detect(pres, 2, all_coefficients=True)
        ring = v.ring
        rels = rel_entries(pres, 2, ring)
        reversed_any_nonalg = any(
            not is_algebraic_mod_ideal(c.poly, rels).algebraic
            for c in reversed(candidate_coefs(pres, 2, ring)))
        assert reversed_any_nonalg == (v.answer is Answer.INFINITE)


def test_appending_unit_relation_forces_finite():
    for pres in (FREE_ONE, FREE_TWO, INVOLUTION):
        forced = Presentation(pres.field, pres.generator_names,
                              pres.relations + (NcPoly.constant(1),))
        assert detect(forced, 2).answer is Answer.FINITE


def test_verdict_same_over_f5():
    v = detect(INVOLUTION.with_field(GF(5)), 2, all_coefficients=True)
    assert v.answer is Answer.FINITE


def test_degree_bound_guard():
    v = detect(INVOLUTION, 2)
    assert v.degree_bound == max(4, 2)
    assert v.max_generator_degree <= v.degree_bound
    with pytest.raises(DegreeBoundViolation):
        ring = v.ring
        _check_degree(ring.var("x11") ** 9, v.degree_bound, "probe")


def test_invalid_dimension():
    with pytest.raises(ValueError):
        detect(FREE_ONE, 0)
    with pytest.raises(ValueError):
        candidate_coefs(FREE_ONE, 0)


def test_concurrent_matches_serial():
    for pres in (FREE_ONE, INVOLUTION):
        serial = detect(pres, 2, all_coefficients=True)
        parallel = detect(pres, 2, all_coefficients=True, threads=2)
        assert parallel.concurrent
        assert parallel.answer == serial.answer
        assert [(o.candidate.poly, o.algebraic) for o in parallel.log] == \
               [(o.candidate.poly, o.algebraic) for o in serial.log]


def test_trace_callback_invoked():
    lines = []
    detect(INVOLUTION, 2, trace=lines.append)
    assert any("relation entries" in ln for ln in lines)
    assert any("algebraic" in ln for ln in lines)
