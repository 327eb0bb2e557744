"""Top-level detection: does the algebra have infinitely many equivalence
classes of semisimple n-dimensional representations?

Builds the candidate characteristic coefficients, tests each one for
algebraicity modulo the relation ideal, and reports the verdict with a
per-coefficient log.  Finite includes the zero-representation case: the
question answered is exactly "how many classes in dimension n".
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field as dc_field

from .freealg import Presentation, Word, cyclic_representatives, words_up_to
from .groebner import (AlgebraicityResult, GroebnerBasis, buchberger,
                       is_algebraic_mod_ideal, normal_form)
from .matrices import char_poly, eval_word, rel_entries
from .poly import BlockEliminate, Polynomial, Ring, coordinate_ring


class Answer(enum.Enum):
    INFINITE = "infinite"
    FINITE = "finite"


@dataclass(frozen=True)
class CandidateCoefficient:
    """One nonscalar characteristic coefficient to be tested."""

    poly: Polynomial
    source_word: Word
    coef_index: int  # 0 names the lambda^(n-1) coefficient, n-1 the constant
    degree: int

    def label(self, gen_names) -> str:
        word = "*".join(gen_names[l - 1] for l in self.source_word)
        return f"coef[{self.coef_index}] of charpoly({word})"


@dataclass(frozen=True)
class CoefficientOutcome:
    candidate: CandidateCoefficient
    algebraic: bool
    seconds: float
    annihilator: Polynomial | None = None


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    witness: CandidateCoefficient | None
    log: tuple
    ring: Ring
    num_words: int
    num_candidates: int
    max_generator_degree: int
    degree_bound: int
    concurrent: bool = False

    @property
    def annihilators(self):
        return {o.candidate: o.annihilator for o in self.log
                if o.algebraic and o.annihilator is not None}


class DegreeBoundViolation(RuntimeError):
    """A membership-test generator exceeded the max(n^2, e) degree bound."""


def candidate_coefs(pres: Presentation, n: int, ring: Ring | None = None,
                    cyclic_dedup: bool = True):
    """Nonscalar characteristic coefficients of words of length 1..n,
    deduplicated and sorted cheapest-first."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if ring is None:
        ring = coordinate_ring(pres.field, n, pres.num_generators,
                               pres.generator_names)
    words = words_up_to(pres.num_generators, n)
    if cyclic_dedup:
        words = cyclic_representatives(words)
    out = []
    seen = set()
    for word_pos, w in enumerate(words):
        coefs = char_poly(eval_word(ring, w, n)).coefs
        for idx, p in enumerate(coefs):
            if p.is_constant():
                continue
            if cyclic_dedup:
                # syntactic duplicates are merged; without the cyclic flag we
                # keep one candidate per (word, index) for fidelity counts
                if p in seen:
                    continue
                seen.add(p)
            out.append((p.total_degree(), word_pos, idx, p, w))
    out.sort(key=lambda t: t[:3])
    return [CandidateCoefficient(p, w, idx, deg)
            for deg, _, idx, p, w in out]


def _check_degree(poly: Polynomial, bound: int, what: str):
    d = poly.total_degree()
    if d > bound:
        raise DegreeBoundViolation(
            f"{what} has total degree {d} > bound {bound}")
    return d


def _affine_transport(reduced: Polynomial, seen, ring: Ring):
    """Reuse a verdict when reduced = alpha * r + beta for a tested residue r.

    Algebraicity is invariant under invertible affine maps of the candidate:
    if p(r) lies in the ideal then p((v - beta)/alpha) annihilates
    alpha*r + beta.
    """
    field = ring.field
    for r, res in seen:
        if len(r.terms) != len(reduced.terms):
            continue
        m = next((mo for mo in r.terms if any(mo)), None)
        if m is None or m not in reduced.terms:
            continue
        alpha = field.div(reduced.terms[m], r.terms[m])
        diff = reduced - r.scale(alpha)
        if not diff.is_constant():
            continue
        if not res.algebraic:
            return AlgebraicityResult(False, None)
        ann = res.annihilator
        if ann is not None and not ann.is_constant():
            vvar = ring.var(ring.variables[ring.aux_index])
            beta = diff.constant_value()
            pre = (vvar - ring.constant(beta)).scale(field.inv(alpha))
            ann = ann.substitute(ring.variables[ring.aux_index].name, pre)
        return AlgebraicityResult(True, ann)
    return None


def detect(pres: Presentation, n: int, *,
           all_coefficients: bool = False,
           cyclic_dedup: bool = True,
           threads: int = 1,
           trace=None) -> Verdict:
    """Run the full test and return the verdict.

    Processing stops at the first non-algebraic coefficient unless
    all_coefficients is set; the verdict itself does not depend on the
    processing order.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    ring = coordinate_ring(pres.field, n, pres.num_generators,
                           pres.generator_names)
    relations = rel_entries(pres, n, ring)
    bound = max(n * n, pres.max_relation_degree())
    max_deg = 0
    for r in relations:
        max_deg = max(max_deg, _check_degree(r, bound, "relation entry"))
    candidates = candidate_coefs(pres, n, ring, cyclic_dedup)
    for c in candidates:
        max_deg = max(max_deg, _check_degree(c.poly, bound,
                                             "candidate coefficient"))
    num_words = len(cyclic_representatives(
        words_up_to(pres.num_generators, n)) if cyclic_dedup
        else words_up_to(pres.num_generators, n))
    order = BlockEliminate(frozenset(ring.coordinate_indices))
    if trace:
        trace(f"{len(relations)} relation entries, "
              f"{len(candidates)} candidate coefficients")
    t0 = time.monotonic()
    rel_basis = buchberger(relations, order, ring=ring, trace=trace)
    if trace:
        trace(f"relation-ideal basis: {len(rel_basis)} elements "
              f"in {time.monotonic() - t0:.2f}s")
    if threads > 1:
        return _detect_concurrent(pres, ring, relations, rel_basis, candidates,
                                  order, all_coefficients, threads,
                                  num_words, max_deg, bound)
    log = []
    witness = None
    exact_cache = {}
    tested = []  # residues that went through a full run, for affine reuse
    for c in candidates:
        t0 = time.monotonic()
        reduced = normal_form(c.poly, list(rel_basis.generators), order)
        res = exact_cache.get(reduced)
        if res is None and not reduced.is_constant():
            res = _affine_transport(reduced, tested, ring)
        if res is None:
            res = is_algebraic_mod_ideal(reduced, relations,
                                         rel_basis=rel_basis, trace=trace)
            tested.append((reduced, res))
        exact_cache[reduced] = res
        log.append(CoefficientOutcome(c, res.algebraic,
                                      time.monotonic() - t0,
                                      res.annihilator))
        if trace:
            trace(f"{c.label(pres.generator_names)}: "
                  f"{'algebraic' if log[-1].algebraic else 'NOT algebraic'} "
                  f"({log[-1].seconds:.2f}s)")
        if not log[-1].algebraic:
            if witness is None:
                witness = c
            if not all_coefficients:
                break
    answer = Answer.INFINITE if witness is not None else Answer.FINITE
    return Verdict(answer, witness, tuple(log), ring, num_words,
                   len(candidates), max_deg, bound)


def _test_one(args):
    poly, relations, rel_gens, order = args
    basis = GroebnerBasis(tuple(rel_gens), order)
    res = is_algebraic_mod_ideal(poly, relations, rel_basis=basis)
    return res


def _detect_concurrent(pres, ring, relations, rel_basis, candidates, order,
                       all_coefficients, threads, num_words, max_deg, bound):
    import concurrent.futures as cf

    log = {}
    witness = None
    with cf.ProcessPoolExecutor(max_workers=threads) as pool:
        futures = {}
        for c in candidates:
            args = (c.poly, relations, tuple(rel_basis.generators), order)
            futures[pool.submit(_test_one, args)] = (c, time.monotonic())
        try:
            for fut in cf.as_completed(futures):
                c, t0 = futures[fut]
                res = fut.result()
                log[c] = CoefficientOutcome(c, res.algebraic,
                                            time.monotonic() - t0,
                                            res.annihilator)
                if not res.algebraic:
                    if witness is None:
                        witness = c
                    if not all_coefficients:
                        break
        finally:
            for fut in futures:
                fut.cancel()
    ordered = tuple(log[c] for c in candidates if c in log)
    answer = Answer.INFINITE if witness is not None else Answer.FINITE
    return Verdict(answer, witness, ordered, ring, num_words,
                   len(candidates), max_deg, bound, concurrent=True)
