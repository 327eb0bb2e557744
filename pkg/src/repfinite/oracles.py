"""Deliberately naive reference implementations used to validate the engine.

These share the polynomial types but none of the optimized engine code:
textbook Buchberger with no pair pruning, cofactor-expansion characteristic
polynomials, and a linear-algebra search for annihilating polynomials.
They are test equipment, not part of the CLI pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .groebner import GroebnerBasis
from .matrices import CharCoefficients, GenericMatrix
from .poly import MonomialOrder, Polynomial, Ring


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _naive_reduce(p: Polynomial, G, order: MonomialOrder) -> Polynomial:
    ring = p.ring
    field = ring.field
    remainder = ring.zero()
    while not p.is_zero():
        m, c = p.leading_term(order)
        for g in G:
            gm, gc = g.leading_term(order)
            if _divides(gm, m):
                quot = Polynomial(ring, {tuple(x - y for x, y in zip(m, gm)):
                                         field.div(c, gc)})
                p = p - quot * g
                break
        else:
            lead = Polynomial(ring, {m: c})
            remainder = remainder + lead
            p = p - lead
    return remainder


def _naive_spoly(f, g, order):
    ring = f.ring
    field = ring.field
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    tf = Polynomial(ring, {tuple(a - b for a, b in zip(lcm, mf)): field.inv(cf)})
    tg = Polynomial(ring, {tuple(a - b for a, b in zip(lcm, mg)): field.inv(cg)})
    return tf * f - tg * g


def naive_buchberger(F, order: MonomialOrder) -> GroebnerBasis:
    """Textbook Buchberger: every pair, no criteria; reduced at the end."""
    G = [f for f in F if not f.is_zero()]
    if not G:
        return GroebnerBasis((), order)
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop(0)
        s = _naive_spoly(G[i], G[j], order)
        h = _naive_reduce(s, G, order)
        if not h.is_zero():
            G.append(h)
            pairs.extend((t, len(G) - 1) for t in range(len(G) - 1))
    # minimalize, then reduce every element against the others
    minimal = []
    for g in sorted(G, key=lambda h: order.key(h.leading_term(order)[0])):
        m, _ = g.leading_term(order)
        if not any(_divides(h.leading_term(order)[0], m) for h in minimal):
            minimal.append(g)
    reduced = [g.monic(order) for g in minimal]
    changed = True
    while changed:
        changed = False
        for i in range(len(reduced)):
            others = reduced[:i] + reduced[i + 1:]
            h = _naive_reduce(reduced[i], others, order) if others else reduced[i]
            h = h.monic(order)
            if h != reduced[i]:
                reduced[i] = h
                changed = True
    reduced.sort(key=lambda g: order.key(g.leading_term(order)[0]))
    return GroebnerBasis(tuple(reduced), order)


def charpoly_cofactor(M: GenericMatrix) -> CharCoefficients:
    """det(lambda*I - M) by Laplace cofactor expansion.

    Univariate polynomials in lambda are kept as coefficient lists
    (lambda^0 first) over the matrix's polynomial ring.
    """
    ring = M.ring
    n = M.dim

    def padd(a, b):
        out = [ring.zero()] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] = out[i] + c
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return out

    def pmul(a, b):
        out = [ring.zero()] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            for j, d in enumerate(b):
                out[i + j] = out[i + j] + c * d
        return out

    def pneg(a):
        return [-c for c in a]

    # entry (i, j) of lambda*I - M as a lambda-coefficient list
    entries = [[([-M.entries[i][j], ring.one()] if i == j
                 else [-M.entries[i][j]]) for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        acc = [ring.zero()]
        r = rows[0]
        for pos, c in enumerate(cols):
            minor = det(rows[1:], cols[:pos] + cols[pos + 1:])
            term = pmul(entries[r][c], minor)
            acc = padd(acc, term if pos % 2 == 0 else pneg(term))
        return acc

    coeffs = det(tuple(range(n)), tuple(range(n)))
    # coeffs is [c_0, ..., c_{n-1}, 1]; report non-leading ones, top first
    return CharCoefficients(tuple(reversed(coeffs[:-1])))


@dataclass(frozen=True)
class OracleVerdictBound:
    """Result of the bounded minimal-polynomial search."""

    min_poly: Polynomial | None  # monic, in the auxiliary variable; None if
    degree_bound: int            # nothing found up to the bound

    @property
    def found(self) -> bool:
        return self.min_poly is not None


def minpoly_search(c: Polynomial, rel_basis: GroebnerBasis, max_deg: int,
                   order: MonomialOrder | None = None) -> OracleVerdictBound:
    """Search for a monic univariate polynomial annihilating c modulo the
    relation ideal, by exact linear algebra on normal forms of powers.

    Semi-decision: finding a dependence proves algebraicity; not finding one
    up to max_deg proves nothing.
    """
    ring = c.ring
    field = ring.field
    order = order or rel_basis.order
    aux = ring.aux_index
    if aux is None:
        raise ValueError("ring has no auxiliary variable")
    G = list(rel_basis.generators)
    # rows[d]: normal form of c^d as a monomial->coeff dict, with an
    # augmented tail recording the combination of powers used
    echelon = []  # list of (pivot_mono, row_dict, combo list)
    power = ring.one()
    for d in range(max_deg + 1):
        nf = _naive_reduce(power, G, order) if G else power
        row = dict(nf.terms)
        combo = [field.zero] * (max_deg + 1)
        combo[d] = field.one
        for pivot, prow, pcombo in echelon:
            if pivot in row:
                factor = field.div(row[pivot], prow[pivot])
                for m, v in prow.items():
                    nv = field.sub(row.get(m, field.zero), field.mul(factor, v))
                    if nv:
                        row[m] = nv
                    else:
                        row.pop(m, None)
                combo = [field.sub(a, field.mul(factor, b))
                         for a, b in zip(combo, pcombo)]
        if not row:
            # dependence: sum combo[i] * c^i lies in the ideal
            lead = combo[d]
            v_poly = ring.zero()
            vvar = ring.var(ring.variables[aux])
            for i, a in enumerate(combo[:d + 1]):
                if a:
                    v_poly = v_poly + (vvar ** i).scale(field.div(a, lead))
            return OracleVerdictBound(v_poly, max_deg)
        pivot = max(row, key=order.key)
        echelon.append((pivot, row, combo))
        power = power * c
    return OracleVerdictBound(None, max_deg)
