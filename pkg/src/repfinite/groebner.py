"""Buchberger engine: multivariate division, reduced Groebner bases,
ideal membership, elimination, and the algebraicity-mod-ideal test.

The engine packs exponent vectors into integers: one int encodes the
monomial ("vec", 16 bits per variable) and a second int is an order key
whose plain integer comparison realizes the active monomial order.  Both
are affine in the exponents, so products need only integer adds, and
divisibility is a single masked subtraction.  Coefficients are residues
over F_p and fraction-free integers (content-stripped) over Q.
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import FieldSpec
from .poly import (BlockEliminate, GrevLex, Lex, MonomialOrder, Polynomial,
                   Ring, block_eliminate)

_B = 16
_M = (1 << _B) - 1
_EXP_LIMIT = 1 << (_B - 1)


class _Packed:
    """Compiled monomial order for one ring: packing, keys, masks."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.vec_shift = [_B * (nvars - 1 - i) for i in range(nvars)]
        hi = 0
        for sh in self.vec_shift:
            hi |= (1 << (_B - 1)) << sh
        self.hi = hi
        if isinstance(order, BlockEliminate):
            front = sorted(order.front)
            back = [i for i in range(nvars) if i not in order.front]
            self.front_mask = 0
            for i in front:
                self.front_mask |= _M << self.vec_shift[i]
        elif isinstance(order, (GrevLex, Lex)):
            front = list(range(nvars))
            back = []
            self.front_mask = None
        else:
            raise TypeError(f"unsupported order {order!r}")
        weights = [0] * nvars
        const = 0
        offset = 0
        if isinstance(order, Lex):
            for slot, i in enumerate(reversed(front)):
                weights[i] = 1 << (_B * slot)
        else:
            # per block (back first, lowest bits): [deg][complement fields],
            # complement field of the largest-index variable most significant
            for blk in (back, front):
                if not blk:
                    continue
                for slot, i in enumerate(blk):
                    sh = offset + _B * slot
                    weights[i] -= 1 << sh
                    const += _M << sh
                offset += _B * len(blk) + 32
                for i in blk:
                    weights[i] += 1 << (offset - 32)
        self.weights = weights
        self.key_const = const

    def vec_of(self, mono) -> int:
        v = 0
        for e, sh in zip(mono, self.vec_shift):
            if e >= _EXP_LIMIT:
                raise OverflowError("exponent too large for packed monomials")
            v |= e << sh
        return v

    def key_of(self, mono) -> int:
        k = self.key_const
        for e, w in zip(mono, self.weights):
            if e:
                k += e * w
        return k

    def mono_of(self, vec: int):
        return tuple((vec >> sh) & _M for sh in self.vec_shift)

    def divides(self, avec: int, bvec: int) -> bool:
        return ((bvec | self.hi) - avec) & self.hi == self.hi

    def lcm_vec(self, avec: int, bvec: int) -> int:
        """Componentwise max of two packed monomials, branch-free: guard
        bits mark the fields where a >= b, expanded to field-wide masks."""
        guards = ((avec | self.hi) - bvec) & self.hi
        sel = (guards >> (_B - 1)) * _M
        return (avec & sel) | (bvec & ~sel)

    def key_of_vec(self, vec: int) -> int:
        k = self.key_const
        for sh, w in zip(self.vec_shift, self.weights):
            e = (vec >> sh) & _M
            if e:
                k += e * w
        return k

    def lcm(self, avec: int, bvec: int):
        """(key, vec) of the lcm of two packed monomials."""
        m = self.lcm_vec(avec, bvec)
        return self.key_of_vec(m), m


def compile_order(ring: Ring, order: MonomialOrder) -> _Packed:
    return _Packed(ring.nvars, order)


# ---------------------------------------------------------------------------
# Engine polynomials: lists of (key, vec, coeff), sorted descending by key
# ---------------------------------------------------------------------------


def _to_engine_fp(poly: Polynomial, P: _Packed):
    terms = [(P.key_of(m), P.vec_of(m), c) for m, c in poly.terms.items()]
    terms.sort(reverse=True)
    return terms


def _to_engine_zz(poly: Polynomial, P: _Packed):
    denlcm = 1
    for c in poly.terms.values():
        d = c.denominator
        denlcm = denlcm * d // gcd(denlcm, d)
    ints = {m: int(c * denlcm) for m, c in poly.terms.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    terms = [(P.key_of(m), P.vec_of(m), c // g if g > 1 else c)
             for m, c in ints.items()]
    terms.sort(reverse=True)
    return terms


def _from_engine(terms, P: _Packed, ring: Ring, monic: bool = True):
    if not terms:
        return ring.zero()
    lc = terms[0][2]
    f = ring.field
    if f.modulus is None:
        if monic:
            return Polynomial(ring, {P.mono_of(v): Fraction(c, lc)
                                     for _, v, c in terms})
        return Polynomial(ring, {P.mono_of(v): Fraction(c) for _, v, c in terms})
    if monic and lc != 1:
        inv = pow(lc, -1, f.modulus)
        return Polynomial(ring, {P.mono_of(v): c * inv % f.modulus
                                 for _, v, c in terms})
    return Polynomial(ring, {P.mono_of(v): c for _, v, c in terms})


def _normalize_fp(terms, p):
    """Scale to a monic term list."""
    lc = terms[0][2]
    if lc != 1:
        inv = pow(lc, -1, p)
        terms = [(k, v, c * inv % p) for k, v, c in terms]
    return terms


def _normalize_zz(terms):
    """Strip integer content; make the leading coefficient positive."""
    g = 0
    for _, _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, v, c // g) for k, v, c in terms]
    return terms


_ZZ_STRIP_BITS = 2048


def _reduce_fp(work, basis, view, hi, p, ordered_view):
    """Fully reduce a term list modulo monic basis elements.

    basis[i] = (lmkey, lmvec, terms, lc); view lists (lmkey, idx) and is
    either sorted ascending by lmkey (engine mode, first-match wins) or in
    caller-given index order (public tie-break).
    """
    out = []
    pos = 0
    while pos < len(work):
        k, v, c = work[pos]
        vh = v | hi
        gidx = -1
        for lk, t in view:
            if lk > k:
                if ordered_view:
                    break
                continue
            if (vh - basis[t][1]) & hi == hi:
                gidx = t
                break
        if gidx < 0:
            out.append((k, v, c))
            pos += 1
            continue
        lmk, lmv, gterms, _ = basis[gidx]
        dk = k - lmk
        dv = v - lmv
        res = []
        i = pos + 1
        j = 1
        wl = len(work)
        gl = len(gterms)
        while i < wl and j < gl:
            wk = work[i][0]
            gt = gterms[j]
            gk = gt[0] + dk
            if wk > gk:
                res.append(work[i])
                i += 1
            elif wk < gk:
                res.append((gk, gt[1] + dv, -c * gt[2] % p))
                j += 1
            else:
                nc = (work[i][2] - c * gt[2]) % p
                if nc:
                    res.append((wk, work[i][1], nc))
                i += 1
                j += 1
        if i < wl:
            res.extend(work[i:])
        while j < gl:
            gt = gterms[j]
            res.append((gt[0] + dk, gt[1] + dv, -c * gt[2] % p))
            j += 1
        work = res
        pos = 0
    return out


def _reduce_zz(work, basis, view, hi, ordered_view):
    """Fraction-free full reduction over the integers.

    Returns (terms, multiplier): terms represent multiplier * input reduced
    by the basis; the multiplier is an exact rational bookkeeping value.
    """
    out = []
    mult = Fraction(1)
    pos = 0
    while pos < len(work):
        k, v, c = work[pos]
        vh = v | hi
        gidx = -1
        for lk, t in view:
            if lk > k:
                if ordered_view:
                    break
                continue
            if (vh - basis[t][1]) & hi == hi:
                gidx = t
                break
        if gidx < 0:
            out.append((k, v, c))
            pos += 1
            continue
        lmk, lmv, gterms, glc = basis[gidx]
        d = gcd(c, glc)
        a = glc // d
        b = c // d
        if a < 0:
            a, b = -a, -b
        dk = k - lmk
        dv = v - lmv
        if a != 1:
            mult *= a
            if out:
                out = [(k2, v2, a * c2) for k2, v2, c2 in out]
        res = []
        i = pos + 1
        j = 1
        wl = len(work)
        gl = len(gterms)
        while i < wl and j < gl:
            wk = work[i][0]
            gt = gterms[j]
            gk = gt[0] + dk
            if wk > gk:
                res.append((wk, work[i][1], a * work[i][2]))
                i += 1
            elif wk < gk:
                res.append((gk, gt[1] + dv, -b * gt[2]))
                j += 1
            else:
                nc = a * work[i][2] - b * gt[2]
                if nc:
                    res.append((wk, work[i][1], nc))
                i += 1
                j += 1
        while i < wl:
            res.append((work[i][0], work[i][1], a * work[i][2]))
            i += 1
        while j < gl:
            gt = gterms[j]
            res.append((gt[0] + dk, gt[1] + dv, -b * gt[2]))
            j += 1
        if res and abs(res[0][2]).bit_length() > _ZZ_STRIP_BITS:
            g = 0
            for _, _, c2 in res:
                g = gcd(g, c2)
                if g == 1:
                    break
            for _, _, c2 in out:
                if g == 1:
                    break
                g = gcd(g, c2)
            if g > 1:
                res = [(k2, v2, c2 // g) for k2, v2, c2 in res]
                out = [(k2, v2, c2 // g) for k2, v2, c2 in out]
                mult /= g
        work = res
        pos = 0
    return out, mult


def _find_reducer(k, vec, G, view, hi, cache):
    """Index of a basis element whose lm divides vec, or -1.

    Unseen monomials scan the key-sorted view and stop once every remaining
    leading monomial exceeds the target (a divisor never has a larger key).
    A negative cache entry records how much of the basis it has seen, so
    only elements added since are rescanned.  Sound because G only ever
    grows during a run.
    """
    n = len(G)
    hit = cache.get(vec)
    vh = vec | hi
    if hit is not None:
        ver, t = hit
        if t >= 0:
            return t
        if ver == n:
            return -1
        for t in range(ver, n):
            if (vh - G[t][1]) & hi == hi:
                cache[vec] = (n, t)
                return t
        cache[vec] = (n, -1)
        return -1
    for lk, t in view:
        if lk > k:
            break
        if (vh - G[t][1]) & hi == hi:
            cache[vec] = (n, t)
            return t
    cache[vec] = (n, -1)
    return -1


def _reduce_fp_cached(work, G, view, hi, p, cache):
    """Engine-mode full reduction over F_p with a shared divisor cache.

    The working polynomial lives in a key->coeff dict with a max-heap of
    keys, so one reduction step costs O(|reducer|) rather than a full copy
    of the tail.  The order key determines the monomial (every exponent
    occupies its own bit field), so keys double as term identities; newly
    created keys are always smaller than the one being cleared, hence the
    output comes out sorted.
    """
    coeffs = {}
    vecs = {}
    for k, v, c in work:
        coeffs[k] = c
        vecs[k] = v
    heap = [-k for k in coeffs]
    heapq.heapify(heap)
    out = []
    cget = cache.get
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        k = -pop(heap)
        c = coeffs.get(k)
        if c is None:
            continue
        v = vecs[k]
        hit = cget(v)
        if hit is not None and hit[1] >= 0:
            gidx = hit[1]
        else:
            gidx = _find_reducer(k, v, G, view, hi, cache)
        if gidx < 0:
            out.append((k, v, c))
            del coeffs[k]
            continue
        del coeffs[k]
        lmk, lmv, gterms, _ = G[gidx]
        dk = k - lmk
        dv = v - lmv
        for gt in gterms[1:]:
            nk = gt[0] + dk
            old = coeffs.get(nk)
            if old is None:
                nc = -c * gt[2] % p
                if nc:
                    coeffs[nk] = nc
                    vecs[nk] = gt[1] + dv
                    push(heap, -nk)
            else:
                nc = (old - c * gt[2]) % p
                if nc:
                    coeffs[nk] = nc
                else:
                    del coeffs[nk]
    return out


def _reduce_f2_cached(work, G, view, hi, cache):
    """Engine-mode reduction over F_2: every coefficient is 1, so the
    working polynomial is just a set of keys and a cancellation is a
    membership toggle."""
    present = set()
    vecs = {}
    for k, v, _ in work:
        present.add(k)
        vecs[k] = v
    heap = [-k for k in present]
    heapq.heapify(heap)
    out = []
    cget = cache.get
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        k = -pop(heap)
        if k not in present:
            continue
        v = vecs[k]
        hit = cget(v)
        if hit is not None and hit[1] >= 0:
            gidx = hit[1]
        else:
            gidx = _find_reducer(k, v, G, view, hi, cache)
        present.discard(k)
        if gidx < 0:
            out.append((k, v, 1))
            continue
        lmk, lmv, gterms, _ = G[gidx]
        dk = k - lmk
        dv = v - lmv
        for gt in gterms[1:]:
            nk = gt[0] + dk
            if nk in present:
                present.discard(nk)
            else:
                present.add(nk)
                vecs[nk] = gt[1] + dv
                push(heap, -nk)
    return out


def _reduce_qq_cached(work, G, view, hi, cache):
    """Engine-mode full reduction over Q, heap-structured like the F_p
    version.  Working coefficients are exact rationals; the result is
    converted back to content-free integers for basis storage."""
    coeffs = {}
    vecs = {}
    for k, v, c in work:
        coeffs[k] = Fraction(c)
        vecs[k] = v
    heap = [-k for k in coeffs]
    heapq.heapify(heap)
    out = []
    cget = cache.get
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        k = -pop(heap)
        c = coeffs.get(k)
        if c is None:
            continue
        v = vecs[k]
        hit = cget(v)
        if hit is not None and hit[1] >= 0:
            gidx = hit[1]
        else:
            gidx = _find_reducer(k, v, G, view, hi, cache)
        if gidx < 0:
            out.append((k, v, c))
            del coeffs[k]
            continue
        del coeffs[k]
        lmk, lmv, gterms, glc = G[gidx]
        factor = c / glc
        dk = k - lmk
        dv = v - lmv
        for gt in gterms[1:]:
            nk = gt[0] + dk
            old = coeffs.get(nk)
            if old is None:
                coeffs[nk] = -factor * gt[2]
                vecs[nk] = gt[1] + dv
                push(heap, -nk)
            else:
                nc = old - factor * gt[2]
                if nc:
                    coeffs[nk] = nc
                else:
                    del coeffs[nk]
    if not out:
        return []
    denlcm = 1
    for _, _, c in out:
        d = c.denominator
        denlcm = denlcm * d // gcd(denlcm, d)
    ints = [(k, v, int(c * denlcm)) for k, v, c in out]
    g = 0
    for _, _, c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = [(k, v, c // g) for k, v, c in ints]
    return ints


def _spoly_terms(f, g, P: _Packed, p_mod):
    """S-polynomial of two engine polynomials (leading terms cancel)."""
    fk, fv, fc = f[0]
    gk, gv, gc = g[0]
    lk, lv = P.lcm(fv, gv)
    dfk, dfv = lk - fk, lv - fv
    dgk, dgv = lk - gk, lv - gv
    if p_mod is not None:
        # both monic
        a, b = 1, 1
    else:
        d = gcd(fc, gc)
        a, b = gc // d, fc // d
    acc = {}
    for k, v, c in f[1:]:
        acc[(k + dfk, v + dfv)] = a * c if p_mod is None else c
    for k, v, c in g[1:]:
        key = (k + dgk, v + dgv)
        prev = acc.get(key, 0)
        nc = prev - (b * c if p_mod is None else c)
        if p_mod is not None:
            nc %= p_mod
        if nc:
            acc[key] = nc
        else:
            acc.pop(key, None)
    terms = [(k, v, c) for (k, v), c in acc.items()]
    terms.sort(reverse=True)
    return terms


# ---------------------------------------------------------------------------
# Buchberger with Gebauer-Moller pair pruning
# ---------------------------------------------------------------------------


@dataclass
class _EngineResult:
    basis: list            # engine term lists (reduced iff completed)
    unit: bool = False
    back_member: list | None = None
    completed: bool = False
    pairs_processed: int = 0
    basis_additions: int = 0


class _Buchberger:
    def __init__(self, ring: Ring, order: MonomialOrder, trace=None,
                 sugar: bool = False):
        self.ring = ring
        self.order = order
        self.P = compile_order(ring, order)
        self.p_mod = ring.field.modulus
        self.trace = trace
        self.use_sugar = sugar
        self.G = []          # (lmkey, lmvec, terms, lc)
        self.sugar = []      # phantom degree per basis element
        self.lmdeg = []      # total degree of each leading monomial
        self.view = []       # (lmkey, idx) sorted ascending
        self.pair_lcm = {}   # (i, j) -> (lcmkey, lcmvec)
        self.heap = []
        self.stats_pairs = 0
        self.div_cache = {}  # vec -> (basis len when checked, reducer or -1)

    def _deg_of_vec(self, vec: int) -> int:
        return sum(self.P.mono_of(vec))

    def _normalize(self, terms):
        if self.p_mod is not None:
            return _normalize_fp(terms, self.p_mod)
        return _normalize_zz(terms)

    def _reduce(self, terms):
        if self.p_mod == 2:
            return _reduce_f2_cached(terms, self.G, self.view, self.P.hi,
                                     self.div_cache)
        if self.p_mod is not None:
            return _reduce_fp_cached(terms, self.G, self.view, self.P.hi,
                                     self.p_mod, self.div_cache)
        return _reduce_qq_cached(terms, self.G, self.view, self.P.hi,
                                 self.div_cache)

    def _append(self, terms, make_pairs: bool, sug: int | None = None):
        idx = len(self.G)
        self.G.append((terms[0][0], terms[0][1], terms, terms[0][2]))
        if sug is None:
            sug = max(self._deg_of_vec(v) for _, v, _ in terms)
        self.sugar.append(sug)
        self.lmdeg.append(self._deg_of_vec(terms[0][1]))
        insort(self.view, (terms[0][0], idx))
        if make_pairs:
            self._update_pairs(idx)
        return idx

    def _update_pairs(self, f_idx):
        P = self.P
        lf = self.G[f_idx][1]
        # Gebauer-Moller: prune existing pairs made redundant by lf
        drop = []
        for (i, j), (lk, lv) in self.pair_lcm.items():
            if P.divides(lf, lv):
                li = self.G[i][1]
                lj = self.G[j][1]
                if P.lcm(li, lf)[1] != lv and P.lcm(lj, lf)[1] != lv:
                    drop.append((i, j))
        for pr in drop:
            del self.pair_lcm[pr]
        # group candidate pairs by lcm, keep minimal lcms, apply the
        # coprimality criterion per group
        lcm_vec = P.lcm_vec
        G = self.G
        groups = {}
        for i in range(f_idx):
            lv = lcm_vec(G[i][1], lf)
            groups.setdefault(lv, []).append(i)
        keyed = sorted((P.key_of_vec(lv), lv) for lv in groups)
        minimal = []
        for lk, lv in keyed:
            if all(not P.divides(mv, lv) for _, mv in minimal):
                minimal.append((lk, lv))
        for lk, lv in minimal:
            members = groups[lv]
            if any(G[i][1] + lf == lv for i in members):
                continue  # coprime leading monomials: S-pair reduces to zero
            i = members[0]
            self.pair_lcm[(i, f_idx)] = (lk, lv)
            if self.use_sugar:
                ld = self._deg_of_vec(lv)
                sug = max(self.sugar[i] + ld - self.lmdeg[i],
                          self.sugar[f_idx] + ld - self.lmdeg[f_idx])
                heapq.heappush(self.heap, (sug, lk, i, f_idx))
            else:
                heapq.heappush(self.heap, (lk, i, f_idx))

    def seed(self, polys, assume_groebner_prefix=0):
        """Feed the initial generators; returns an early _EngineResult or None."""
        conv = _to_engine_fp if self.p_mod is not None else _to_engine_zz
        for count, poly in enumerate(polys):
            if poly.is_zero():
                continue
            terms = conv(poly, self.P)
            if count >= assume_groebner_prefix:
                terms = self._reduce(terms)
                if not terms:
                    continue
            terms = self._normalize(terms)
            res = self._check_special(terms)
            if res is not None:
                return res
            self._append(terms, make_pairs=count >= assume_groebner_prefix)
        return None

    def _check_special(self, terms):
        if terms[0][1] == 0:
            return _EngineResult([terms], unit=True)
        return None

    def run(self, stop_on_back_member=False) -> _EngineResult:
        P = self.P
        back_member = None
        while self.heap:
            entry = heapq.heappop(self.heap)
            i, j = entry[-2], entry[-1]
            if self.pair_lcm.pop((i, j), None) is None:
                continue  # stale heap entry
            s = _spoly_terms(self.G[i][2], self.G[j][2], P, self.p_mod)
            if not s:
                continue
            h = self._reduce(s)
            if not h:
                continue
            h = self._normalize(h)
            self.stats_pairs += 1
            if h[0][1] == 0:
                return _EngineResult([h], unit=True,
                                     pairs_processed=self.stats_pairs)
            if (P.front_mask is not None
                    and h[0][1] & P.front_mask == 0):
                back_member = h
                if stop_on_back_member:
                    return _EngineResult([g[2] for g in self.G],
                                         back_member=h,
                                         pairs_processed=self.stats_pairs)
            if self.trace is not None:
                self.trace(f"basis += lm {P.mono_of(h[0][1])}, "
                           f"{len(h)} terms, {len(self.heap)} pairs queued")
            self._append(h, make_pairs=True,
                         sug=entry[0] if self.use_sugar else None)
        basis = self._interreduce()
        if back_member is None and P.front_mask is not None:
            # a back-block element may have entered at seed time (e.g. the
            # seed reducer collapsed a generator into the back block), where
            # only the unit check runs; the finished basis settles it
            back_member = next((t for t in basis
                                if t[0][1] & P.front_mask == 0), None)
        return _EngineResult(basis, completed=True, back_member=back_member,
                             pairs_processed=self.stats_pairs,
                             basis_additions=len(self.G))

    def _interreduce(self):
        P = self.P
        # minimal basis: drop any element whose lm another's lm divides
        order_idx = sorted(range(len(self.G)), key=lambda t: self.G[t][0])
        kept = []
        for t in order_idx:
            lv = self.G[t][1]
            if any(P.divides(self.G[u][1], lv) for u in kept):
                continue
            kept.append(t)
        basis = [self.G[t] for t in kept]
        # tail-reduce each element against the others until stable
        changed = True
        while changed:
            changed = False
            for t in range(len(basis)):
                others = [b for u, b in enumerate(basis) if u != t]
                view = sorted((b[0], u) for u, b in enumerate(others))
                if self.p_mod is not None:
                    red = _reduce_fp(basis[t][2], others, view, P.hi,
                                     self.p_mod, True)
                else:
                    red, _ = _reduce_zz(basis[t][2], others, view, P.hi, True)
                red = self._normalize(red)
                if red != basis[t][2]:
                    basis[t] = (red[0][0], red[0][1], red, red[0][2])
                    changed = True
        basis.sort(key=lambda b: b[0])
        return [b[2] for b in basis]


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """A (reduced, monic) Groebner basis with its order."""

    generators: tuple
    order: MonomialOrder
    reduced: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


@dataclass(frozen=True)
class AlgebraicityResult:
    """Outcome of the algebraic-mod-ideal test for one candidate."""

    algebraic: bool
    annihilator: Polynomial | None = None


def normal_form(p: Polynomial, G, order: MonomialOrder) -> Polynomial:
    """Remainder of p on division by G: no term of the result is divisible
    by any leading monomial of G; ties go to the lowest-index divisor."""
    ring = p.ring
    gs = [g for g in G if not g.is_zero()]
    if p.is_zero() or not gs:
        return p
    P = compile_order(ring, order)
    if ring.field.modulus is not None:
        basis = []
        for g in gs:
            t = _normalize_fp(_to_engine_fp(g, P), ring.field.modulus)
            basis.append((t[0][0], t[0][1], t, t[0][2]))
        view = [(b[0], i) for i, b in enumerate(basis)]
        out = _reduce_fp(_to_engine_fp(p, P), basis, view, P.hi,
                         ring.field.modulus, False)
        return _from_engine(out, P, ring, monic=False)
    basis = []
    for g in gs:
        t = _to_engine_zz(g, P)
        basis.append((t[0][0], t[0][1], t, t[0][2]))
    view = [(b[0], i) for i, b in enumerate(basis)]
    out, mult = _reduce_zz(_to_engine_zz(p, P), basis, view, P.hi, False)
    # undo the fraction-free scaling and the integerization of p itself
    denlcm = 1
    for c in p.terms.values():
        d = c.denominator
        denlcm = denlcm * d // gcd(denlcm, d)
    ints = {m: int(c * denlcm) for m, c in p.terms.items()}
    g0 = 0
    for c in ints.values():
        g0 = gcd(g0, c)
    scale = Fraction(g0 if g0 else 1, denlcm) / mult
    return Polynomial(ring, {P.mono_of(v): Fraction(c) * scale
                             for _, v, c in out})


def s_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Classical S-polynomial: cancel leading terms via the lcm."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero polynomial")
    ring = f.ring
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    field = ring.field
    tf = Polynomial(ring, {tuple(a - b for a, b in zip(lcm, mf)): field.inv(cf)})
    tg = Polynomial(ring, {tuple(a - b for a, b in zip(lcm, mg)): field.inv(cg)})
    return tf * f - tg * g


def buchberger(F, order: MonomialOrder, *, ring: Ring | None = None,
               trace=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by F."""
    polys = [f for f in F if not f.is_zero()]
    if not polys:
        return GroebnerBasis((), order)
    ring = ring or polys[0].ring
    engine = _Buchberger(ring, order, trace=trace)
    res = engine.seed(polys)
    if res is None:
        res = engine.run()
    if res.unit:
        return GroebnerBasis((ring.one(),), order)
    gens = tuple(_from_engine(t, engine.P, ring) for t in res.basis)
    return GroebnerBasis(gens, order)


def contains_one(F, order: MonomialOrder) -> bool:
    """True iff the ideal generated by F is the unit ideal."""
    polys = [f for f in F if not f.is_zero()]
    if not polys:
        return False
    if any(f.is_constant() for f in polys):
        return True
    engine = _Buchberger(polys[0].ring, order)
    res = engine.seed(polys)
    if res is None:
        res = engine.run()
    return res.unit


def eliminate(F, eliminate_vars, *, ring: Ring | None = None):
    """Generators of <F> intersected with the subring omitting the given
    variables, via a block-elimination Groebner basis."""
    polys = [f for f in F if not f.is_zero()]
    if not polys:
        return []
    ring = ring or polys[0].ring
    idxs = frozenset(ring.index(v) if not isinstance(v, int) else v
                     for v in eliminate_vars)
    order = BlockEliminate(idxs)
    basis = buchberger(polys, order, ring=ring)
    P = compile_order(ring, order)
    out = []
    for g in basis:
        if all(m[i] == 0 for m in g.terms for i in idxs):
            out.append(g)
    return out


def is_algebraic_mod_ideal(c: Polynomial, rel_entries, *,
                           rel_basis=None, trace=None) -> AlgebraicityResult:
    """Decide whether c is algebraic modulo the relation ideal.

    Works in the ring extended by the auxiliary variable v: c is algebraic
    iff <rel_entries, c - v> meets k[v] nontrivially; the computation stops
    at the first basis element lying in k[v] alone.
    """
    ring = c.ring
    aux = ring.aux_index
    if aux is None:
        raise ValueError("ring has no auxiliary variable")
    if any(m[aux] for m in c.terms):
        raise ValueError("candidate coefficient must not involve the "
                         "auxiliary variable")
    for r in rel_entries:
        if any(m[aux] for m in r.terms):
            raise ValueError("relation entries must not involve the "
                             "auxiliary variable")
    order = BlockEliminate(frozenset(ring.coordinate_indices))
    engine = _Buchberger(ring, order, trace=trace)
    seed_polys = list(rel_basis.generators if rel_basis is not None
                      else rel_entries)
    prefix = len(seed_polys) if rel_basis is not None else 0
    if rel_basis is not None:
        # reducing c against the warm-start basis shrinks the new generator
        c = normal_form(c, seed_polys, order)
    if c.is_constant():
        cv = c.constant_value()
        annihilator = ring.var(ring.variables[aux]) - ring.constant(cv)
        return AlgebraicityResult(True, annihilator)
    seed_polys.append(c - ring.var(ring.variables[aux]))
    res = engine.seed(seed_polys, assume_groebner_prefix=prefix)
    if res is None:
        seeded = next((g[2] for g in engine.G
                       if g[1] & engine.P.front_mask == 0), None)
        if seeded is not None:
            return AlgebraicityResult(True, _from_engine(seeded, engine.P,
                                                         ring))
        res = engine.run(stop_on_back_member=True)
    if res.unit:
        return AlgebraicityResult(True, ring.one())
    if res.back_member is not None:
        ann = _from_engine(res.back_member, engine.P, ring)
        return AlgebraicityResult(True, ann)
    return AlgebraicityResult(False, None)
