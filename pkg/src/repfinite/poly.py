"""Sparse multivariate polynomials with pluggable monomial orders.

Monomials are exponent tuples over a fixed ring-wide variable universe;
a polynomial is a dict from exponent tuple to nonzero coefficient.
Everything here is immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import FieldMismatchError, FieldSpec

Monomial = tuple  # exponent vector, one slot per ring variable


@dataclass(frozen=True)
class Variable:
    """A commuting indeterminate: a matrix coordinate or the auxiliary v."""

    name: str
    gen: int | None = None  # generator index (1-based); None for auxiliary
    row: int | None = None
    col: int | None = None

    @property
    def is_auxiliary(self) -> bool:
        return self.gen is None

    def __str__(self):
        return self.name


class Ring:
    """A polynomial ring: coefficient field plus a fixed variable tuple."""

    __slots__ = ("field", "variables", "_by_name", "_aux_index", "_hash")

    def __init__(self, field: FieldSpec, variables):
        variables = tuple(variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        aux = [i for i, v in enumerate(variables) if v.is_auxiliary]
        if len(aux) > 1:
            raise ValueError("at most one auxiliary variable per ring")
        self.field = field
        self.variables = variables
        self._by_name = {v.name: i for i, v in enumerate(variables)}
        self._aux_index = aux[0] if aux else None
        self._hash = hash((field, variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def aux_index(self):
        return self._aux_index

    @property
    def coordinate_indices(self):
        return tuple(i for i in range(self.nvars) if i != self._aux_index)

    def index(self, v) -> int:
        if isinstance(v, Variable):
            v = v.name
        return self._by_name[v]

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.field == other.field
                and self.variables == other.variables)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({self.field}, [{', '.join(v.name for v in self.variables)}])"

    def __getstate__(self):
        return (self.field, self.variables)

    def __setstate__(self, state):
        self.__init__(*state)

    # -- polynomial constructors --------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self._coerce(c)
        return Polynomial(self, {} if not c else {self.unit_monomial(): c})

    def var(self, v) -> "Polynomial":
        i = self.index(v)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: self.field.one})

    def _coerce(self, c):
        if isinstance(c, int):
            return self.field.from_int(c)
        if isinstance(c, Fraction):
            return self.field.from_fraction(c)
        return c

    def from_terms(self, terms) -> "Polynomial":
        out = {}
        for mono, c in terms.items() if isinstance(terms, dict) else terms:
            c = self._coerce(c)
            c = self.field.add(out.get(mono, self.field.zero), c)
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return Polynomial(self, out)


def coordinate_ring(field: FieldSpec, n: int, s: int,
                    gen_names=None) -> Ring:
    """The ring k[x_ij(l) : 1<=i,j<=n, 1<=l<=s][v] used by one detection run.

    Variables are ordered generator-major, then row-major, with the single
    auxiliary variable last.
    """
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    if gen_names is None:
        gen_names = [f"g{l}" for l in range(1, s + 1)]
    if len(gen_names) != s:
        raise ValueError("need one name per generator")
    bases = [name.lower() for name in gen_names]
    if len(set(bases)) != len(bases):
        bases = [f"{name.lower()}{l}" for l, name in enumerate(gen_names, 1)]
    variables = []
    for l, base in enumerate(bases, 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                variables.append(Variable(f"{base}{i}{j}", gen=l, row=i, col=j))
    taken = {v.name for v in variables}
    aux = "v"
    while aux in taken:
        aux = aux + "_"
    variables.append(Variable(aux))
    return Ring(field, variables)


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """Total multiplicative monomial order with 1 minimal."""

    def key(self, mono: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sort_terms(self, terms):
        return sorted(terms.items(), key=lambda t: self.key(t[0]), reverse=True)


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    def key(self, mono):
        return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, mono):
        return tuple(mono)


@dataclass(frozen=True)
class BlockEliminate(MonomialOrder):
    """Front-block variables dominate; grevlex within each block."""

    front: frozenset

    def __post_init__(self):
        object.__setattr__(self, "front", frozenset(self.front))

    def split(self, nvars):
        fr = sorted(i for i in self.front)
        bk = [i for i in range(nvars) if i not in self.front]
        return fr, bk

    def key(self, mono):
        fr, bk = self.split(len(mono))
        f = [mono[i] for i in fr]
        b = [mono[i] for i in bk]
        return (sum(f), tuple(-e for e in reversed(f)),
                sum(b), tuple(-e for e in reversed(b)))


def block_eliminate(ring: Ring, variables) -> BlockEliminate:
    """Build a BlockEliminate order from ring variables or names."""
    return BlockEliminate(frozenset(ring.index(v) for v in variables))


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0, or 1 as a <, =, > b under the order."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Canonical sparse polynomial; zero has an empty term map."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self):
        """The coefficient of the unit monomial."""
        return self.terms.get(self.ring.unit_monomial(), self.ring.field.zero)

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, self.ring.field.zero)

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def leading_term(self, order: MonomialOrder):
        """(monomial, coefficient) of the order-maximal term; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise FieldMismatchError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = f.add(out.get(m, f.zero), c)
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                nc = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = self.ring._coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scale(self.ring.field.inv(lc))

    # -- substitution --------------------------------------------------------

    def substitute(self, var, value: "Polynomial") -> "Polynomial":
        """Replace one variable by a polynomial of the same ring."""
        i = self.ring.index(var) if not isinstance(var, int) else var
        value = self._check(value)
        out = self.ring.zero()
        powers = {0: self.ring.one()}
        for m, c in self.terms.items():
            e = m[i]
            if e not in powers:
                powers[e] = value ** e
            rest = tuple(0 if j == i else x for j, x in enumerate(m))
            out = out + Polynomial(self.ring, {rest: c}) * powers[e]
        return out

    def evaluate(self, assignment: dict):
        """Evaluate at field elements; assignment maps var index -> value."""
        f = self.ring.field
        total = f.zero
        for m, c in self.terms.items():
            val = c
            for i, e in enumerate(m):
                if e:
                    val = f.mul(val, pow(assignment[i], e) if f.modulus is None
                                else pow(assignment[i], e, f.modulus))
            total = f.add(total, val)
        return total

    def map_ring(self, ring: Ring, index_map=None) -> "Polynomial":
        """Re-express in another ring; index_map sends old var index to new."""
        if index_map is None:
            index_map = {i: ring.index(v.name)
                         for i, v in enumerate(self.ring.variables)}
        out = {}
        for m, c in self.terms.items():
            nm = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    nm[index_map[i]] = e
            out[tuple(nm)] = ring._coerce(c)
        return ring.from_terms(out)

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- printing ------------------------------------------------------------

    def to_str(self, order: MonomialOrder = GrevLex()) -> str:
        if not self.terms:
            return "0"
        names = [v.name for v in self.ring.variables]
        parts = []
        for m, c in order.sort_terms(self.terms):
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(m) if e]
            neg = (c < 0)
            mag = -c if neg else c
            body = "*".join(factors)
            if not factors:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"<poly {self.to_str()}>"


# ---------------------------------------------------------------------------
# Parsing the canonical textual form (also accepts parentheses)
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()/]))")


class PolyParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PolyParseError(f"bad character {text[pos]!r}", pos)
            break
        num, ident, op = m.groups()
        if num:
            out.append(("int", int(num), m.start()))
        elif ident:
            out.append(("ident", ident, m.start()))
        else:
            out.append(("op", "^" if op == "**" else op, m.start()))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _PolyParser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            t = self.term()
            acc = t if val == "+" else -t
        else:
            acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, e, pos = self.next()
            if kind != "int":
                raise PolyParseError("exponent must be an integer", pos)
            return base ** e
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.next()
        if kind == "int":
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, den, p3 = self.next()
                if k3 != "int" or den == 0:
                    raise PolyParseError("bad rational literal", p3)
                return self.ring.constant(Fraction(val, den))
            return self.ring.constant(val)
        if kind == "ident":
            try:
                return self.ring.var(val)
            except KeyError:
                raise PolyParseError(f"unknown variable {val!r}", pos) from None
        if kind == "op" and val == "(":
            e = self.expr()
            kind, val, pos = self.next()
            if not (kind == "op" and val == ")"):
                raise PolyParseError("expected ')'", pos)
            return e
        if kind == "op" and val == "-":
            return -self.factor()
        raise PolyParseError("unexpected token", pos)


def parse_poly(ring: Ring, text: str) -> Polynomial:
    p = _PolyParser(ring, text)
    out = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise PolyParseError("trailing input", pos)
    return out
