"""Noncommutative words, relations, and the presentation input language.

Words are tuples of 1-based generator indices.  Relation coefficients are
kept as exact rationals and mapped into the coefficient field when the
relation is evaluated at generic matrices, so a presentation can be
re-read over a different field without re-parsing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .fields import FieldSpec, is_prime

Word = tuple  # letters: 1-based generator indices; () is the unit word


class PresentationError(Exception):
    """Base class for presentation input problems."""


class PresentationSyntaxError(PresentationError):
    """Malformed presentation text; carries 1-based line and column."""

    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class PresentationInputError(PresentationError):
    """Well-formed text with invalid content (bad field, no generators...)."""


class NcPoly:
    """Noncommutative polynomial: map from word to exact rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c) -> "NcPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def generator(cls, l: int) -> "NcPoly":
        return cls({(l,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return NcPoly(out)

    def __neg__(self):
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return NcPoly(out)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = NcPoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def to_str(self, gen_names) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        parts = []
        for w, c in items:
            body = "*".join(gen_names[l - 1] for l in w)
            neg = c < 0
            mag = -c if neg else c
            if not w:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class Presentation:
    """A finitely presented associative algebra over the given field."""

    field: FieldSpec
    generator_names: tuple
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.generator_names:
            raise PresentationInputError("need at least one generator")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise PresentationInputError("generator names must be unique")
        s = self.num_generators
        for r in self.relations:
            for w in r.terms:
                if any(not 1 <= l <= s for l in w):
                    raise PresentationInputError("relation uses unknown generator")

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def max_relation_degree(self) -> int:
        return max((r.max_word_length() for r in self.relations), default=0)

    def with_field(self, field: FieldSpec) -> "Presentation":
        p = field.modulus
        if p is not None:
            for r in self.relations:
                for c in r.terms.values():
                    if c.denominator % p == 0:
                        raise PresentationInputError(
                            f"coefficient {c} has no image modulo {p}")
        return Presentation(field, self.generator_names, self.relations)

    def to_text(self, dim: int | None = None) -> str:
        lines = [f"field {'Q' if self.field.modulus is None else f'F {self.field.modulus}'}"]
        if dim is not None:
            lines.append(f"dim {dim}")
        lines.append("gens " + " ".join(self.generator_names))
        for r in self.relations:
            lines.append("rel " + r.to_str(self.generator_names))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _tokenize_line(text, lineno):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            break
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            toks.append(("int", int(text[start:pos]), start))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            toks.append(("ident", text[start:pos], start))
            continue
        if ch in "+-*^()/":
            toks.append(("op", ch, pos))
            pos += 1
            continue
        raise PresentationSyntaxError(f"bad character {ch!r}", lineno, pos + 1)
    toks.append(("end", None, n))
    return toks


class _RelParser:
    """Recursive-descent parser for relation expressions."""

    def __init__(self, toks, lineno, gen_index, allow_rationals):
        self.toks = toks
        self.lineno = lineno
        self.gens = gen_index
        self.allow_rationals = allow_rationals
        self.i = 0

    def fail(self, msg, pos):
        raise PresentationSyntaxError(msg, self.lineno, pos + 1)

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self) -> NcPoly:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            acc = self.term()
            if val == "-":
                acc = -acc
        else:
            acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> NcPoly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> NcPoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, e, pos = self.advance()
            if kind != "int" or e < 1:
                self.fail("exponent must be a positive integer", pos)
            return base ** e
        return base

    def atom(self) -> NcPoly:
        kind, val, pos = self.advance()
        if kind == "int":
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.advance()
                k3, den, p3 = self.advance()
                if k3 != "int" or den == 0:
                    self.fail("bad rational literal", p3)
                if not self.allow_rationals:
                    self.fail("rational literals are only allowed over Q", pos)
                return NcPoly.constant(Fraction(val, den))
            return NcPoly.constant(val)
        if kind == "ident":
            if val not in self.gens:
                self.fail(f"unknown generator {val!r}", pos)
            return NcPoly.generator(self.gens[val])
        if kind == "op" and val == "(":
            e = self.expr()
            kind, val, pos = self.advance()
            if not (kind == "op" and val == ")"):
                self.fail("expected ')'", pos)
            return e
        if kind == "op" and val == "-":
            return -self.factor()
        self.fail("unexpected token", pos)


def parse_presentation(text: str):
    """Parse presentation text; returns (Presentation, declared dimension)."""
    field = None
    dim = None
    gen_names = None
    relations = []
    stage = 0  # 0: expect field, 1: expect dim, 2: expect gens, 3: rels
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokenize_line(raw, lineno)
        if toks[0][0] == "end":
            continue
        kind, head, pos = toks[0]
        if kind != "ident":
            raise PresentationSyntaxError("expected a keyword", lineno, pos + 1)
        if head == "field":
            if stage != 0:
                raise PresentationSyntaxError("misplaced 'field' line", lineno, pos + 1)
            field = _parse_field_tokens(toks[1:], lineno)
            stage = 1
        elif head == "dim":
            if stage != 1:
                raise PresentationSyntaxError("misplaced 'dim' line", lineno, pos + 1)
            if toks[1][0] != "int" or toks[2][0] != "end" or toks[1][1] < 1:
                raise PresentationSyntaxError("expected 'dim <positive integer>'",
                                              lineno, toks[1][2] + 1)
            dim = toks[1][1]
            stage = 2
        elif head == "gens":
            if stage != 2:
                raise PresentationSyntaxError("misplaced 'gens' line", lineno, pos + 1)
            names = []
            for kind2, val2, pos2 in toks[1:-1]:
                if kind2 != "ident":
                    raise PresentationSyntaxError("generator names must be identifiers",
                                                  lineno, pos2 + 1)
                names.append(val2)
            if not names:
                raise PresentationInputError("need at least one generator")
            if len(set(names)) != len(names):
                raise PresentationInputError("generator names must be unique")
            gen_names = names
            stage = 3
        elif head == "rel":
            if stage != 3:
                raise PresentationSyntaxError("'rel' before 'gens'", lineno, pos + 1)
            gen_index = {name: i + 1 for i, name in enumerate(gen_names)}
            parser = _RelParser(toks[1:], lineno, gen_index,
                                allow_rationals=field.modulus is None)
            rel = parser.expr()
            kind2, _, pos2 = parser.peek()
            if kind2 != "end":
                raise PresentationSyntaxError("trailing input after relation",
                                              lineno, pos2 + 1)
            relations.append(rel)
        else:
            raise PresentationSyntaxError(f"unknown keyword {head!r}", lineno, pos + 1)
    if stage < 3:
        missing = ["field", "dim", "gens"][stage]
        raise PresentationSyntaxError(f"missing '{missing}' line",
                                      len(text.splitlines()) + 1, 1)
    return Presentation(field, tuple(gen_names), tuple(relations)), dim


def _parse_field_tokens(toks, lineno):
    kind, val, pos = toks[0]
    if kind == "ident" and val.upper() == "Q" and toks[1][0] == "end":
        return FieldSpec.rationals()
    if kind == "ident" and val.upper() == "F":
        k2, p, p2 = toks[1]
        if k2 == "int" and toks[2][0] == "end":
            if not is_prime(p):
                raise PresentationInputError(f"modulus {p} is not prime")
            return FieldSpec.prime_field(p)
    raise PresentationSyntaxError("expected 'field Q' or 'field F <prime>'",
                                  lineno, pos + 1)


def parse_field_name(text: str) -> FieldSpec:
    """Parse a CLI-style field name: 'q', 'f5', 'F7'."""
    t = text.strip().lower()
    if t == "q":
        return FieldSpec.rationals()
    if t.startswith("f") and t[1:].isdigit():
        p = int(t[1:])
        if not is_prime(p):
            raise PresentationInputError(f"modulus {p} is not prime")
        return FieldSpec.prime_field(p)
    raise PresentationInputError(f"unknown field {text!r}")


# ---------------------------------------------------------------------------
# Word enumeration
# ---------------------------------------------------------------------------


def words_up_to(s: int, max_len: int):
    """All words of length 1..max_len in length-then-lexicographic order."""
    if s < 1 or max_len < 1:
        raise ValueError("need s >= 1 and max_len >= 1")
    out = []
    for length in range(1, max_len + 1):
        out.extend(itertools.product(range(1, s + 1), repeat=length))
    return out


def _least_rotation(w: Word) -> Word:
    return min(w[i:] + w[:i] for i in range(len(w)))


def cyclic_representatives(words):
    """One representative (least rotation) per cyclic class, first-seen order."""
    seen = set()
    out = []
    for w in words:
        rep = _least_rotation(w)
        if rep not in seen:
            seen.add(rep)
            out.append(rep)
    return out
