"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain Python values: `Fraction` over Q, an int in
[0, p) over F_p.  A `FieldSpec` carries the operations; keeping the
elements unboxed keeps inner loops cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient fields."""


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for all inputs below 3.3 * 10^24."""
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (modulus None) or the prime field F_modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            if self.modulus < 2 or not is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus} is not prime")
            if self.modulus.bit_length() > 63:
                raise ValueError("modulus must fit in a machine word")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    def __str__(self):
        return "Q" if self.modulus is None else f"F{self.modulus}"

    # -- element constructors ------------------------------------------------

    @property
    def zero(self):
        return 0 if self.modulus is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.modulus is not None else Fraction(1)

    def from_int(self, a: int):
        if self.modulus is not None:
            return a % self.modulus
        return Fraction(a)

    def from_fraction(self, q) :
        """Map an exact rational into the field (denominator inverted mod p)."""
        q = Fraction(q)
        if self.modulus is None:
            return q
        p = self.modulus
        if q.denominator % p == 0:
            raise ZeroDivisionError(
                f"denominator {q.denominator} not invertible mod {p}")
        return q.numerator * pow(q.denominator, -1, p) % p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.modulus if self.modulus is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.modulus is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.modulus if self.modulus is not None else a * b

    def neg(self, a):
        return (-a) % self.modulus if self.modulus is not None else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.modulus is not None:
            return pow(a, -1, self.modulus)
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        if self.modulus is not None:
            return a * pow(b, -1, self.modulus) % self.modulus
        return a / b

    def element_str(self, a) -> str:
        return str(a)


def field_ops(spec: FieldSpec, a, b, op: str):
    """Dispatch a single binary field operation by name."""
    try:
        fn = {"add": spec.add, "sub": spec.sub, "mul": spec.mul,
              "div": spec.div}[op]
    except KeyError:
        raise ValueError(f"unknown field op {op!r}") from None
    return fn(a, b)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime_field(p)
