"""Generic matrices, relation entries, and division-free char polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import NcPoly, Presentation, Word
from .poly import Polynomial, Ring, coordinate_ring


@dataclass(frozen=True)
class GenericMatrix:
    """Square matrix of polynomials sharing one ring."""

    ring: Ring
    entries: tuple  # tuple of row tuples

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other: "GenericMatrix") -> "GenericMatrix":
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ring.zero()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return GenericMatrix(self.ring, tuple(rows))

    def __add__(self, other: "GenericMatrix") -> "GenericMatrix":
        return GenericMatrix(self.ring, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def scale(self, c) -> "GenericMatrix":
        return GenericMatrix(self.ring, tuple(
            tuple(e.scale(c) for e in row) for row in self.entries))

    def __neg__(self):
        return GenericMatrix(self.ring, tuple(
            tuple(-e for e in row) for row in self.entries))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


def zero_matrix(ring: Ring, n: int) -> GenericMatrix:
    z = ring.zero()
    return GenericMatrix(ring, tuple(tuple(z for _ in range(n)) for _ in range(n)))


def scalar_matrix(ring: Ring, n: int, c) -> GenericMatrix:
    rows = []
    for i in range(n):
        rows.append(tuple(ring.constant(c) if i == j else ring.zero()
                          for j in range(n)))
    return GenericMatrix(ring, tuple(rows))


def matrix_from_values(ring: Ring, values) -> GenericMatrix:
    """Build a matrix of scalars (ints/fractions) for numeric checks."""
    return GenericMatrix(ring, tuple(
        tuple(v if isinstance(v, Polynomial) else ring.constant(v) for v in row)
        for row in values))


def generic_matrix(ring: Ring, l: int, n: int) -> GenericMatrix:
    """The n x n matrix whose (i, j) entry is the coordinate variable of
    generator l."""
    by_pos = {}
    for v in ring.variables:
        if v.gen == l:
            by_pos[(v.row, v.col)] = v
    if len(by_pos) != n * n:
        raise IndexError(f"ring has no full n x n coordinate block for generator {l}")
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(ring.var(by_pos[(i, j)]) for j in range(1, n + 1)))
    return GenericMatrix(ring, tuple(rows))


def eval_word(ring: Ring, w: Word, n: int) -> GenericMatrix:
    """Ordered product of generic matrices named by a nonempty word."""
    if len(w) < 1:
        raise ValueError("word must have length >= 1")
    acc = generic_matrix(ring, w[0], n)
    for l in w[1:]:
        acc = acc * generic_matrix(ring, l, n)
    return acc


def eval_ncpoly(ring: Ring, f: NcPoly, n: int) -> GenericMatrix:
    """Image of a noncommutative polynomial under X_l -> generic matrix l."""
    acc = zero_matrix(ring, n)
    for w, c in f.terms.items():
        coef = ring.field.from_fraction(c)
        if not coef:
            continue
        if not w:
            acc = acc + scalar_matrix(ring, n, coef)
        else:
            acc = acc + eval_word(ring, w, n).scale(coef)
    return acc


def rel_entries(pres: Presentation, n: int, ring: Ring | None = None):
    """Entries of all evaluated relations: zero entries dropped, duplicates
    removed, first-seen order kept."""
    if ring is None:
        ring = coordinate_ring(pres.field, n, pres.num_generators,
                               pres.generator_names)
    seen = set()
    out = []
    for f in pres.relations:
        m = eval_ncpoly(ring, f, n)
        for row in m.entries:
            for e in row:
                if not e.is_zero() and e not in seen:
                    seen.add(e)
                    out.append(e)
    return out


@dataclass(frozen=True)
class CharCoefficients:
    """Coefficients of det(lambda*I - M), listed for lambda^(n-1) .. lambda^0."""

    coefs: tuple

    @property
    def dim(self) -> int:
        return len(self.coefs)

    def trace_coefficient(self) -> Polynomial:
        """The lambda^(n-1) coefficient, i.e. minus the trace."""
        return self.coefs[0]


def char_poly(M: GenericMatrix) -> CharCoefficients:
    """Characteristic coefficients by the Berkowitz division-free scheme.

    Valid over any coefficient field, including small characteristic.
    Returns the n non-leading coefficients of det(lambda*I - M).
    """
    ring = M.ring
    n = M.dim
    one = ring.one()
    # vec holds the coefficients [1, c_{r-1}, ..., c_0] for the leading
    # principal r x r submatrix, built up one row/column at a time.
    vec = [one]
    for r in range(1, n + 1):
        a = M.entries[r - 1][r - 1]
        row = [M.entries[r - 1][j] for j in range(r - 1)]
        col = [M.entries[i][r - 1] for i in range(r - 1)]
        sub = [[M.entries[i][j] for j in range(r - 1)] for i in range(r - 1)]
        # Toeplitz column: 1, -a, -(row @ sub^i @ col) for i = 0 .. r-2
        toep = [one, -a]
        cur = col
        for _ in range(r - 1):
            dot = ring.zero()
            for rj, cj in zip(row, cur):
                dot = dot + rj * cj
            toep.append(-dot)
            if len(toep) <= r:
                cur = [sum((sub[i][k] * cur[k] for k in range(r - 1)),
                           ring.zero()) for i in range(r - 1)]
        new = []
        for i in range(r + 1):
            acc = ring.zero()
            for j in range(max(0, i - len(toep) + 1), min(i, len(vec) - 1) + 1):
                acc = acc + vec[j] * toep[i - j]
            new.append(acc)
        vec = new
    return CharCoefficients(tuple(vec[1:]))
