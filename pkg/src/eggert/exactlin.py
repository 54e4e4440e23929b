"""Exact linear algebra over prime fields GF(p).

Scalars are plain integers kept reduced into ``range(p)``; matrices are
immutable row-major tuples.  Everything downstream (structure constants,
Frobenius images, subspace lattices) relies on the canonical reduced
row-echelon form computed here, so determinism beats cleverness: pivots
are the first nonzero entry scanning left to right, no reordering, no
sparsity tricks.  Two ``Subspace`` values compare equal exactly when they
describe the same subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

# Squaring a residue must fit an int64 so numpy interop stays exact.
_MAX_MODULUS = 2**31 - 1


class NotPrimeError(ValueError):
    """Raised when a modulus fails the primality check."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic of GF(p), p prime, on int residues in ``range(p)``."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NotPrimeError(f"modulus must be an int, got {self.p!r}")
        if self.p > _MAX_MODULUS:
            raise ValueError(f"modulus {self.p} exceeds machine-width bound {_MAX_MODULUS}")
        if not _is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.inv(pow(a, -k, self.p))
        return pow(a, k, self.p)


def make_prime_field(p: int) -> PrimeField:
    """Construct GF(p), rejecting non-prime moduli with NotPrimeError."""
    return PrimeField(p)


@dataclass(frozen=True)
class Matrix:
    """Immutable row-major matrix with entries reduced mod ``field.p``."""

    field: PrimeField
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )
        p = self.field.p
        if any(not (0 <= e < p) for e in self.entries):
            raise ValueError("matrix entries must be reduced mod p")

    @classmethod
    def from_rows(
        cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0]) if cols is None else cols
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("cols required for an empty matrix")
        flat = tuple(field.reduce(e) for r in rows for e in r)
        return cls(field, len(rows), cols, flat)

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "Matrix":
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(
            self.field, [list(self.col(j)) for j in range(self.cols)], cols=self.rows
        )

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def mat_mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        p = self.field.p
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other.entries[k * other.cols + j] for k in range(self.cols)) % p
                    for j in range(other.cols)
                ]
            )
        return Matrix.from_rows(self.field, out, cols=other.cols)

    def mat_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        p = self.field.p
        return tuple(
            sum(self.row(i)[k] * v[k] for k in range(self.cols)) % p for i in range(self.rows)
        )


def mat_pow(m: Matrix, k: int) -> Matrix:
    """k-th power of a square matrix, k >= 1, by repeated squaring."""
    if m.rows != m.cols:
        raise ValueError("matrix power needs a square matrix")
    if k < 1:
        raise ValueError("exponent must be >= 1")
    result: Optional[Matrix] = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else result.mat_mul(base)
        base = base.mat_mul(base)
        k >>= 1
    assert result is not None
    return result


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped.

    Returns (R, rank, pivot_columns).  R has ``rank`` rows, each pivot
    is 1 and is the only nonzero entry in its column, and pivot columns
    strictly increase, so R is a canonical representative of the row
    space of ``m``.  Idempotent: ``rref(R) == R``.
    """
    p = m.field.p
    work = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if work[i][c] % p != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = m.field.inv(work[r][c])
        if inv != 1:
            work[r] = [(e * inv) % p for e in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] % p != 0:
                f = work[i][c] % p
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = Matrix.from_rows(m.field, work[:r], cols=ncols)
    return reduced, r, tuple(pivots)


def solve(a: Matrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """One solution of a.x = b with free variables set to 0, or None."""
    if len(b) != a.rows:
        raise ValueError(f"rhs length {len(b)} != rows {a.rows}")
    aug = Matrix.from_rows(
        a.field, [list(a.row(i)) + [b[i]] for i in range(a.rows)], cols=a.cols + 1
    )
    reduced, rank, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [0] * a.cols
    for r, c in enumerate(pivots):
        x[c] = reduced.at(r, a.cols)
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """Row space of a canonical RREF basis inside GF(p)^ambient_dim.

    Equality of Subspace values is equality of subspaces.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width != ambient dimension")
        if self.basis.rows > self.ambient_dim:
            raise ValueError("more basis rows than ambient dimension")

    @property
    def field(self) -> PrimeField:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_rows(self) -> list[tuple[int, ...]]:
        return [self.basis.row(i) for i in range(self.dim)]

    def pivot_columns(self) -> tuple[int, ...]:
        cols = []
        for i in range(self.dim):
            row = self.basis.row(i)
            cols.append(next(j for j, e in enumerate(row) if e != 0))
        return tuple(cols)


def subspace_from_rows(
    field: PrimeField, ambient_dim: int, rows: Sequence[Sequence[int]]
) -> Subspace:
    """Canonical subspace spanned by the given row vectors."""
    m = Matrix.from_rows(field, rows, cols=ambient_dim)
    reduced, _, _ = rref(m)
    return Subspace(ambient_dim, reduced)


def zero_subspace(field: PrimeField, ambient_dim: int) -> Subspace:
    return subspace_from_rows(field, ambient_dim, [])


def full_subspace(field: PrimeField, ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, Matrix.identity(field, ambient_dim))


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient mismatch {a.ambient_dim} != {b.ambient_dim}")
    if a.field != b.field:
        raise ValueError("field mismatch")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return subspace_from_rows(a.field, a.ambient_dim, a.basis_rows() + b.basis_rows())


def reduce_against(s: Subspace, v: Sequence[int]) -> tuple[int, ...]:
    """Residual of v after clearing the pivot coordinates of s's basis."""
    if len(v) != s.ambient_dim:
        raise ValueError("vector length != ambient dimension")
    p = s.field.p
    res = [e % p for e in v]
    for i, c in enumerate(s.pivot_columns()):
        f = res[c]
        if f:
            row = s.basis.row(i)
            res = [(a - f * b) % p for a, b in zip(res, row)]
    return tuple(res)


def subspace_contains(s: Subspace, v: Sequence[int]) -> bool:
    return all(e == 0 for e in reduce_against(s, v))


def coordinates_in_basis(s: Subspace, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Coefficients of v in s's RREF basis, or None if v is outside s."""
    if len(v) != s.ambient_dim:
        raise ValueError("vector length != ambient dimension")
    p = s.field.p
    res = [e % p for e in v]
    coeffs = []
    for i, c in enumerate(s.pivot_columns()):
        f = res[c]
        coeffs.append(f)
        if f:
            row = s.basis.row(i)
            res = [(a - f * b) % p for a, b in zip(res, row)]
    if any(e != 0 for e in res):
        return None
    return tuple(coeffs)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by the Zassenhaus block trick on [[A,A],[B,0]]."""
    _check_compatible(a, b)
    n = a.ambient_dim
    block: list[list[int]] = []
    for row in a.basis_rows():
        block.append(list(row) + list(row))
    for row in b.basis_rows():
        block.append(list(row) + [0] * n)
    reduced, rank, _ = rref(Matrix.from_rows(a.field, block, cols=2 * n))
    inter_rows = []
    for i in range(rank):
        row = reduced.row(i)
        if all(e == 0 for e in row[:n]):
            inter_rows.append(list(row[n:]))
    return subspace_from_rows(a.field, n, inter_rows)


def column_space(m: Matrix) -> Subspace:
    """Span of the columns of m, as a subspace of GF(p)^rows."""
    return subspace_from_rows(m.field, m.rows, [list(m.col(j)) for j in range(m.cols)])


def right_nullspace(m: Matrix) -> Subspace:
    """Kernel {x : m.x = 0}, as a subspace of GF(p)^cols."""
    reduced, rank, pivots = rref(m)
    n = m.cols
    p = m.field.p
    pivot_set = set(pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    rows = []
    for f in free_cols:
        x = [0] * n
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = (-reduced.at(r, f)) % p
        rows.append(x)
    return subspace_from_rows(m.field, n, rows)
