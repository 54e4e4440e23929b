"""Power maps on finite algebras over GF(p): images, kernels, sections.

Over GF(p) the map x -> x^(p^k) on a commutative algebra is linear
(scalars are fixed by a -> a^p), so p-power images and kernels reduce to
column spaces and nullspaces of one matrix.  For exponents n with
char > n the span of n-th powers equals the span of n-fold products, by
the alternating subset-sum expansion of n! x_1...x_n; in every other
case only exhaustive enumeration is honest, and it fails loudly above a
cap rather than sampling silently.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebras import AlgebraError, FiniteAlgebra, _var_names, truncated_polynomial
from .exactlin import (
    Matrix,
    PrimeField,
    Subspace,
    column_space,
    full_subspace,
    mat_pow,
    right_nullspace,
    solve,
    subspace_from_rows,
    zero_subspace,
)
from .semigroups import ElementSubset

EXHAUSTIVE_CAP = 2**20


class CharTooSmallError(ValueError):
    """Exponent requires characteristic larger than it actually is."""


class CapExceededError(ValueError):
    """Exhaustive enumeration would exceed the configured cap."""


METHOD_FROBENIUS = "frobenius-linear"
METHOD_SPAN = "subset-sum-span"
METHOD_EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class EggertReport:
    """Dimensions of an algebra against the image of its p-th power map.

    deficit = p * image_dim - dim_r; the conjectured inequality says it
    is never positive for nilpotent commutative algebras.
    """

    dim_r: int
    image_dim: int
    deficit: int
    ratio: tuple[int, int]
    method: str

    def to_json(self) -> dict:
        return {
            "dim": self.dim_r,
            "image_dim": self.image_dim,
            "deficit": self.deficit,
            "ratio": [self.ratio[0], self.ratio[1]],
            "method": self.method,
        }


@dataclass(frozen=True)
class SectionWitness:
    """A subspace mapped bijectively onto the p-power image.

    ``root_of[i]`` is the chosen root of the i-th image basis vector.
    """

    v: Subspace
    image: Subspace
    root_of: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PowerImageResult:
    subspace: Subspace
    method: str
    # Only known in exhaustive mode: whether the set of n-th powers is
    # itself a subspace (elsewhere it is one by construction).
    set_is_subspace: Optional[bool] = None


def _require_commutative(r: FiniteAlgebra) -> None:
    if not r.commutative:
        raise AlgebraError("power-map linearity needs a commutative algebra")


def frobenius_matrix(r: FiniteAlgebra, k: int = 1) -> Matrix:
    """Matrix of x -> x^(p^k) on the basis (columns are basis images).

    Additivity is spot-checked on seeded random pairs against direct
    powering, independently of the matrix being returned.
    """
    _require_commutative(r)
    if k < 1:
        raise ValueError("k must be >= 1")
    p = r.field.p
    cols = [r.power(r.basis_vector(j), p) for j in range(r.dim)]
    a = Matrix.from_rows(r.field, [list(c) for c in cols], cols=r.dim).transpose()
    rng = random.Random(0xE66E27)
    for _ in range(4):
        u = tuple(rng.randrange(p) for _ in range(r.dim))
        v = tuple(rng.randrange(p) for _ in range(r.dim))
        if r.power(r.add(u, v), p) != r.add(r.power(u, p), r.power(v, p)):
            raise AlgebraError("p-th power map failed additivity spot-check")
    return a if k == 1 else mat_pow(a, k)


def _p_power_exponent(n: int, p: int) -> Optional[int]:
    if n < p:
        return None
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 and k >= 1 else None


def span_of_products(
    r: FiniteAlgebra, rows: Sequence[Sequence[int]], i: int
) -> Subspace:
    """Span of all i-fold products of the given spanning vectors.

    The span of products of arbitrary elements equals the span of
    products of spanning vectors, so this is polynomial cost.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    current = subspace_from_rows(r.field, r.dim, [list(v) for v in rows])
    base = current
    for _ in range(i - 1):
        prods = {
            r.mul(u, v) for u in current.basis_rows() for v in base.basis_rows()
        }
        current = subspace_from_rows(r.field, r.dim, [list(w) for w in prods])
    return current


def algebra_power_subspace(r: FiniteAlgebra, i: int) -> Subspace:
    """R^i: span of all i-fold products."""
    return span_of_products(r, r.full_subspace_rows(), i)


def nilpotency_index(r: FiniteAlgebra) -> Optional[int]:
    """Least n with R^n = 0, or None when the powers stabilize nonzero."""
    current = full_subspace(r.field, r.dim)
    n = 1
    while True:
        if current.dim == 0:
            return n
        # R^(n+1) = span(R^n * R)
        prods = {
            r.mul(u, r.basis_vector(k))
            for u in current.basis_rows()
            for k in range(r.dim)
        }
        nxt = subspace_from_rows(r.field, r.dim, [list(w) for w in prods])
        if nxt == current:
            return None
        current = nxt
        n += 1


def enumerate_subspace_vectors(s: Subspace, cap: int = EXHAUSTIVE_CAP):
    """All vectors of a subspace (p^dim of them), lazily."""
    p = s.field.p
    if p**s.dim > cap:
        raise CapExceededError(f"{p}^{s.dim} vectors exceed cap {cap}")
    rows = s.basis_rows()
    n = s.ambient_dim
    for coeffs in itertools.product(range(p), repeat=s.dim):
        v = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                v = [(a + c * b) % p for a, b in zip(v, row)]
        yield tuple(v)


def power_image(r: FiniteAlgebra, n: int, cap: int = EXHAUSTIVE_CAP) -> PowerImageResult:
    """Subspace spanned by the n-th powers of all elements.

    Route depends on n: a p-power exponent makes the map linear and the
    image a column space; char > n reduces span(R^(n)) to R^n; anything
    else enumerates every element's n-th power below ``cap``.
    """
    _require_commutative(r)
    if n < 1:
        raise ValueError("n must be >= 1")
    p = r.field.p
    if n == 1:
        return PowerImageResult(full_subspace(r.field, r.dim), METHOD_FROBENIUS)
    k = _p_power_exponent(n, p)
    if k is not None:
        return PowerImageResult(column_space(frobenius_matrix(r, k)), METHOD_FROBENIUS)
    if p > n:
        return PowerImageResult(algebra_power_subspace(r, n), METHOD_SPAN)
    if p**r.dim > cap:
        raise CapExceededError(
            f"exhaustive n-th power enumeration needs {p}^{r.dim} elements, cap {cap}"
        )
    powers = {
        r.power(v, n)
        for v in enumerate_subspace_vectors(full_subspace(r.field, r.dim), cap)
    }
    span = subspace_from_rows(r.field, r.dim, [list(w) for w in powers])
    return PowerImageResult(span, METHOD_EXHAUSTIVE, len(powers) == p**span.dim)


def root_section(r: FiniteAlgebra, p: Optional[int] = None) -> SectionWitness:
    """Choose one p-th root per image basis vector; their span V is mapped
    bijectively onto the image by the p-th power map.

    Free variables in each root extraction are zero-filled, so the
    witness is deterministic.
    """
    _require_commutative(r)
    if p is not None and p != r.field.p:
        raise ValueError("section exponent must equal the characteristic")
    a = frobenius_matrix(r, 1)
    image = column_space(a)
    roots = []
    for b in image.basis_rows():
        x = solve(a, list(b))
        if x is None:
            raise AlgebraError("image basis vector has no preimage; matrix is inconsistent")
        roots.append(x)
    v = subspace_from_rows(r.field, r.dim, [list(x) for x in roots])
    if v.dim != image.dim:
        raise AlgebraError("chosen roots are linearly dependent")
    mapped = subspace_from_rows(r.field, r.dim, [list(a.mat_vec(row)) for row in v.basis_rows()])
    if mapped != image:
        raise AlgebraError("section does not map onto the image")
    return SectionWitness(v, image, tuple(tuple(x) for x in roots))


def power_dims_profile(r: FiniteAlgebra, v: Subspace, n: int) -> tuple[int, ...]:
    """(dim V^1, ..., dim V^n) with V^i the span of i-fold products."""
    if v.ambient_dim != r.dim:
        raise ValueError("subspace does not live in this algebra")
    dims = []
    current = v
    for i in range(1, n + 1):
        if i > 1:
            prods = {
                r.mul(u, w) for u in current.basis_rows() for w in v.basis_rows()
            }
            current = subspace_from_rows(r.field, r.dim, [list(w) for w in prods])
        dims.append(current.dim)
    return tuple(dims)


def frobenius_image_of_subspace(r: FiniteAlgebra, v: Subspace, k: int = 1) -> Subspace:
    """Span of the p^k-th powers of the elements of V (a subspace, since
    the map is linear)."""
    a = frobenius_matrix(r, k)
    return subspace_from_rows(
        r.field, r.dim, [list(a.mat_vec(row)) for row in v.basis_rows()]
    )


def eggert_report(r: FiniteAlgebra, p: Optional[int] = None) -> EggertReport:
    """Dimension report for the p-th power image, p the characteristic."""
    _require_commutative(r)
    if p is not None and p != r.field.p:
        raise ValueError("report exponent must equal the characteristic")
    p = r.field.p
    if r.dim == 0:
        return EggertReport(0, 0, 0, (0, 0), METHOD_FROBENIUS)
    result = power_image(r, p)
    image_dim = result.subspace.dim
    return EggertReport(
        r.dim, image_dim, p * image_dim - r.dim, (image_dim, r.dim), result.method
    )


def injectivity_check(
    r: FiniteAlgebra, target: Union[Subspace, ElementSubset], n: int
) -> bool:
    """Whether the n-th power map is one-to-one on the target and sends
    no nonzero member to zero.

    Subspaces require a p-power exponent (kernel triviality of a linear
    map); element subsets are checked setwise in their semigroup.
    """
    if isinstance(target, Subspace):
        k = _p_power_exponent(n, r.field.p)
        if k is None:
            raise ValueError("subspace injectivity needs a p-power exponent")
        a = frobenius_matrix(r, k)
        images = [list(a.mat_vec(row)) for row in target.basis_rows()]
        span = subspace_from_rows(r.field, r.dim, images)
        return span.dim == target.dim
    sg = target.parent
    seen: dict[int, int] = {}
    for x in target.members:
        px = sg.power(x, n)
        if x != 0 and px == 0:
            return False
        if px in seen and seen[px] != x:
            return False
        seen[px] = x
    return True


def identity_check_4_5(field: PrimeField, n: int) -> bool:
    """Alternating subset-sum identity: over a field with p > n,
    sum over nonempty S of (-1)^|S| (sum_{i in S} x_i)^n equals
    (-1)^n n! x_1...x_n in the degree-n truncation.

    Requires p > n so that n! is invertible (CharTooSmallError otherwise).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if field.p <= n:
        raise CharTooSmallError(f"need characteristic > {n}, got {field.p}")
    r, _ = truncated_polynomial(field, n, n, commutative=True)
    names = _var_names(n)
    gens = [r.vector_from_label(name) for name in names]
    lhs = r.zero_vector()
    for mask in range(1, 2**n):
        s = r.zero_vector()
        bits = 0
        for i in range(n):
            if mask >> i & 1:
                s = r.add(s, gens[i])
                bits += 1
        term = r.power(s, n)
        lhs = r.add(lhs, r.scale((-1) ** bits % field.p, term))
    prod = gens[0]
    for g in gens[1:]:
        prod = r.mul(prod, g)
    factorial = 1
    for i in range(2, n + 1):
        factorial = factorial * i % field.p
    rhs = r.scale((-1) ** n % field.p * factorial % field.p, prod)
    return lhs == rhs


@dataclass(frozen=True)
class AnnQuotientResult:
    lhs: int  # dim(V / Ann_V V^n)
    rhs: int  # dim V^n
    holds: bool


def ann_quotient_check(r: FiniteAlgebra, v: Subspace, n: int) -> AnnQuotientResult:
    """Compare dim(V / Ann_V V^n) with dim V^n.

    Ann_V V^n is the kernel of the stacked multiplication maps from V
    against a basis of V^n.
    """
    _require_commutative(r)
    vn = span_of_products(r, [list(row) for row in v.basis_rows()], n) if v.dim else zero_subspace(r.field, r.dim)
    if v.dim == 0:
        return AnnQuotientResult(0, vn.dim, True)
    v_rows = v.basis_rows()
    stacked: list[list[int]] = []
    for w in vn.basis_rows():
        cols = [r.mul(row, w) for row in v_rows]
        for coord in range(r.dim):
            stacked.append([cols[i][coord] for i in range(len(v_rows))])
    if stacked:
        m = Matrix.from_rows(r.field, stacked, cols=len(v_rows))
        ann_dim = right_nullspace(m).dim
    else:
        ann_dim = len(v_rows)
    lhs = v.dim - ann_dim
    return AnnQuotientResult(lhs, vn.dim, lhs <= vn.dim)


@dataclass(frozen=True)
class ProbeReport:
    """Exploration record for the open dimension questions; reports only."""

    mode: str
    n: int
    m: Optional[int]
    dim_r: int
    dim_subspace: int
    hypothesis_holds: bool
    bound_holds: Optional[bool]
    nilpotency: Optional[int]
    note: str

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "dim": self.dim_r,
            "dim_subspace": self.dim_subspace,
            "hypothesis_holds": self.hypothesis_holds,
            "bound_holds": self.bound_holds,
            "nilpotency_index": self.nilpotency,
            "note": self.note,
        }


PROBE_MODES = ("v", "w", "u")


def question_probe(
    r: FiniteAlgebra,
    subspace: Subspace,
    n: int,
    mode: str,
    cap: int = EXHAUSTIVE_CAP,
    m: Optional[int] = None,
) -> ProbeReport:
    """Verify a probe hypothesis exhaustively, then report whether
    dim R >= n * dim(subspace).  Never asserts; the questions are open.

    Modes: 'v' every nonzero element of the subspace has nonzero n-th
    power; 'w' every element of the subspace is an n-th power in R;
    'u' every nonzero element has an m-th root whose n-th power is
    nonzero.
    """
    _require_commutative(r)
    if mode not in PROBE_MODES:
        raise ValueError(f"mode must be one of {PROBE_MODES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if mode == "u":
        if m is None or not (1 <= m <= n):
            raise ValueError("mode 'u' needs 1 <= m <= n")
    nil = nilpotency_index(r)
    if nil is None:
        raise AlgebraError("probe requires a nilpotent algebra")
    p = r.field.p
    hypothesis = True
    if mode == "v":
        for v in enumerate_subspace_vectors(subspace, cap):
            if any(v) and not any(r.power(v, n)):
                hypothesis = False
                break
    elif mode == "w":
        if p**r.dim > cap:
            raise CapExceededError("whole-algebra enumeration exceeds cap")
        powers = {
            r.power(v, n) for v in enumerate_subspace_vectors(full_subspace(r.field, r.dim), cap)
        }
        for w in enumerate_subspace_vectors(subspace, cap):
            if w not in powers:
                hypothesis = False
                break
    else:
        if p**r.dim > cap:
            raise CapExceededError("whole-algebra enumeration exceeds cap")
        root_powers: dict[tuple[int, ...], bool] = {}
        # For each m-th power, remember whether some root has nonzero n-th power.
        for v in enumerate_subspace_vectors(full_subspace(r.field, r.dim), cap):
            vm = r.power(v, m)
            good = any(r.power(v, n))
            root_powers[vm] = root_powers.get(vm, False) or good
        for u in enumerate_subspace_vectors(subspace, cap):
            if any(u) and not root_powers.get(u, False):
                hypothesis = False
                break
    bound = r.dim >= n * subspace.dim if hypothesis else None
    note = (
        "hypothesis verified exhaustively; bound reported, not asserted"
        if hypothesis
        else "hypothesis fails; bound not applicable"
    )
    return ProbeReport(
        mode, n, m, r.dim, subspace.dim, hypothesis, bound, nil, note
    )
