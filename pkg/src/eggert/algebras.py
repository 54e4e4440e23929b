"""Finite-dimensional non-unital algebras over GF(p) by structure constants.

Products are stored sparsely per basis pair: semigroup algebras have
single-term products and polynomial quotients fill in moderately.  All
construction paths validate bilinear associativity on basis triples,
exhaustively up to a dimension cap and on a seeded sample above it.

Ideal and subalgebra closures are worklist fixpoints over basis
products; everything is finite-dimensional by truncation, so no Groebner
machinery is needed anywhere.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .exactlin import (
    Matrix,
    PrimeField,
    Subspace,
    coordinates_in_basis,
    rref,
    subspace_from_rows,
)
from .semigroups import SemigroupWithZero

ASSOC_CHECK_DIM_CAP = 64
ASSOC_SAMPLE_TRIPLES = 4000
DEFAULT_BASIS_CAP = 6000


class AlgebraError(ValueError):
    """A structure-constant table violates associativity or commutativity."""


class CapExceededError(ValueError):
    """A requested construction or enumeration exceeds its configured cap."""


SparseVec = tuple[tuple[int, int], ...]  # ((basis index, coefficient), ...)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Algebra over GF(p) with basis products given sparsely.

    ``products[(i, j)]`` lists the nonzero coordinates of e_i * e_j;
    missing pairs multiply to zero.
    """

    field: PrimeField
    dim: int
    basis_labels: tuple[str, ...]
    products: Mapping[tuple[int, int], SparseVec]
    commutative: bool

    def __post_init__(self) -> None:
        if len(self.basis_labels) != self.dim:
            raise AlgebraError("label count != dim")
        for (i, j), vec in self.products.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError("product index out of range")
            for k, c in vec:
                if not (0 <= k < self.dim):
                    raise AlgebraError("product support out of range")
                if not (0 < c < self.field.p):
                    raise AlgebraError("coefficients must be reduced and nonzero")

    # -- vector helpers ------------------------------------------------

    def zero_vector(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def vector_from_label(self, label: str) -> tuple[int, ...]:
        try:
            return self.basis_vector(self.basis_labels.index(label))
        except ValueError:
            raise KeyError(f"no basis element labeled {label!r}") from None

    def add(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        p = self.field.p
        return tuple((a + b) % p for a, b in zip(u, v))

    def sub(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        p = self.field.p
        return tuple((a - b) % p for a, b in zip(u, v))

    def scale(self, c: int, v: Sequence[int]) -> tuple[int, ...]:
        p = self.field.p
        return tuple((c * a) % p for a in v)

    def mul(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        p = self.field.p
        out = [0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                vec = self.products.get((i, j))
                if vec:
                    ab = a * b
                    for k, c in vec:
                        out[k] = (out[k] + ab * c) % p
        return tuple(out)

    def power(self, v: Sequence[int], n: int) -> tuple[int, ...]:
        """n-th power, n >= 1, well-defined by associativity."""
        if n < 1:
            raise ValueError("power exponent must be >= 1")
        acc: Optional[tuple[int, ...]] = None
        base = tuple(v)
        while n:
            if n & 1:
                acc = base if acc is None else self.mul(acc, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        assert acc is not None
        return acc

    def element(self, coords: Sequence[int]) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.field.reduce(c) for c in coords))

    def basis_element(self, ref: int | str) -> "AlgebraElement":
        if isinstance(ref, str):
            return AlgebraElement(self, self.vector_from_label(ref))
        return AlgebraElement(self, self.basis_vector(ref))

    def full_subspace_rows(self) -> list[list[int]]:
        return [[1 if k == i else 0 for k in range(self.dim)] for i in range(self.dim)]


@dataclass(frozen=True)
class AlgebraElement:
    """Coordinate vector tied to its parent algebra, with operator sugar."""

    parent: FiniteAlgebra
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.parent.dim:
            raise AlgebraError("coordinate length != algebra dimension")

    def _check(self, other: "AlgebraElement") -> None:
        if self.parent is not other.parent:
            raise AlgebraError("elements live in different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, self.parent.add(self.coords, other.coords))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.parent, self.parent.sub(self.coords, other.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.parent, self.parent.mul(self.coords, other.coords))
        return AlgebraElement(self.parent, self.parent.scale(int(other), self.coords))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AlgebraElement":
        return AlgebraElement(self.parent, self.parent.power(self.coords, n))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def make_algebra(
    field: PrimeField,
    basis_labels: Sequence[str],
    products: Mapping[tuple[int, int], Iterable[tuple[int, int]]],
    commutative: bool,
    assoc_dim_cap: int = ASSOC_CHECK_DIM_CAP,
    sample_seed: int = 0,
) -> FiniteAlgebra:
    """Validate and freeze a structure-constant table.

    Associativity is checked on all basis triples when dim <= assoc_dim_cap,
    otherwise on a seeded sample of triples.  Commutative tables must be
    symmetric in the basis pair.
    """
    dim = len(basis_labels)
    cleaned: dict[tuple[int, int], SparseVec] = {}
    for key, vec in products.items():
        dense: dict[int, int] = {}
        for k, c in vec:
            dense[k] = (dense.get(k, 0) + c) % field.p
        clean = tuple(sorted((k, c) for k, c in dense.items() if c))
        if clean:
            cleaned[key] = clean
    alg = FiniteAlgebra(field, dim, tuple(basis_labels), cleaned, commutative)
    if commutative:
        for i in range(dim):
            for j in range(i + 1, dim):
                if cleaned.get((i, j)) != cleaned.get((j, i)):
                    raise AlgebraError(f"products not symmetric at ({i},{j})")
    if dim <= assoc_dim_cap:
        triples = itertools.product(range(dim), repeat=3)
    else:
        rng = random.Random(sample_seed)
        triples = (
            (rng.randrange(dim), rng.randrange(dim), rng.randrange(dim))
            for _ in range(ASSOC_SAMPLE_TRIPLES)
        )
    p = field.p
    get = cleaned.get
    for i, j, k in triples:
        lhs: dict[int, int] = {}
        for m, c in get((i, j), ()):
            for t, c2 in get((m, k), ()):
                lhs[t] = (lhs.get(t, 0) + c * c2) % p
        rhs: dict[int, int] = {}
        for m, c in get((j, k), ()):
            for t, c2 in get((i, m), ()):
                rhs[t] = (rhs.get(t, 0) + c * c2) % p
        if {t: c for t, c in lhs.items() if c} != {t: c for t, c in rhs.items() if c}:
            raise AlgebraError(f"associativity fails on basis triple ({i},{j},{k})")
    return alg


@dataclass(frozen=True)
class GradedView:
    """Degree assignment under which an algebra's products are graded."""

    algebra: FiniteAlgebra
    degree_of: tuple[int, ...]
    max_degree: int

    def __post_init__(self) -> None:
        if len(self.degree_of) != self.algebra.dim:
            raise AlgebraError("degree map length != dim")
        if any(d < 1 for d in self.degree_of):
            raise AlgebraError("degrees must be positive")
        for (i, j), vec in self.algebra.products.items():
            want = self.degree_of[i] + self.degree_of[j]
            for k, _ in vec:
                if self.degree_of[k] != want:
                    raise AlgebraError(
                        f"grading violated: deg({i})+deg({j}) != deg({k})"
                    )


def graded_components(view: GradedView) -> list[tuple[int, int, Subspace]]:
    """(degree, dimension, coordinate subspace) per occupied degree."""
    alg = view.algebra
    by_degree: dict[int, list[int]] = {}
    for i, d in enumerate(view.degree_of):
        by_degree.setdefault(d, []).append(i)
    out = []
    for d in sorted(by_degree):
        rows = [list(alg.basis_vector(i)) for i in by_degree[d]]
        out.append((d, len(rows), subspace_from_rows(alg.field, alg.dim, rows)))
    return out


def degree_component_subspace(view: GradedView, degree: int) -> Subspace:
    alg = view.algebra
    rows = [list(alg.basis_vector(i)) for i, d in enumerate(view.degree_of) if d == degree]
    return subspace_from_rows(alg.field, alg.dim, rows)


# -- constructions ----------------------------------------------------


def contracted_algebra(s: SemigroupWithZero, field: PrimeField) -> FiniteAlgebra:
    """Contracted semigroup algebra: basis the nonzero elements, products
    following the table with semigroup zero mapped to the algebra zero."""
    dim = s.size - 1
    products: dict[tuple[int, int], SparseVec] = {}
    for i in range(1, s.size):
        for j in range(1, s.size):
            t = s.table[i][j]
            if t != 0:
                products[(i - 1, j - 1)] = ((t - 1, 1),)
    return make_algebra(field, s.labels[1:], products, commutative=True)


def _var_names(num_vars: int) -> list[str]:
    if num_vars <= 3:
        return ["x", "y", "z"][:num_vars]
    return [f"x{i+1}" for i in range(num_vars)]


def _monomial_label(names: Sequence[str], exponents: Sequence[int]) -> str:
    parts = []
    for name, e in zip(names, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def truncated_polynomial(
    field: PrimeField,
    num_vars: int,
    max_total_degree: int,
    commutative: bool = True,
    basis_cap: int = DEFAULT_BASIS_CAP,
) -> tuple[FiniteAlgebra, GradedView]:
    """Polynomials without constant term in ``num_vars`` variables,
    truncated above total degree ``max_total_degree``.

    Commutative basis: monomials of degree 1..D.  Noncommutative basis:
    words of length 1..D, with concatenation products.
    """
    if num_vars < 1 or max_total_degree < 1:
        raise ValueError("need num_vars >= 1 and max_total_degree >= 1")
    names = _var_names(num_vars)
    if commutative:
        monomials: list[tuple[int, ...]] = []
        for d in range(1, max_total_degree + 1):
            level = [
                exps
                for exps in itertools.product(range(d + 1), repeat=num_vars)
                if sum(exps) == d
            ]
            level.sort(reverse=True)
            monomials.extend(level)
            if len(monomials) > basis_cap:
                raise CapExceededError("monomial basis exceeds cap")
        index_of = {m: i for i, m in enumerate(monomials)}
        products: dict[tuple[int, int], SparseVec] = {}
        for m1, i in index_of.items():
            for m2, j in index_of.items():
                s = tuple(a + b for a, b in zip(m1, m2))
                if sum(s) <= max_total_degree:
                    products[(i, j)] = ((index_of[s], 1),)
        labels = [_monomial_label(names, m) for m in monomials]
        alg = make_algebra(field, labels, products, commutative=True)
        degrees = tuple(sum(m) for m in monomials)
    else:
        words: list[tuple[int, ...]] = []
        for length in range(1, max_total_degree + 1):
            words.extend(itertools.product(range(num_vars), repeat=length))
            if len(words) > basis_cap:
                raise CapExceededError("word basis exceeds cap")
        index_of = {w: i for i, w in enumerate(words)}
        products = {}
        for w1, i in index_of.items():
            for w2, j in index_of.items():
                cat = w1 + w2
                if len(cat) <= max_total_degree:
                    products[(i, j)] = ((index_of[cat], 1),)
        labels = ["".join(names[c] for c in w) for w in words]
        alg = make_algebra(field, labels, products, commutative=False)
        degrees = tuple(len(w) for w in words)
    return alg, GradedView(alg, degrees, max_total_degree)


def subalgebra_generated(
    r: FiniteAlgebra, gens: Sequence[Sequence[int]]
) -> tuple[FiniteAlgebra, Matrix]:
    """Smallest subalgebra containing ``gens``: close the span under
    multiplication to a fixpoint.

    Returns the subalgebra with induced structure constants and the
    embedding matrix whose rows express its basis in parent coordinates.
    """
    span = subspace_from_rows(r.field, r.dim, [list(g) for g in gens])
    while True:
        rows = [list(row) for row in span.basis_rows()]
        new_rows = list(rows)
        for u in rows:
            for v in rows:
                new_rows.append(list(r.mul(u, v)))
        grown = subspace_from_rows(r.field, r.dim, new_rows)
        if grown.dim == span.dim:
            span = grown
            break
        span = grown
    basis_rows = span.basis_rows()
    products: dict[tuple[int, int], SparseVec] = {}
    for i, u in enumerate(basis_rows):
        for j, v in enumerate(basis_rows):
            w = r.mul(u, v)
            coords = coordinates_in_basis(span, w)
            if coords is None:
                raise AlgebraError("span closure failed to close under products")
            vec = tuple((k, c) for k, c in enumerate(coords) if c)
            if vec:
                products[(i, j)] = vec
    labels = []
    for idx, row in enumerate(basis_rows):
        support = [k for k, c in enumerate(row) if c]
        if len(support) == 1 and row[support[0]] == 1:
            labels.append(r.basis_labels[support[0]])
        else:
            labels.append(f"v{idx}")
    sub = make_algebra(r.field, labels, products, commutative=r.commutative)
    return sub, span.basis


def ideal_generated(r: FiniteAlgebra, gens: Sequence[Sequence[int]]) -> Subspace:
    """Span closure of ``gens`` under multiplication by every basis
    element (both sides when noncommutative)."""
    span = subspace_from_rows(r.field, r.dim, [list(g) for g in gens])
    while True:
        rows = [list(row) for row in span.basis_rows()]
        new_rows = list(rows)
        for u in rows:
            for k in range(r.dim):
                ek = r.basis_vector(k)
                new_rows.append(list(r.mul(u, ek)))
                if not r.commutative:
                    new_rows.append(list(r.mul(ek, u)))
        grown = subspace_from_rows(r.field, r.dim, new_rows)
        if grown.dim == span.dim:
            return grown
        span = grown


def is_ideal_subspace(r: FiniteAlgebra, ideal: Subspace) -> bool:
    for row in ideal.basis_rows():
        for k in range(r.dim):
            ek = r.basis_vector(k)
            if coordinates_in_basis(ideal, r.mul(row, ek)) is None:
                return False
            if not r.commutative and coordinates_in_basis(ideal, r.mul(ek, row)) is None:
                return False
    return True


def quotient(r: FiniteAlgebra, ideal: Subspace) -> tuple[FiniteAlgebra, Matrix]:
    """Quotient algebra R / ideal with its projection matrix.

    The quotient basis consists of the coordinates complementary to the
    ideal's pivot columns; reduction against the RREF ideal basis picks
    the canonical coset representative.
    """
    if ideal.ambient_dim != r.dim or ideal.field != r.field:
        raise AlgebraError("ideal does not live in this algebra")
    if not is_ideal_subspace(r, ideal):
        raise AlgebraError("subspace is not an ideal")
    p = r.field.p
    pivots = ideal.pivot_columns()
    pivot_set = set(pivots)
    keep = [k for k in range(r.dim) if k not in pivot_set]
    pos_of = {k: a for a, k in enumerate(keep)}

    def reduce_coset(v: Sequence[int]) -> tuple[int, ...]:
        res = [e % p for e in v]
        for i, c in enumerate(pivots):
            f = res[c]
            if f:
                row = ideal.basis.row(i)
                res = [(a - f * b) % p for a, b in zip(res, row)]
        return tuple(res[k] for k in keep)

    products: dict[tuple[int, int], SparseVec] = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            w = reduce_coset(r.mul(r.basis_vector(i), r.basis_vector(j)))
            vec = tuple((k, c) for k, c in enumerate(w) if c)
            if vec:
                products[(a, b)] = vec
    labels = [r.basis_labels[k] for k in keep]
    q = make_algebra(r.field, labels, products, commutative=r.commutative)
    proj_rows = [list(reduce_coset(r.basis_vector(k))) for k in range(r.dim)]
    projection = Matrix.from_rows(r.field, proj_rows, cols=len(keep)).transpose()
    return q, projection


def quotient_graded(
    r: FiniteAlgebra, view: GradedView, ideal: Subspace
) -> tuple[FiniteAlgebra, Matrix, GradedView]:
    """Quotient by a homogeneous ideal, carrying the grading over."""
    for row in ideal.basis_rows():
        degs = {view.degree_of[k] for k, c in enumerate(row) if c}
        if len(degs) > 1:
            raise AlgebraError("ideal basis row is not homogeneous")
    q, proj = quotient(r, ideal)
    pivot_set = set(ideal.pivot_columns())
    keep = [k for k in range(r.dim) if k not in pivot_set]
    degrees = tuple(view.degree_of[k] for k in keep)
    return q, proj, GradedView(q, degrees, view.max_degree)


def tensor_product(r: FiniteAlgebra, s: FiniteAlgebra) -> FiniteAlgebra:
    """Tensor product over the common ground field, basis the pairs."""
    if r.field != s.field:
        raise AlgebraError("field mismatch")
    p = r.field.p
    pairs = [(i, j) for i in range(r.dim) for j in range(s.dim)]
    index_of = {ij: n for n, ij in enumerate(pairs)}
    products: dict[tuple[int, int], SparseVec] = {}
    for (i1, j1), a in index_of.items():
        for (i2, j2), b in index_of.items():
            left = r.products.get((i1, i2))
            right = s.products.get((j1, j2))
            if not left or not right:
                continue
            acc: dict[int, int] = {}
            for k1, c1 in left:
                for k2, c2 in right:
                    t = index_of[(k1, k2)]
                    acc[t] = (acc.get(t, 0) + c1 * c2) % p
            vec = tuple(sorted((k, c) for k, c in acc.items() if c))
            if vec:
                products[(a, b)] = vec
    labels = [f"{r.basis_labels[i]}(x){s.basis_labels[j]}" for i, j in pairs]
    return make_algebra(
        r.field, labels, products, commutative=r.commutative and s.commutative
    )


def direct_sum(r: FiniteAlgebra, s: FiniteAlgebra) -> FiniteAlgebra:
    """Direct product of algebras: block tables, cross products zero."""
    if r.field != s.field:
        raise AlgebraError("field mismatch")
    products: dict[tuple[int, int], SparseVec] = {}
    for (i, j), vec in r.products.items():
        products[(i, j)] = vec
    for (i, j), vec in s.products.items():
        products[(i + r.dim, j + r.dim)] = tuple((k + r.dim, c) for k, c in vec)
    labels = [f"l.{lab}" for lab in r.basis_labels] + [f"r.{lab}" for lab in s.basis_labels]
    return make_algebra(
        r.field, labels, products, commutative=r.commutative and s.commutative
    )


# -- forbidden-word monomial algebra ----------------------------------

_FORBIDDEN_ENUM_CAP = 10_000_000


def _forbidden_letters(d: int) -> list[str]:
    return ["x", "y"] + [f"z{i}" for i in range(1, d)]


def _extension_ok(word: tuple[int, ...], nxt: int) -> bool:
    # Letters: 0 = x, 1 = y, >=2 annihilator-free extras.  A word dies if
    # it contains xx, yy, or any 3-letter window without the factor xy.
    if word:
        last = word[-1]
        if (last, nxt) in ((0, 0), (1, 1)):
            return False
        if len(word) >= 2:
            a, b = word[-2], word[-1]
            if not ((a, b) == (0, 1) or (b, nxt) == (0, 1)):
                return False
    return True


def _forbidden_words_by_degree(d: int, max_degree: int, cap: int) -> list[list[tuple[int, ...]]]:
    if (d + 1) ** max_degree > cap:
        raise CapExceededError("alphabet^degree exceeds enumeration cap")
    alphabet = range(d + 1)
    levels: list[list[tuple[int, ...]]] = [[(c,) for c in alphabet]]
    for _ in range(2, max_degree + 1):
        nxt = [
            w + (c,) for w in levels[-1] for c in alphabet if _extension_ok(w, c)
        ]
        levels.append(nxt)
    return levels


def forbidden_word_dims(d: int, max_degree: int, cap: int = _FORBIDDEN_ENUM_CAP) -> list[int]:
    """Number of surviving words per degree 1..max_degree over the
    alphabet {x, y, z1, ..., z_{d-1}} with relators xx, yy, and every
    3-letter word lacking the factor xy."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return [len(level) for level in _forbidden_words_by_degree(d, max_degree, cap)]


def forbidden_word_algebra(
    field: PrimeField, d: int, max_degree: int, cap: int = _FORBIDDEN_ENUM_CAP
) -> tuple[FiniteAlgebra, GradedView]:
    """The graded monomial algebra presented by those same relators,
    truncated above ``max_degree``."""
    levels = _forbidden_words_by_degree(d, max_degree, cap)
    words = [w for level in levels for w in level]
    index_of = {w: i for i, w in enumerate(words)}
    survivors = set(index_of)
    products: dict[tuple[int, int], SparseVec] = {}
    for w1, i in index_of.items():
        for w2, j in index_of.items():
            cat = w1 + w2
            if len(cat) <= max_degree and cat in survivors:
                products[(i, j)] = ((index_of[cat], 1),)
    letters = _forbidden_letters(d)
    labels = ["".join(letters[c] for c in w) for w in words]
    alg = make_algebra(field, labels, products, commutative=False)
    return alg, GradedView(alg, tuple(len(w) for w in words), max_degree)


# -- four-generator graded family with two annihilators ----------------


def two_vars_with_annihilators(
    field: PrimeField, max_degree: int = 4
) -> tuple[FiniteAlgebra, GradedView]:
    """Commutative graded algebra on x, y, z1, z2 where z1, z2 multiply
    everything to zero, truncated above ``max_degree``.

    Component dimensions are 4 in degree 1 and n+1 in degree 1 < n <= max.
    """
    monomials = [
        (a, d - a) for d in range(1, max_degree + 1) for a in range(d, -1, -1)
    ]
    index_of = {m: i for i, m in enumerate(monomials)}
    products: dict[tuple[int, int], SparseVec] = {}
    for m1, i in index_of.items():
        for m2, j in index_of.items():
            s = (m1[0] + m2[0], m1[1] + m2[1])
            if sum(s) <= max_degree:
                products[(i, j)] = ((index_of[s], 1),)
    labels = [_monomial_label(["x", "y"], m) for m in monomials] + ["z1", "z2"]
    alg = make_algebra(field, labels, products, commutative=True)
    degrees = tuple(sum(m) for m in monomials) + (1, 1)
    return alg, GradedView(alg, degrees, max_degree)


def random_top_degree_quotient(
    field: PrimeField, seed: int
) -> tuple[FiniteAlgebra, GradedView]:
    """Quotient of ``two_vars_with_annihilators`` by two independent
    pseudo-random homogeneous relations of top degree (redrawn until
    independent), dropping its component dimensions from (4,3,4,5) to
    (4,3,4,3)."""
    base, view = two_vars_with_annihilators(field, max_degree=4)
    top = [i for i, deg in enumerate(view.degree_of) if deg == 4]
    rng = random.Random(seed)
    while True:
        rows = [
            [rng.randrange(field.p) if k in top else 0 for k in range(base.dim)]
            for _ in range(2)
        ]
        m = Matrix.from_rows(field, rows, cols=base.dim)
        if rref(m)[1] == 2:
            break
    ideal = ideal_generated(base, rows)
    q, _, qview = quotient_graded(base, view, ideal)
    return q, qview


def drop_top_component(
    r: FiniteAlgebra, view: GradedView
) -> tuple[FiniteAlgebra, GradedView]:
    """Quotient by the span of the highest occupied degree (an ideal)."""
    top = max(view.degree_of)
    rows = [list(r.basis_vector(i)) for i, d in enumerate(view.degree_of) if d == top]
    ideal = subspace_from_rows(r.field, r.dim, rows)
    q, _, qview = quotient_graded(r, view, ideal)
    return q, qview
