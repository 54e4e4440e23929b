"""Finite commutative semigroups with an absorbing zero.

A semigroup is a size x size multiplication table of element indices with
the zero element fixed at index 0.  Constructors renumber so that this
convention always holds, which keeps Rees quotients and the contraction
to a semigroup algebra uniform.  Every construction is validated
exhaustively (absorption, commutativity, associativity); tables are
desk-scale so the vectorized check is cheap.

Numerical presentations follow the additive picture: the subsemigroup of
the positive integers generated by a finite set, truncated above a bound
(all larger sums become zero), then divided by the smallest congruence
containing a list of ``identify(a, b)`` / ``collapse_to_zero(a)``
relations.  The closure is a union-find fixpoint that keeps translating
newly united pairs by every element until stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

import numpy as np

DEFAULT_BOUND_CAP = 10_000


class SemigroupError(ValueError):
    """A multiplication table violates absorption, commutativity or associativity."""


class PresentationError(ValueError):
    """A numerical presentation refers to integers outside the subsemigroup."""


class NotAnIdealError(ValueError):
    """Rees quotient target is not closed under multiplication by the semigroup."""


@dataclass(frozen=True)
class SemigroupWithZero:
    """Finite commutative semigroup with zero, given by its table.

    ``table[i][j]`` is the index of the product; index 0 is the zero.
    Immutable after construction and safe to share across workers.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        if n == 0:
            raise SemigroupError("a semigroup with zero has at least the zero element")
        if len(self.labels) != n:
            raise SemigroupError("label count != size")
        if any(len(row) != n for row in self.table):
            raise SemigroupError("table is not square")
        arr = self._np_table
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise SemigroupError("table entry out of range")
        if arr[0].any() or arr[:, 0].any():
            raise SemigroupError("index 0 is not absorbing")
        if not np.array_equal(arr, arr.T):
            raise SemigroupError("table is not commutative")
        # (i*j)*k == i*(j*k), row by row to bound memory.
        for i in range(n):
            lhs = arr[arr[i], :]
            rhs = arr[i, arr]
            if not np.array_equal(lhs, rhs):
                j, k = np.argwhere(lhs != rhs)[0]
                raise SemigroupError(f"associativity fails at ({i},{j},{k})")

    @cached_property
    def _np_table(self) -> np.ndarray:
        arr = np.asarray(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def zero(self) -> int:
        return 0

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, n: int) -> int:
        """n-th power of element i, n >= 1, by square and multiply."""
        if n < 1:
            raise ValueError("power exponent must be >= 1")
        acc: Optional[int] = None
        base = i
        while n:
            if n & 1:
                acc = base if acc is None else self.table[acc][base]
            n >>= 1
            if n:
                base = self.table[base][base]
        assert acc is not None
        return acc

    def elements(self) -> range:
        return range(self.size)

    def nonzero(self) -> range:
        return range(1, self.size)

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labeled {label!r}") from None


@dataclass(frozen=True)
class PlainSemigroup:
    """Commutative semigroup without a distinguished zero (product factors)."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise SemigroupError("table is not square and nonempty")
        if len(self.labels) != n:
            raise SemigroupError("label count != size")
        for i in range(n):
            for j in range(n):
                if self.table[i][j] != self.table[j][i]:
                    raise SemigroupError("table is not commutative")
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise SemigroupError(f"associativity fails at ({i},{j},{k})")

    @property
    def size(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a semigroup's elements, by index."""

    parent: SemigroupWithZero
    members: frozenset[int]

    def __post_init__(self) -> None:
        if any(not (0 <= m < self.parent.size) for m in self.members):
            raise ValueError("subset member out of range")

    def nonzero_count(self) -> int:
        return len(self.members - {0})


@dataclass(frozen=True)
class Identify:
    a: int
    b: int


@dataclass(frozen=True)
class CollapseToZero:
    a: int


Relation = Union[Identify, CollapseToZero]


@dataclass(frozen=True)
class NumericalPresentation:
    """Additive subsemigroup generated by ``generators``, truncated above
    ``bound``, then quotiented by the congruence the relations generate."""

    generators: tuple[int, ...]
    bound: int
    relations: tuple[Relation, ...] = ()
    bound_cap: int = DEFAULT_BOUND_CAP

    def __post_init__(self) -> None:
        if not self.generators or any(g < 1 for g in self.generators):
            raise PresentationError("generators must be positive integers")
        if self.bound < 1:
            raise PresentationError("bound must be >= 1")
        if self.bound > self.bound_cap:
            raise PresentationError(f"bound {self.bound} exceeds cap {self.bound_cap}")


def generated_values(generators: Sequence[int], bound: int) -> list[int]:
    """Members of the additive subsemigroup generated by ``generators``
    that are <= bound, ascending."""
    reach = [False] * (bound + 1)
    for v in range(1, bound + 1):
        for g in generators:
            if v == g or (v > g and reach[v - g]):
                reach[v] = True
                break
    return [v for v in range(1, bound + 1) if reach[v]]


def numerical_base(generators: Sequence[int], bound: int) -> tuple[SemigroupWithZero, list[int]]:
    """Relation-free truncated numerical semigroup and its value list.

    Element i >= 1 carries values[i-1]; sums above ``bound`` are zero.
    """
    values = generated_values(generators, bound)
    index_of = {v: i + 1 for i, v in enumerate(values)}
    n = len(values) + 1
    table = [[0] * n for _ in range(n)]
    for i, a in enumerate(values):
        for j, b in enumerate(values):
            s = a + b
            table[i + 1][j + 1] = index_of.get(s, 0) if s <= bound else 0
    labels = ("0",) + tuple(str(v) for v in values)
    sg = SemigroupWithZero(tuple(tuple(r) for r in table), labels)
    return sg, values


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # Keep the smaller index as root so the zero class stays rooted at 0.
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def congruence_closure(
    sg: SemigroupWithZero, pairs: Iterable[tuple[int, int]]
) -> tuple[int, ...]:
    """Smallest congruence containing ``pairs``, as a class-id map.

    Union-find fixpoint: every newly united pair is translated by every
    element of the semigroup and the results re-enqueued until stable.
    Class ids are dense, and the class of the zero element is id 0.
    """
    n = sg.size
    uf = _UnionFind(n)
    queue = [(a, b) for a, b in pairs]
    for a, b in queue:
        uf.union(a, b)
    while queue:
        a, b = queue.pop()
        for s in sg.elements():
            x, y = sg.table[a][s], sg.table[b][s]
            if uf.find(x) != uf.find(y):
                uf.union(x, y)
                queue.append((x, y))
    roots = [uf.find(i) for i in range(n)]
    ids: dict[int, int] = {roots[0]: 0}
    for r in roots:
        if r not in ids:
            ids[r] = len(ids)
    return tuple(ids[r] for r in roots)


def quotient_by_congruence(
    sg: SemigroupWithZero, class_map: Sequence[int]
) -> SemigroupWithZero:
    """Quotient semigroup; class 0 (the zero's class) becomes the new zero."""
    n_classes = max(class_map) + 1
    reps: list[int] = [-1] * n_classes
    members: list[list[int]] = [[] for _ in range(n_classes)]
    for elem, c in enumerate(class_map):
        members[c].append(elem)
        if reps[c] == -1:
            reps[c] = elem
    table = [
        [class_map[sg.table[reps[a]][reps[b]]] for b in range(n_classes)]
        for a in range(n_classes)
    ]
    labels = []
    for c in range(n_classes):
        labs = [sg.labels[m] for m in members[c]]
        labels.append(labs[0] if len(labs) == 1 else "=".join(labs))
    return SemigroupWithZero(tuple(tuple(r) for r in table), tuple(labels))


def from_numerical(pres: NumericalPresentation) -> SemigroupWithZero:
    """Build the quotient of a truncated numerical semigroup by the
    congruence its relations generate."""
    base, values = numerical_base(pres.generators, pres.bound)
    index_of = {v: i + 1 for i, v in enumerate(values)}

    def resolve(v: int, what: str) -> int:
        if v not in index_of:
            raise PresentationError(
                f"{what} refers to {v}, which is not in the subsemigroup within bound {pres.bound}"
            )
        return index_of[v]

    pairs: list[tuple[int, int]] = []
    for rel in pres.relations:
        if isinstance(rel, Identify):
            pairs.append((resolve(rel.a, "identify"), resolve(rel.b, "identify")))
        elif isinstance(rel, CollapseToZero):
            pairs.append((resolve(rel.a, "collapse"), 0))
        else:
            raise PresentationError(f"unknown relation {rel!r}")
    class_map = congruence_closure(base, pairs)
    return quotient_by_congruence(base, class_map)


def cyclic_truncated(n_bound: int) -> SemigroupWithZero:
    """The semigroup {1, 2, ..., N, 0} with addition truncated above N."""
    if n_bound < 1:
        raise ValueError("bound must be >= 1")
    sg, _ = numerical_base([1], n_bound)
    return sg


def cyclic_group(order: int) -> PlainSemigroup:
    """Cyclic group of the given order, written additively mod order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    table = tuple(tuple((i + j) % order for j in range(order)) for i in range(order))
    labels = tuple("e" if i == 0 else f"g{i}" for i in range(order))
    return PlainSemigroup(table, labels)


def adjoin_zero(s: PlainSemigroup) -> SemigroupWithZero:
    """Add a fresh absorbing zero at index 0, shifting existing elements up."""
    n = s.size
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            table[i + 1][j + 1] = s.table[i][j] + 1
    return SemigroupWithZero(tuple(tuple(r) for r in table), ("0",) + s.labels)


def direct_product(s: SemigroupWithZero, t: SemigroupWithZero) -> SemigroupWithZero:
    """Componentwise product with the two zeros fused.

    The ideal (S x {0}) u ({0} x T) collapses to the single zero, so the
    nonzero elements are exactly the pairs of nonzero elements.
    """
    pairs = [(a, b) for a in s.nonzero() for b in t.nonzero()]
    index_of = {ab: i + 1 for i, ab in enumerate(pairs)}
    n = len(pairs) + 1
    table = [[0] * n for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            x, y = s.table[a][c], t.table[b][d]
            table[i + 1][j + 1] = index_of.get((x, y), 0) if x and y else 0
    labels = ("0",) + tuple(f"({s.labels[a]},{t.labels[b]})" for a, b in pairs)
    return SemigroupWithZero(tuple(tuple(r) for r in table), labels)


def is_ideal(s: SemigroupWithZero, members: frozenset[int]) -> bool:
    if 0 not in members:
        return False
    return all(s.table[m][x] in members for m in members for x in s.elements())


def rees_quotient(s: SemigroupWithZero, ideal: ElementSubset) -> SemigroupWithZero:
    """Collapse an ideal to the zero element."""
    if ideal.parent is not s:
        raise ValueError("ideal belongs to a different semigroup")
    members = ideal.members | {0}
    if not is_ideal(s, members):
        raise NotAnIdealError("subset is not an ideal")
    class_map = [0 if i in members else -1 for i in range(s.size)]
    nxt = 1
    for i in range(s.size):
        if class_map[i] == -1:
            class_map[i] = nxt
            nxt += 1
    return quotient_by_congruence(s, class_map)


def power_subset(x: ElementSubset, n: int) -> ElementSubset:
    """The set of n-th powers {a^n : a in X}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sg = x.parent
    return ElementSubset(sg, frozenset(sg.power(a, n) for a in x.members))


def product_subset(x: ElementSubset, i: int) -> ElementSubset:
    """The set of i-fold products {a_1 ... a_i : a_k in X}."""
    if i < 1:
        raise ValueError("i must be >= 1")
    sg = x.parent
    current = set(x.members)
    for _ in range(i - 1):
        current = {sg.table[a][b] for a in current for b in x.members}
    return ElementSubset(sg, frozenset(current))


def deficit(s: SemigroupWithZero, n: int) -> int:
    """n * card(S^(n) - {0}) - card(S - {0}); conjectured <= 0 for nilpotent S."""
    if n < 1:
        raise ValueError("n must be >= 1")
    powers = {s.power(a, n) for a in s.nonzero()}
    return n * len(powers - {0}) - (s.size - 1)


def is_nilpotent(s: SemigroupWithZero) -> Optional[int]:
    """Least n with S^n = {0}, or None if powers never die."""
    current = frozenset(s.elements())
    n = 1
    while True:
        if current == {0}:
            return n
        nxt = frozenset(s.table[a][b] for a in current for b in s.elements())
        if nxt == current:
            return None
        current = nxt
        n += 1


def whole_subset(s: SemigroupWithZero) -> ElementSubset:
    return ElementSubset(s, frozenset(s.elements()))


def nilcyclic_times_cyclic_group(
    nil_index: int, group_order: int
) -> tuple[SemigroupWithZero, ElementSubset]:
    """Product of the nilpotent cyclic semigroup {x, ..., x^nil_index, 0}
    with a cyclic group of the given order, zeros fused.

    Returns the semigroup and the subset X = {x} x group, on which the
    nil_index-th power map is injective whenever gcd(nil_index, order) = 1.
    """
    s = direct_product(cyclic_truncated(nil_index), adjoin_zero(cyclic_group(group_order)))
    xs = frozenset(
        i for i in s.nonzero() if s.labels[i].startswith("(1,")
    )
    return s, ElementSubset(s, xs)


def truncated_pair_with_annihilators(
    num_annihilators: int, degree_bound: int
) -> tuple[SemigroupWithZero, ElementSubset]:
    """Free abelian semigroup on two generators x, y truncated above
    ``degree_bound``, plus ``num_annihilators`` generators whose product
    with every generator is zero.

    Returns the semigroup and its generating set X (all generators).
    Monomials of total degree <= degree_bound stay distinct; every
    product of degree_bound + 1 generators is zero.
    """
    monomials = [
        (a, d - a) for d in range(1, degree_bound + 1) for a in range(d, -1, -1)
    ]
    index_of = {m: i + 1 for i, m in enumerate(monomials)}
    n_mon = len(monomials)
    n = 1 + n_mon + num_annihilators
    table = [[0] * n for _ in range(n)]
    for (m1, i) in index_of.items():
        for (m2, j) in index_of.items():
            s = (m1[0] + m2[0], m1[1] + m2[1])
            table[i][j] = index_of.get(s, 0) if sum(s) <= degree_bound else 0

    def monom_label(m: tuple[int, int]) -> str:
        parts = []
        for name, e in zip(("x", "y"), m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    labels = (
        ("0",)
        + tuple(monom_label(m) for m in monomials)
        + tuple(f"z{i+1}" for i in range(num_annihilators))
    )
    sg = SemigroupWithZero(tuple(tuple(r) for r in table), labels)
    gens = frozenset(
        {index_of[(1, 0)], index_of[(0, 1)]}
        | set(range(1 + n_mon, n))
    )
    return sg, ElementSubset(sg, gens)
