"""Independent brute-force oracles used to freeze expected test values.

Nothing here may call into the code paths it checks: congruences come
from raw partition enumeration, power sets from elementwise repetition,
polynomial identities from dict-based expansion.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence


def set_partitions(items: list[int]):
    """All partitions of ``items`` into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def brute_force_minimal_congruence(
    table: Sequence[Sequence[int]], pairs: Sequence[tuple[int, int]]
) -> tuple[int, ...]:
    """Intersection of all congruences containing ``pairs``.

    Enumerates all partitions (feasible up to ~8 elements), keeps those
    compatible with the multiplication table and containing the pairs,
    and forms their common refinement.  Returns a class-id map with the
    class of element 0 numbered 0.
    """
    n = len(table)

    def is_congruence(class_of: list[int]) -> bool:
        for a in range(n):
            for b in range(a + 1, n):
                if class_of[a] != class_of[b]:
                    continue
                for s in range(n):
                    if class_of[table[a][s]] != class_of[table[b][s]]:
                        return False
        return True

    valid: list[list[int]] = []
    for part in set_partitions(list(range(n))):
        class_of = [0] * n
        for cid, block in enumerate(part):
            for e in block:
                class_of[e] = cid
        if any(class_of[a] != class_of[b] for a, b in pairs):
            continue
        if is_congruence(class_of):
            valid.append(class_of)
    assert valid, "the one-block partition is always a congruence"
    signature = [tuple(m[e] for m in valid) for e in range(n)]
    ids: dict[tuple[int, ...], int] = {signature[0]: 0}
    for k in signature:
        if k not in ids:
            ids[k] = len(ids)
    return tuple(ids[k] for k in signature)


def brute_power_set(table: Sequence[Sequence[int]], members, n: int) -> frozenset[int]:
    """{a^n : a in members} by literal repeated multiplication."""
    out = set()
    for a in members:
        acc = a
        for _ in range(n - 1):
            acc = table[acc][a]
        out.add(acc)
    return frozenset(out)


def brute_product_set(table: Sequence[Sequence[int]], members, i: int) -> frozenset[int]:
    """All i-fold products, enumerated over tuples (exponential, keep i small)."""
    out = set()
    for combo in itertools.product(list(members), repeat=i):
        acc = combo[0]
        for b in combo[1:]:
            acc = table[acc][b]
        out.add(acc)
    return frozenset(out)


def brute_nilpotency_index(table: Sequence[Sequence[int]]) -> Optional[int]:
    """Least n with every n-fold product equal to 0, by set iteration."""
    n_elems = len(table)
    current = frozenset(range(n_elems))
    n = 1
    seen = set()
    while True:
        if current == frozenset({0}):
            return n
        if current in seen:
            return None
        seen.add(current)
        current = frozenset(table[a][b] for a in current for b in range(n_elems))
        n += 1


class PolyMod:
    """Tiny multivariate polynomial arithmetic over GF(p), dict-backed.

    Keys are exponent tuples; used to expand identities independently of
    the algebra machinery under test.
    """

    def __init__(self, p: int, terms: Optional[dict] = None) -> None:
        self.p = p
        self.terms = {k: v % p for k, v in (terms or {}).items() if v % p}

    @classmethod
    def variable(cls, p: int, i: int, nvars: int) -> "PolyMod":
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(p, {e: 1})

    def __add__(self, other: "PolyMod") -> "PolyMod":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = (out.get(k, 0) + v) % self.p
        return PolyMod(self.p, out)

    def scale(self, c: int) -> "PolyMod":
        return PolyMod(self.p, {k: (v * c) % self.p for k, v in self.terms.items()})

    def __mul__(self, other: "PolyMod") -> "PolyMod":
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = (out.get(k, 0) + v1 * v2) % self.p
        return PolyMod(self.p, out)

    def power(self, n: int) -> "PolyMod":
        acc = PolyMod(self.p, dict(self.terms))
        for _ in range(n - 1):
            acc = acc * self
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyMod) and self.p == other.p and self.terms == other.terms
