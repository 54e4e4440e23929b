"""JSON spec documents for semigroups and algebras.

Parsing is strict: unknown kinds, missing fields, and type mismatches
raise SpecError carrying a JSON-pointer path to the offending node.
Every parsed spec re-serializes to canonical JSON that parses back to an
equal spec (the CLI round-trip contract).

Semigroup kinds: cyclic, numerical, product, group_with_zero, rees.
Algebra kinds: contracted, truncated_poly, subalgebra, quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebras import (
    FiniteAlgebra,
    contracted_algebra,
    ideal_generated,
    quotient,
    subalgebra_generated,
    truncated_polynomial,
)
from .exactlin import PrimeField
from .semigroups import (
    CollapseToZero,
    ElementSubset,
    Identify,
    NumericalPresentation,
    SemigroupWithZero,
    adjoin_zero,
    cyclic_group,
    cyclic_truncated,
    direct_product,
    from_numerical,
    rees_quotient,
)


class SpecError(ValueError):
    """Schema violation, reported with a JSON-pointer path."""

    def __init__(self, pointer: str, message: str) -> None:
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


def _need(obj: dict, key: str, pointer: str):
    if key not in obj:
        raise SpecError(pointer, f"missing required field {key!r}")
    return obj[key]


def _as_int(value, pointer: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecError(pointer, f"expected an integer, got {value!r}")
    return value


def _as_obj(value, pointer: str) -> dict:
    if not isinstance(value, dict):
        raise SpecError(pointer, f"expected an object, got {type(value).__name__}")
    return value


# -- semigroup specs ----------------------------------------------------


@dataclass(frozen=True)
class CyclicSpec:
    bound: int

    def to_json(self) -> dict:
        return {"kind": "cyclic", "bound": self.bound}

    def build(self) -> SemigroupWithZero:
        return cyclic_truncated(self.bound)


@dataclass(frozen=True)
class NumericalSpec:
    generators: tuple[int, ...]
    bound: int
    relations: tuple[tuple, ...]  # ("identify", a, b) | ("collapse", a)

    def to_json(self) -> dict:
        rels = []
        for rel in self.relations:
            if rel[0] == "identify":
                rels.append({"identify": [rel[1], rel[2]]})
            else:
                rels.append({"collapse": rel[1]})
        return {
            "kind": "numerical",
            "generators": list(self.generators),
            "bound": self.bound,
            "relations": rels,
        }

    def build(self) -> SemigroupWithZero:
        relations = tuple(
            Identify(rel[1], rel[2]) if rel[0] == "identify" else CollapseToZero(rel[1])
            for rel in self.relations
        )
        return from_numerical(NumericalPresentation(self.generators, self.bound, relations))


@dataclass(frozen=True)
class GroupWithZeroSpec:
    order: int

    def to_json(self) -> dict:
        return {"kind": "group_with_zero", "order": self.order}

    def build(self) -> SemigroupWithZero:
        return adjoin_zero(cyclic_group(self.order))


@dataclass(frozen=True)
class ProductSpec:
    left: "SemigroupSpec"
    right: "SemigroupSpec"

    def to_json(self) -> dict:
        return {"kind": "product", "left": self.left.to_json(), "right": self.right.to_json()}

    def build(self) -> SemigroupWithZero:
        return direct_product(self.left.build(), self.right.build())


@dataclass(frozen=True)
class ReesSpec:
    of: "SemigroupSpec"
    ideal: tuple[str, ...]

    def to_json(self) -> dict:
        return {"kind": "rees", "of": self.of.to_json(), "ideal": list(self.ideal)}

    def build(self) -> SemigroupWithZero:
        s = self.of.build()
        members = frozenset(s.index_of_label(lab) for lab in self.ideal) | {0}
        return rees_quotient(s, ElementSubset(s, members))


SemigroupSpec = Union[CyclicSpec, NumericalSpec, GroupWithZeroSpec, ProductSpec, ReesSpec]

SEMIGROUP_KINDS = ("cyclic", "numerical", "product", "group_with_zero", "rees")


def parse_semigroup_spec(obj, pointer: str = "") -> SemigroupSpec:
    obj = _as_obj(obj, pointer)
    kind = _need(obj, "kind", pointer)
    if kind == "cyclic":
        return CyclicSpec(_as_int(_need(obj, "bound", pointer), f"{pointer}/bound"))
    if kind == "numerical":
        gens_raw = _need(obj, "generators", pointer)
        if not isinstance(gens_raw, list) or not gens_raw:
            raise SpecError(f"{pointer}/generators", "expected a nonempty array")
        gens = tuple(
            _as_int(g, f"{pointer}/generators/{i}") for i, g in enumerate(gens_raw)
        )
        bound = _as_int(_need(obj, "bound", pointer), f"{pointer}/bound")
        relations = []
        for i, rel in enumerate(obj.get("relations", [])):
            rel_ptr = f"{pointer}/relations/{i}"
            rel = _as_obj(rel, rel_ptr)
            if "identify" in rel:
                pair = rel["identify"]
                if not isinstance(pair, list) or len(pair) != 2:
                    raise SpecError(f"{rel_ptr}/identify", "expected [a, b]")
                relations.append(
                    (
                        "identify",
                        _as_int(pair[0], f"{rel_ptr}/identify/0"),
                        _as_int(pair[1], f"{rel_ptr}/identify/1"),
                    )
                )
            elif "collapse" in rel:
                relations.append(("collapse", _as_int(rel["collapse"], f"{rel_ptr}/collapse")))
            else:
                raise SpecError(rel_ptr, "expected an 'identify' or 'collapse' relation")
        return NumericalSpec(gens, bound, tuple(relations))
    if kind == "group_with_zero":
        return GroupWithZeroSpec(_as_int(_need(obj, "order", pointer), f"{pointer}/order"))
    if kind == "product":
        return ProductSpec(
            parse_semigroup_spec(_need(obj, "left", pointer), f"{pointer}/left"),
            parse_semigroup_spec(_need(obj, "right", pointer), f"{pointer}/right"),
        )
    if kind == "rees":
        ideal_raw = _need(obj, "ideal", pointer)
        if not isinstance(ideal_raw, list):
            raise SpecError(f"{pointer}/ideal", "expected an array of element labels")
        ideal = tuple(
            lab if isinstance(lab, str) else str(_as_int(lab, f"{pointer}/ideal/{i}"))
            for i, lab in enumerate(ideal_raw)
        )
        return ReesSpec(
            parse_semigroup_spec(_need(obj, "of", pointer), f"{pointer}/of"), ideal
        )
    raise SpecError(
        f"{pointer}/kind", f"unknown semigroup kind {kind!r}; expected one of {SEMIGROUP_KINDS}"
    )


# -- algebra specs ------------------------------------------------------


@dataclass(frozen=True)
class ContractedSpec:
    semigroup: SemigroupSpec
    p: int

    def to_json(self) -> dict:
        return {"kind": "contracted", "semigroup": self.semigroup.to_json(), "p": self.p}

    def build(self) -> FiniteAlgebra:
        return contracted_algebra(self.semigroup.build(), PrimeField(self.p))


@dataclass(frozen=True)
class TruncatedPolySpec:
    p: int
    vars: int
    degree: int
    commutative: bool

    def to_json(self) -> dict:
        return {
            "kind": "truncated_poly",
            "p": self.p,
            "vars": self.vars,
            "degree": self.degree,
            "commutative": self.commutative,
        }

    def build(self) -> FiniteAlgebra:
        alg, _ = truncated_polynomial(
            PrimeField(self.p), self.vars, self.degree, commutative=self.commutative
        )
        return alg


def _resolve_basis_ref(alg: FiniteAlgebra, ref, pointer: str) -> tuple[int, ...]:
    if isinstance(ref, str):
        label = ref
    elif isinstance(ref, int) and not isinstance(ref, bool):
        label = "x" if ref == 1 else f"x^{ref}"
    else:
        raise SpecError(pointer, f"expected an exponent or basis label, got {ref!r}")
    try:
        return alg.vector_from_label(label)
    except KeyError:
        raise SpecError(pointer, f"no basis element labeled {label!r}") from None


@dataclass(frozen=True)
class SubalgebraSpec:
    of: "AlgebraSpec"
    generators: tuple[Union[int, str], ...]

    def to_json(self) -> dict:
        return {
            "kind": "subalgebra",
            "of": self.of.to_json(),
            "generators": list(self.generators),
        }

    def build(self) -> FiniteAlgebra:
        parent = self.of.build()
        gens = [
            _resolve_basis_ref(parent, ref, f"/generators/{i}")
            for i, ref in enumerate(self.generators)
        ]
        sub, _ = subalgebra_generated(parent, gens)
        return sub


@dataclass(frozen=True)
class QuotientSpec:
    of: "AlgebraSpec"
    relators: tuple[tuple[tuple[Union[int, str], int], ...], ...]

    def to_json(self) -> dict:
        return {
            "kind": "quotient",
            "of": self.of.to_json(),
            "relators": [[[ref, c] for ref, c in relator] for relator in self.relators],
        }

    def build(self) -> FiniteAlgebra:
        parent = self.of.build()
        vectors = []
        for i, relator in enumerate(self.relators):
            vec = parent.zero_vector()
            for j, (ref, coeff) in enumerate(relator):
                term = _resolve_basis_ref(parent, ref, f"/relators/{i}/{j}")
                vec = parent.add(vec, parent.scale(coeff, term))
            vectors.append(vec)
        ideal = ideal_generated(parent, vectors)
        q, _ = quotient(parent, ideal)
        return q


AlgebraSpec = Union[ContractedSpec, TruncatedPolySpec, SubalgebraSpec, QuotientSpec]

ALGEBRA_KINDS = ("contracted", "truncated_poly", "subalgebra", "quotient")


def parse_algebra_spec(obj, pointer: str = "") -> AlgebraSpec:
    obj = _as_obj(obj, pointer)
    kind = _need(obj, "kind", pointer)
    if kind == "contracted":
        p = _as_int(_need(obj, "p", pointer), f"{pointer}/p")
        return ContractedSpec(
            parse_semigroup_spec(_need(obj, "semigroup", pointer), f"{pointer}/semigroup"), p
        )
    if kind == "truncated_poly":
        commutative = obj.get("commutative", True)
        if not isinstance(commutative, bool):
            raise SpecError(f"{pointer}/commutative", "expected a boolean")
        return TruncatedPolySpec(
            _as_int(_need(obj, "p", pointer), f"{pointer}/p"),
            _as_int(_need(obj, "vars", pointer), f"{pointer}/vars"),
            _as_int(_need(obj, "degree", pointer), f"{pointer}/degree"),
            commutative,
        )
    if kind == "subalgebra":
        gens_raw = _need(obj, "generators", pointer)
        if not isinstance(gens_raw, list) or not gens_raw:
            raise SpecError(f"{pointer}/generators", "expected a nonempty array")
        gens = []
        for i, ref in enumerate(gens_raw):
            if isinstance(ref, bool) or not isinstance(ref, (int, str)):
                raise SpecError(
                    f"{pointer}/generators/{i}", "expected an exponent or basis label"
                )
            gens.append(ref)
        return SubalgebraSpec(
            parse_algebra_spec(_need(obj, "of", pointer), f"{pointer}/of"), tuple(gens)
        )
    if kind == "quotient":
        relators_raw = _need(obj, "relators", pointer)
        if not isinstance(relators_raw, list) or not relators_raw:
            raise SpecError(f"{pointer}/relators", "expected a nonempty array")
        relators = []
        for i, relator in enumerate(relators_raw):
            if not isinstance(relator, list) or not relator:
                raise SpecError(f"{pointer}/relators/{i}", "expected a nonempty array of terms")
            terms = []
            for j, term in enumerate(relator):
                term_ptr = f"{pointer}/relators/{i}/{j}"
                if not isinstance(term, list) or len(term) != 2:
                    raise SpecError(term_ptr, "expected [exponent-or-label, coefficient]")
                ref, coeff = term
                if isinstance(ref, bool) or not isinstance(ref, (int, str)):
                    raise SpecError(f"{term_ptr}/0", "expected an exponent or basis label")
                terms.append((ref, _as_int(coeff, f"{term_ptr}/1")))
            relators.append(tuple(terms))
        return QuotientSpec(
            parse_algebra_spec(_need(obj, "of", pointer), f"{pointer}/of"), tuple(relators)
        )
    raise SpecError(
        f"{pointer}/kind", f"unknown algebra kind {kind!r}; expected one of {ALGEBRA_KINDS}"
    )


def parse_any_spec(obj, pointer: str = ""):
    """Dispatch on the kind field; returns a semigroup or algebra spec."""
    kind = _need(_as_obj(obj, pointer), "kind", pointer)
    if kind in SEMIGROUP_KINDS:
        return parse_semigroup_spec(obj, pointer)
    if kind in ALGEBRA_KINDS:
        return parse_algebra_spec(obj, pointer)
    raise SpecError(
        f"{pointer}/kind",
        f"unknown kind {kind!r}; expected one of {SEMIGROUP_KINDS + ALGEBRA_KINDS}",
    )
