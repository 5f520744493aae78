"""Kripke contexts, rough approximations and the modal operators on semiconcepts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .context import (
    ContractViolation,
    FormalContext,
    Kind,
    Semiconcept,
    bits,
    full_mask,
    is_concept,
    make_left,
    make_right,
    members,
    meet,
    join,
    prime_attributes,
    prime_objects,
)


@dataclass(frozen=True)
class BinaryRelation:
    """A relation on {0..n-1}; ``succ[i]`` is the bit-set of successors of i."""

    n: int
    succ: tuple[int, ...]

    def __post_init__(self):
        succ = tuple(self.succ)
        if len(succ) != self.n or any(s < 0 or s >> self.n for s in succ):
            raise ContractViolation("relation rows out of range for carrier")
        object.__setattr__(self, "succ", succ)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]):
        succ = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ContractViolation(f"pair ({i}, {j}) out of range for carrier {n}")
            succ[i] |= 1 << j
        return cls(n, tuple(succ))

    @classmethod
    def empty(cls, n: int):
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int):
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def full(cls, n: int):
        return cls(n, (full_mask(n),) * n)

    @classmethod
    def from_bits(cls, n: int, code: int):
        """Decode a relation from its row-major bit encoding (bit i*n+j is iEj)."""
        row = full_mask(n)
        return cls(n, tuple((code >> (i * n)) & row for i in range(n)))

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.succ[i])]

    def holds(self, i: int, j: int) -> bool:
        return bool(self.succ[i] >> j & 1)

    def classes(self) -> list[int]:
        """Distinct successor sets, i.e. the classes when this is an equivalence."""
        out = []
        for s in self.succ:
            if s not in out:
                out.append(s)
        return out


class RelationProperties(NamedTuple):
    reflexive: bool
    symmetric: bool
    transitive: bool

    @property
    def equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive


def relation_properties(rel: BinaryRelation) -> RelationProperties:
    n = rel.n
    reflexive = all(rel.succ[i] >> i & 1 for i in range(n))
    symmetric = all(rel.holds(j, i) for i, j in rel.pairs())
    transitive = all(rel.succ[j] & ~rel.succ[i] == 0 for i, j in rel.pairs())
    return RelationProperties(reflexive, symmetric, transitive)


@dataclass(frozen=True)
class ApproximationSpace:
    relation: BinaryRelation

    @property
    def size(self) -> int:
        return self.relation.n

    @property
    def is_equivalence(self) -> bool:
        return relation_properties(self.relation).equivalence


def _space(space) -> BinaryRelation:
    return space.relation if isinstance(space, ApproximationSpace) else space


def lower_approx(space, A: int) -> int:
    """{x : E(x) ⊆ A}"""
    rel = _space(space)
    if A < 0 or A >> rel.n:
        raise ContractViolation("set out of range for approximation space")
    return bits(i for i, s in enumerate(rel.succ) if s & ~A == 0)


def upper_approx(space, A: int) -> int:
    """{x : E(x) ∩ A ≠ ∅}"""
    rel = _space(space)
    if A < 0 or A >> rel.n:
        raise ContractViolation("set out of range for approximation space")
    return bits(i for i, s in enumerate(rel.succ) if s & A)


@dataclass(frozen=True)
class KripkeContext:
    base: FormalContext
    obj_rel: BinaryRelation
    attr_rel: BinaryRelation

    def __post_init__(self):
        if self.obj_rel.n != self.base.n_objects:
            raise ContractViolation("object relation carrier does not match |G|")
        if self.attr_rel.n != self.base.n_attributes:
            raise ContractViolation("attribute relation carrier does not match |M|")

    @classmethod
    def plain(cls, ctx: FormalContext):
        return cls(ctx, BinaryRelation.empty(ctx.n_objects), BinaryRelation.empty(ctx.n_attributes))

    @property
    def has_relations(self) -> bool:
        return any(self.obj_rel.succ) or any(self.attr_rel.succ)


def _check(kc: KripkeContext, x: Semiconcept):
    if x.ctx is not kc.base and x.ctx != kc.base:
        raise ContractViolation("semiconcept is not over this Kripke context")


def f_R(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _check(kc, x)
    return make_left(kc.base, lower_approx(kc.obj_rel, x.extent))


def f_S(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _check(kc, x)
    return make_right(kc.base, lower_approx(kc.attr_rel, x.intent))


def f_R_dual(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _check(kc, x)
    return make_left(kc.base, upper_approx(kc.obj_rel, x.extent))


def f_S_dual(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _check(kc, x)
    return make_right(kc.base, upper_approx(kc.attr_rel, x.intent))


def equal_rows_relation(masks: tuple[int, ...]) -> BinaryRelation:
    n = len(masks)
    return BinaryRelation(n, tuple(bits(j for j in range(n) if masks[j] == masks[i]) for i in range(n)))


def induced_sd(ctx: FormalContext) -> KripkeContext:
    """Objects related when their rows agree, attributes when their columns agree."""
    return KripkeContext(ctx, equal_rows_relation(ctx.rows), equal_rows_relation(ctx.cols))


def _require_equivalences(kc: KripkeContext):
    if not (relation_properties(kc.obj_rel).equivalence and relation_properties(kc.attr_rel).equivalence):
        raise ContractViolation("definability needs equivalence relations on both sorts")


def is_category(rel: BinaryRelation, A: int) -> bool:
    """A is a union of classes of the equivalence ``rel``."""
    return lower_approx(rel, A) == A


def is_definable(kc: KripkeContext, x: Semiconcept) -> bool:
    _require_equivalences(kc)
    _check(kc, x)
    return is_category(kc.obj_rel, x.extent) and is_category(kc.attr_rel, x.intent)


def approx_lower(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _require_equivalences(kc)
    _check(kc, x)
    if is_concept(x):
        return x
    if x.kind is Kind.LEFT:
        return make_left(kc.base, lower_approx(kc.obj_rel, x.extent))
    # right semiconcepts: the lower approximation takes the upper approximation of the intent
    return make_right(kc.base, upper_approx(kc.attr_rel, x.intent))


def approx_upper(kc: KripkeContext, x: Semiconcept) -> Semiconcept:
    _require_equivalences(kc)
    _check(kc, x)
    if is_concept(x):
        return x
    if x.kind is Kind.LEFT:
        return make_left(kc.base, upper_approx(kc.obj_rel, x.extent))
    return make_right(kc.base, lower_approx(kc.attr_rel, x.intent))


class ConceptApprox(NamedTuple):
    lower: Semiconcept
    upper: Semiconcept


def _closed_left(ctx: FormalContext, A: int) -> Semiconcept:
    # ((A)'', (A)')
    return make_right(ctx, prime_objects(ctx, A))


def _closed_right(ctx: FormalContext, B: int) -> Semiconcept:
    # ((B)', (B)'')
    return make_left(ctx, prime_attributes(ctx, B))


def concept_approx_objects(ctx: FormalContext, A: int) -> ConceptApprox:
    """Concept approximations of an object set under the row-equality relation."""
    if prime_attributes(ctx, prime_objects(ctx, A)) == A:
        c = make_left(ctx, A)
        return ConceptApprox(c, c)
    e1 = equal_rows_relation(ctx.rows)
    return ConceptApprox(
        _closed_left(ctx, lower_approx(e1, A)), _closed_left(ctx, upper_approx(e1, A))
    )


def concept_approx_attributes(ctx: FormalContext, B: int) -> ConceptApprox:
    """Concept approximations of an attribute set under the column-equality relation.

    A larger intent gives a smaller concept, so the lower approximation is
    generated by the upper approximation of B and vice versa.
    """
    if prime_objects(ctx, prime_attributes(ctx, B)) == B:
        c = make_right(ctx, B)
        return ConceptApprox(c, c)
    e2 = equal_rows_relation(ctx.cols)
    return ConceptApprox(
        _closed_right(ctx, upper_approx(e2, B)), _closed_right(ctx, lower_approx(e2, B))
    )


def concept_approx_pair(ctx: FormalContext, A: int, B: int) -> ConceptApprox:
    """Approximations of a pair (A, B): meet of the lower and join of the upper
    concept approximations of its components. A concept is returned unchanged."""
    if prime_objects(ctx, A) == B and prime_attributes(ctx, B) == A:
        c = make_left(ctx, A)
        return ConceptApprox(c, c)
    a = concept_approx_objects(ctx, A)
    b = concept_approx_attributes(ctx, B)
    return ConceptApprox(meet(a.lower, b.lower), join(a.upper, b.upper))


def concept_approx(ctx: FormalContext, objects: int | None = None,
                          attributes: int | None = None) -> ConceptApprox:
    if objects is None and attributes is None:
        raise ContractViolation("give an object set, an attribute set, or both")
    if attributes is None:
        return concept_approx_objects(ctx, objects)
    if objects is None:
        return concept_approx_attributes(ctx, attributes)
    return concept_approx_pair(ctx, objects, attributes)
