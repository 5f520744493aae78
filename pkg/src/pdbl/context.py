"""Formal contexts, derivation operators and the semiconcept algebra.

Object and attribute sets are plain Python ints used as bit-sets: bit ``i``
is set when the object (or attribute) at position ``i`` is a member.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

DEFAULT_ENUM_BOUND = 12
CONCEPT_ENUM_BOUND = 20


class ContractViolation(ValueError):
    """Raised when an operation receives arguments outside its contract."""


class BoundExceeded(ValueError):
    """Raised when an enumeration would exceed a configured size bound."""


def bits(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class FormalContext:
    """A finite formal context (G, M, I).

    ``rows[g]`` is the attribute mask of object ``g`` and ``cols[m]`` the
    object mask of attribute ``m``; both are derived from ``incidence``.
    """

    object_names: tuple[str, ...]
    attribute_names: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]
    rows: tuple[int, ...] = field(init=False, repr=False, compare=False)
    cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        objs = tuple(self.object_names)
        atts = tuple(self.attribute_names)
        inc = tuple(tuple(bool(c) for c in row) for row in self.incidence)
        if len(set(objs)) != len(objs):
            raise ContractViolation("object names must be unique")
        if len(set(atts)) != len(atts):
            raise ContractViolation("attribute names must be unique")
        if len(inc) != len(objs) or any(len(r) != len(atts) for r in inc):
            raise ContractViolation("incidence dimensions do not match labels")
        object.__setattr__(self, "object_names", objs)
        object.__setattr__(self, "attribute_names", atts)
        object.__setattr__(self, "incidence", inc)
        rows = tuple(bits(j for j, c in enumerate(r) if c) for r in inc)
        cols = tuple(
            bits(i for i in range(len(objs)) if inc[i][j]) for j in range(len(atts))
        )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def from_rows(cls, object_names, attribute_names, rows: Sequence[Iterable[str]]):
        """Build a context from per-object collections of attribute names."""
        index = {a: j for j, a in enumerate(attribute_names)}
        inc = []
        for r in rows:
            row = [False] * len(attribute_names)
            for a in r:
                row[index[a]] = True
            inc.append(row)
        return cls(tuple(object_names), tuple(attribute_names), tuple(map(tuple, inc)))

    @classmethod
    def from_masks(cls, n_objects: int, n_attributes: int, rows: Sequence[int]):
        """Build an anonymous context (objects g0.., attributes m0..) from row masks."""
        inc = tuple(
            tuple(bool(rows[i] >> j & 1) for j in range(n_attributes))
            for i in range(n_objects)
        )
        return cls(
            tuple(f"g{i}" for i in range(n_objects)),
            tuple(f"m{j}" for j in range(n_attributes)),
            inc,
        )

    @property
    def n_objects(self) -> int:
        return len(self.object_names)

    @property
    def n_attributes(self) -> int:
        return len(self.attribute_names)

    @property
    def all_objects(self) -> int:
        return full_mask(self.n_objects)

    @property
    def all_attributes(self) -> int:
        return full_mask(self.n_attributes)

    def objects(self, names: Iterable[str]) -> int:
        index = {n: i for i, n in enumerate(self.object_names)}
        try:
            return bits(index[n] for n in names)
        except KeyError as e:
            raise ContractViolation(f"unknown object {e.args[0]!r}") from None

    def attributes(self, names: Iterable[str]) -> int:
        index = {n: i for i, n in enumerate(self.attribute_names)}
        try:
            return bits(index[n] for n in names)
        except KeyError as e:
            raise ContractViolation(f"unknown attribute {e.args[0]!r}") from None

    def object_labels(self, mask: int) -> list[str]:
        return [self.object_names[i] for i in members(mask)]

    def attribute_labels(self, mask: int) -> list[str]:
        return [self.attribute_names[j] for j in members(mask)]


def _check_objects(ctx: FormalContext, A: int):
    if A < 0 or A >> ctx.n_objects:
        raise ContractViolation("object set out of range for context")


def _check_attributes(ctx: FormalContext, B: int):
    if B < 0 or B >> ctx.n_attributes:
        raise ContractViolation("attribute set out of range for context")


def prime_objects(ctx: FormalContext, A: int) -> int:
    """Attributes shared by every object in ``A``."""
    _check_objects(ctx, A)
    out = ctx.all_attributes
    for i in members(A):
        out &= ctx.rows[i]
    return out


def prime_attributes(ctx: FormalContext, B: int) -> int:
    """Objects having every attribute in ``B``."""
    _check_attributes(ctx, B)
    out = ctx.all_objects
    for j in members(B):
        out &= ctx.cols[j]
    return out


class Kind(Enum):
    LEFT = "Left"
    RIGHT = "Right"
    BOTH = "Both"


@dataclass(frozen=True)
class Semiconcept:
    """A pair (extent, intent) with extent' = intent or intent' = extent.

    Build these with ``make_left``/``make_right`` or the algebra operations.
    """

    ctx: FormalContext = field(repr=False)
    extent: int
    intent: int
    kind: Kind = field(compare=False)

    @property
    def extent_labels(self) -> list[str]:
        return self.ctx.object_labels(self.extent)

    @property
    def intent_labels(self) -> list[str]:
        return self.ctx.attribute_labels(self.intent)

    def __str__(self):
        ext = ", ".join(self.extent_labels)
        itt = ", ".join(self.intent_labels)
        return f"({{{ext}}}, {{{itt}}})"


def make_left(ctx: FormalContext, A: int) -> Semiconcept:
    B = prime_objects(ctx, A)
    kind = Kind.BOTH if prime_attributes(ctx, B) == A else Kind.LEFT
    return Semiconcept(ctx, A, B, kind)


def make_right(ctx: FormalContext, B: int) -> Semiconcept:
    A = prime_attributes(ctx, B)
    kind = Kind.BOTH if prime_objects(ctx, A) == B else Kind.RIGHT
    return Semiconcept(ctx, A, B, kind)


def _same(x: Semiconcept, y: Semiconcept) -> FormalContext:
    if x.ctx is not y.ctx and x.ctx != y.ctx:
        raise ContractViolation("semiconcepts belong to different contexts")
    return x.ctx


def meet(x: Semiconcept, y: Semiconcept) -> Semiconcept:
    return make_left(_same(x, y), x.extent & y.extent)


def join(x: Semiconcept, y: Semiconcept) -> Semiconcept:
    return make_right(_same(x, y), x.intent & y.intent)


def negation(x: Semiconcept) -> Semiconcept:
    return make_left(x.ctx, x.ctx.all_objects & ~x.extent)


def opposition(x: Semiconcept) -> Semiconcept:
    return make_right(x.ctx, x.ctx.all_attributes & ~x.intent)


def top(ctx: FormalContext) -> Semiconcept:
    return _pair(ctx, ctx.all_objects, 0)


def bottom(ctx: FormalContext) -> Semiconcept:
    return _pair(ctx, 0, ctx.all_attributes)


def _pair(ctx: FormalContext, A: int, B: int) -> Semiconcept:
    left = prime_objects(ctx, A) == B
    right = prime_attributes(ctx, B) == A
    if left and right:
        kind = Kind.BOTH
    elif left:
        kind = Kind.LEFT
    elif right:
        kind = Kind.RIGHT
    else:
        raise ContractViolation("pair is not a semiconcept")
    return Semiconcept(ctx, A, B, kind)


def semiconcept(ctx: FormalContext, A: int, B: int) -> Semiconcept:
    """Validate an explicit (A, B) pair; raises if it is not a semiconcept."""
    _check_objects(ctx, A)
    _check_attributes(ctx, B)
    return _pair(ctx, A, B)


def vee(x: Semiconcept, y: Semiconcept) -> Semiconcept:
    return negation(meet(negation(x), negation(y)))


def wedge(x: Semiconcept, y: Semiconcept) -> Semiconcept:
    return opposition(join(opposition(x), opposition(y)))


def leq(x: Semiconcept, y: Semiconcept) -> bool:
    """The order x ⊑ y, tested by its algebraic definition."""
    return meet(x, y) == meet(x, x) and join(x, y) == join(y, y)


def leq_componentwise(x: Semiconcept, y: Semiconcept) -> bool:
    _same(x, y)
    return x.extent & ~y.extent == 0 and y.intent & ~x.intent == 0


def is_concept(x: Semiconcept) -> bool:
    return x.kind is Kind.BOTH


def _check_bound(ctx: FormalContext, bound: int):
    if ctx.n_objects > bound or ctx.n_attributes > bound:
        raise BoundExceeded(
            f"context is {ctx.n_objects}x{ctx.n_attributes}; enumeration bound is {bound}"
        )


def left_semiconcepts(ctx: FormalContext, bound: int = DEFAULT_ENUM_BOUND) -> list[Semiconcept]:
    """All (A, A') sorted by extent bits, deduplicated."""
    _check_bound(ctx, bound)
    return [make_left(ctx, A) for A in range(1 << ctx.n_objects)]


def right_semiconcepts(ctx: FormalContext, bound: int = DEFAULT_ENUM_BOUND) -> list[Semiconcept]:
    """All (B', B) sorted by intent bits."""
    _check_bound(ctx, bound)
    return [make_right(ctx, B) for B in range(1 << ctx.n_attributes)]


def enumerate_semiconcepts(ctx: FormalContext, bound: int = DEFAULT_ENUM_BOUND) -> set[Semiconcept]:
    return set(left_semiconcepts(ctx, bound)) | set(right_semiconcepts(ctx, bound))


def concepts(ctx: FormalContext, bound: int = CONCEPT_ENUM_BOUND) -> list[Semiconcept]:
    """Concepts by naive closure over the smaller carrier, sorted by extent bits."""
    small = min(ctx.n_objects, ctx.n_attributes)
    if small > bound:
        raise BoundExceeded(f"context is {ctx.n_objects}x{ctx.n_attributes}; concept enumeration bound is {bound}")
    seen = {}
    if ctx.n_objects <= ctx.n_attributes:
        for A in range(1 << ctx.n_objects):
            c = make_left(ctx, prime_attributes(ctx, prime_objects(ctx, A)))
            seen[c.extent] = c
    else:
        for B in range(1 << ctx.n_attributes):
            c = make_right(ctx, prime_objects(ctx, prime_attributes(ctx, B)))
            seen[c.extent] = c
    return [seen[k] for k in sorted(seen)]


def iter_semiconcepts(ctx: FormalContext, bound: int = DEFAULT_ENUM_BOUND) -> Iterator[Semiconcept]:
    """Deterministic iteration: left ones by extent, then right non-concepts by intent."""
    yield from left_semiconcepts(ctx, bound)
    for x in right_semiconcepts(ctx, bound):
        if x.kind is Kind.RIGHT:
            yield x
