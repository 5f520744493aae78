"""Independent set-based oracle and random generators shared by the tests.

The oracle works on Python sets of indices and never calls into the bitset
implementation, so agreement between the two is a real check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import chain, combinations

from hypothesis import strategies as st

from pdbl.context import FormalContext, Semiconcept, make_left, make_right, members
from pdbl.kripke import BinaryRelation, KripkeContext
from pdbl.proofs import Derivation
from pdbl.syntax import BBox, Bot, Box, Hypersequent, Join, Meet, Neg, ObjVar, Opp, PropVar, Sequent, Top


# set-based oracle


@dataclass(frozen=True)
class SetCtx:
    G: frozenset
    M: frozenset
    I: frozenset  # pairs (g, m)
    R: frozenset = frozenset()
    S: frozenset = frozenset()

    def up(self, A):
        return frozenset(m for m in self.M if all((g, m) in self.I for g in A))

    def down(self, B):
        return frozenset(g for g in self.G if all((g, m) in self.I for m in B))


def set_ctx(kc) -> SetCtx:
    if isinstance(kc, FormalContext):
        kc = KripkeContext.plain(kc)
    ctx = kc.base
    G = frozenset(range(ctx.n_objects))
    M = frozenset(range(ctx.n_attributes))
    I = frozenset((g, m) for g in G for m in M if ctx.incidence[g][m])
    return SetCtx(G, M, I, frozenset(kc.obj_rel.pairs()), frozenset(kc.attr_rel.pairs()))


def lower_set(universe, rel, A):
    return frozenset(x for x in universe if all(y in A for (u, y) in rel if u == x))


def upper_set(universe, rel, A):
    return frozenset(x for x in universe if any(y in A for (u, y) in rel if u == x))


class SetAlgebra:
    """Semiconcept operations written directly from their set definitions."""

    def __init__(self, K: SetCtx):
        self.K = K

    def meet(self, x, y):
        A = x[0] & y[0]
        return (A, self.K.up(A))

    def join(self, x, y):
        B = x[1] & y[1]
        return (self.K.down(B), B)

    def neg(self, x):
        A = self.K.G - x[0]
        return (A, self.K.up(A))

    def opp(self, x):
        B = self.K.M - x[1]
        return (self.K.down(B), B)

    def top(self):
        return (self.K.G, frozenset())

    def bot(self):
        return (frozenset(), self.K.M)

    def box(self, x):
        A = lower_set(self.K.G, self.K.R, x[0])
        return (A, self.K.up(A))

    def bbox(self, x):
        B = lower_set(self.K.M, self.K.S, x[1])
        return (self.K.down(B), B)

    def evaluate(self, f, val):
        """val maps ObjVar/PropVar to (extent set, intent set)."""
        if isinstance(f, (ObjVar, PropVar)):
            return val[f]
        if isinstance(f, Top):
            return self.top()
        if isinstance(f, Bot):
            return self.bot()
        if isinstance(f, Meet):
            return self.meet(self.evaluate(f.l, val), self.evaluate(f.r, val))
        if isinstance(f, Join):
            return self.join(self.evaluate(f.l, val), self.evaluate(f.r, val))
        op = {Neg: self.neg, Opp: self.opp, Box: self.box, BBox: self.bbox}[type(f)]
        return op(self.evaluate(f.child, val))


def as_sets(x: Semiconcept):
    return (frozenset(members(x.extent)), frozenset(members(x.intent)))


def all_semiconcepts_oracle(K: SetCtx):
    """Every pair (A, B) with A = B' or B = A', by brute force over subsets."""

    def subsets(s):
        s = sorted(s)
        return [frozenset(c) for c in chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))]

    out = set()
    for A in subsets(K.G):
        out.add((A, K.up(A)))
    for B in subsets(K.M):
        out.add((K.down(B), B))
    return out


# seeded random generators


def random_context(rng: random.Random, max_g=5, max_m=5, min_g=1, min_m=1, density=None) -> FormalContext:
    ng, nm = rng.randint(min_g, max_g), rng.randint(min_m, max_m)
    p = rng.random() if density is None else density
    rows = [sum(1 << j for j in range(nm) if rng.random() < p) for _ in range(ng)]
    return FormalContext.from_masks(ng, nm, rows)


def random_relation(rng: random.Random, n: int, cls: str = "any") -> BinaryRelation:
    if cls == "equivalence":
        labels = [rng.randrange(n) for _ in range(n)]
        return BinaryRelation.from_pairs(n, [(i, j) for i in range(n) for j in range(n) if labels[i] == labels[j]])
    p = rng.random()
    pairs = {(i, j) for i in range(n) for j in range(n) if rng.random() < p}
    if cls in ("reflexive", "refl+trans"):
        pairs |= {(i, i) for i in range(n)}
    if cls == "refl+trans":
        changed = True
        while changed:
            new = {(i, k) for (i, j) in pairs for (j2, k) in pairs if j == j2}
            changed = not new <= pairs
            pairs |= new
    return BinaryRelation.from_pairs(n, pairs)


def random_kripke(rng: random.Random, cls: str = "any", max_g=4, max_m=4) -> KripkeContext:
    ctx = random_context(rng, max_g, max_m)
    return KripkeContext(ctx, random_relation(rng, ctx.n_objects, cls), random_relation(rng, ctx.n_attributes, cls))


def random_left(rng: random.Random, ctx: FormalContext) -> Semiconcept:
    return make_left(ctx, rng.getrandbits(ctx.n_objects) if ctx.n_objects else 0)


def random_right(rng: random.Random, ctx: FormalContext) -> Semiconcept:
    return make_right(ctx, rng.getrandbits(ctx.n_attributes) if ctx.n_attributes else 0)


def random_semiconcept(rng: random.Random, ctx: FormalContext) -> Semiconcept:
    return random_left(rng, ctx) if rng.random() < 0.5 else random_right(rng, ctx)


def random_valuation(rng: random.Random, ctx: FormalContext, n_obj=3, n_prop=3) -> dict:
    val = {ObjVar(i): random_left(rng, ctx) for i in range(1, n_obj + 1)}
    val.update({PropVar(i): random_right(rng, ctx) for i in range(1, n_prop + 1)})
    return val


def random_formula(rng: random.Random, depth: int, modal: bool = True, n_vars: int = 3):
    if depth == 0 or rng.random() < 0.25:
        k = rng.randrange(2 * n_vars + 2)
        if k < n_vars:
            return ObjVar(k + 1)
        if k < 2 * n_vars:
            return PropVar(k - n_vars + 1)
        return Top() if k == 2 * n_vars else Bot()
    ops = [Meet, Join, Neg, Opp] + ([Box, BBox] if modal else [])
    op = rng.choice(ops)
    if op in (Meet, Join):
        return op(random_formula(rng, depth - 1, modal, n_vars), random_formula(rng, depth - 1, modal, n_vars))
    return op(random_formula(rng, depth - 1, modal, n_vars))


# hypothesis strategies


@st.composite
def contexts(draw, max_g=4, max_m=4, min_g=1, min_m=1):
    ng = draw(st.integers(min_g, max_g))
    nm = draw(st.integers(min_m, max_m))
    rows = draw(st.lists(st.integers(0, (1 << nm) - 1), min_size=ng, max_size=ng))
    return FormalContext.from_masks(ng, nm, rows)


@st.composite
def semiconcepts_of(draw, ctx: FormalContext):
    if draw(st.booleans()):
        return make_left(ctx, draw(st.integers(0, (1 << ctx.n_objects) - 1)))
    return make_right(ctx, draw(st.integers(0, (1 << ctx.n_attributes) - 1)))


@st.composite
def relations(draw, n: int):
    code = draw(st.integers(0, (1 << (n * n)) - 1))
    return BinaryRelation.from_bits(n, code)


@st.composite
def kripke_contexts(draw, max_g=3, max_m=3):
    ctx = draw(contexts(max_g, max_m))
    return KripkeContext(ctx, draw(relations(ctx.n_objects)), draw(relations(ctx.n_attributes)))


def formulas(max_depth=4, modal=True, n_vars=3):
    leaves = st.one_of(
        st.integers(1, n_vars).map(ObjVar),
        st.integers(1, n_vars).map(PropVar),
        st.just(Top()),
        st.just(Bot()),
    )

    def extend(children):
        unary = [Neg, Opp] + ([Box, BBox] if modal else [])
        return st.one_of(
            st.tuples(st.sampled_from([Meet, Join]), children, children).map(lambda t: t[0](t[1], t[2])),
            st.tuples(st.sampled_from(unary), children).map(lambda t: t[0](t[1])),
        )

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth)




# single-line mutations of a derivation

_RULE_SWAP = {
    "R1": "R1'", "R1'": "R1", "R2": "R2'", "R2'": "R2", "R3": "R3'", "R3'": "R3",
    "R4": "R6", "R6": "R7", "R7": "R4", "R8": "R9", "R9": "R8",
    "EC": "EE", "EE": "EC", "EW": "Sp", "Sp": "EW", "R5": "R4",
}


def _flip(h: Hypersequent) -> Hypersequent:
    s = h.components[0]
    new = Sequent(s.rhs, s.lhs) if s.lhs != s.rhs else Sequent(s.lhs, Neg(s.rhs))
    return Hypersequent((new,) + h.components[1:])


def mutants(d: Derivation, axiom_ids) -> list[tuple[str, Derivation]]:
    """Every single-line mutation: flipped sequent, renamed justification,
    re-pointed premise, perturbed substitution, shifted ctx."""
    out = []
    lines = list(d.lines)
    by_n = {l.n: l for l in lines}
    axiom_ids = sorted(axiom_ids)

    def emit(tag, k, new_line):
        if new_line != lines[k]:
            out.append((f"line {lines[k].n}: {tag}", Derivation(tuple(lines[:k] + [new_line] + lines[k + 1:]), d.name)))

    for k, line in enumerate(lines):
        emit("flip", k, replace(line, hyper=_flip(line.hyper)))
        if line.kind == "axiom":
            other = next(a for a in axiom_ids if a != line.name)
            emit("rename", k, replace(line, name=other))
            if line.subst:
                (key, val), rest = line.subst[0], line.subst[1:]
                emit("subst", k, replace(line, subst=((key, Neg(val)),) + rest))
        elif line.kind == "rule":
            emit("rename", k, replace(line, name=_RULE_SWAP[line.name]))
            for pi, p in enumerate(line.premises):
                alt = next((l.n for l in lines[:k] if l.hyper != by_n[p].hyper), None)
                if alt is not None:
                    prem = line.premises[:pi] + (alt,) + line.premises[pi + 1:]
                    emit(f"repoint premise {pi + 1}", k, replace(line, premises=prem))
            if line.ctx:
                emit("ctx", k, replace(line, ctx=(line.ctx[0] + 1,) + line.ctx[1:]))
    return out
