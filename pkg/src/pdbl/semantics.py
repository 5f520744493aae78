"""Models, satisfaction, algebraic evaluation and bounded validity search."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Union

from .context import (
    BoundExceeded,
    ContractViolation,
    FormalContext,
    Kind,
    Semiconcept,
    bottom,
    join,
    left_semiconcepts,
    leq_componentwise,
    make_left,
    make_right,
    meet,
    members,
    negation,
    opposition,
    right_semiconcepts,
    top,
)
from .kripke import BinaryRelation, KripkeContext, f_R, f_S, relation_properties
from .syntax import (
    BBox,
    Bot,
    Box,
    Formula,
    Hypersequent,
    Join,
    Meet,
    Neg,
    ObjVar,
    Opp,
    PropVar,
    Sequent,
    Top,
    hyper_free_vars,
    subformulas,
    render_formula,
)

Var = Union[ObjVar, PropVar]

DEFAULT_MAX_VALUATIONS = 1_000_000
DEFAULT_MAX_MODELS = 1_000_000


class UnboundVariable(ContractViolation):
    pass


def _var_name(v: Var) -> str:
    return render_formula(v)


@dataclass(frozen=True)
class Model:
    """A Kripke context with a sort-respecting valuation.

    Object variables must denote ⊓-idempotent semiconcepts and property
    variables ⊔-idempotent ones. A plain context is wrapped with empty relations.
    """

    kc: KripkeContext
    valuation: Mapping[Var, Semiconcept] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.kc, FormalContext):
            object.__setattr__(self, "kc", KripkeContext.plain(self.kc))
        val = dict(self.valuation)
        for var, x in val.items():
            if x.ctx != self.kc.base:
                raise ContractViolation(f"{_var_name(var)} is not over the model's context")
            if isinstance(var, ObjVar) and x.kind is Kind.RIGHT:
                raise ContractViolation(f"{_var_name(var)} must be ⊓-idempotent")
            if isinstance(var, PropVar) and x.kind is Kind.LEFT:
                raise ContractViolation(f"{_var_name(var)} must be ⊔-idempotent")
        object.__setattr__(self, "valuation", val)

    @property
    def ctx(self) -> FormalContext:
        return self.kc.base

    def lookup(self, var: Var) -> Semiconcept:
        try:
            return self.valuation[var]
        except KeyError:
            raise UnboundVariable(f"variable {_var_name(var)} is unbound") from None


# algebraic evaluation


def evaluate(model: Model, f: Formula) -> Semiconcept:
    ctx, kc = model.ctx, model.kc
    cache: dict = {}

    def ev(g):
        hit = cache.get(g)
        if hit is not None:
            return hit
        if isinstance(g, (ObjVar, PropVar)):
            out = model.lookup(g)
        elif isinstance(g, Top):
            out = top(ctx)
        elif isinstance(g, Bot):
            out = bottom(ctx)
        elif isinstance(g, Meet):
            out = meet(ev(g.l), ev(g.r))
        elif isinstance(g, Join):
            out = join(ev(g.l), ev(g.r))
        elif isinstance(g, Neg):
            out = negation(ev(g.child))
        elif isinstance(g, Opp):
            out = opposition(ev(g.child))
        elif isinstance(g, Box):
            out = f_R(kc, ev(g.child))
        elif isinstance(g, BBox):
            out = f_S(kc, ev(g.child))
        else:
            raise ContractViolation(f"cannot evaluate {g!r}")
        cache[g] = out
        return out

    return ev(f)


# clause-by-clause satisfaction, kept independent of evaluate


class Satisfaction:
    """Object satisfaction ⊨ and attribute co-satisfaction ≻, clause by clause."""

    def __init__(self, model: Model):
        self.model = model
        ctx = model.ctx
        self.G = range(ctx.n_objects)
        self.M = range(ctx.n_attributes)
        self.inc = ctx.incidence
        self.R = model.kc.obj_rel
        self.S = model.kc.attr_rel
        self._sat: dict = {}
        self._cosat: dict = {}

    def sat(self, g: int, f: Formula) -> bool:
        key = (g, f)
        if key not in self._sat:
            self._sat[key] = self._sat_clause(g, f)
        return self._sat[key]

    def cosat(self, m: int, f: Formula) -> bool:
        key = (m, f)
        if key not in self._cosat:
            self._cosat[key] = self._cosat_clause(m, f)
        return self._cosat[key]

    def _sat_clause(self, g, f) -> bool:
        inc = self.inc
        if isinstance(f, (ObjVar, PropVar)):
            return bool(self.model.lookup(f).extent >> g & 1)
        if isinstance(f, Top):
            return True
        if isinstance(f, Bot):
            return False
        if isinstance(f, Meet):
            return self.sat(g, f.l) and self.sat(g, f.r)
        if isinstance(f, Neg):
            return not self.sat(g, f.child)
        if isinstance(f, Join):
            return all(inc[g][m] for m in self.M if self.cosat(m, f))
        if isinstance(f, Opp):
            return all(inc[g][m] for m in self.M if not self.cosat(m, f.child))
        if isinstance(f, Box):
            return all(self.sat(g1, f.child) for g1 in self.G if self.R.holds(g, g1))
        if isinstance(f, BBox):
            return all(inc[g][m] for m in self.M if self._all_s_cosat(m, f.child))
        raise ContractViolation(f"cannot interpret {f!r}")

    def _cosat_clause(self, m, f) -> bool:
        inc = self.inc
        if isinstance(f, (ObjVar, PropVar)):
            return bool(self.model.lookup(f).intent >> m & 1)
        if isinstance(f, Top):
            return False
        if isinstance(f, Bot):
            return True
        if isinstance(f, Join):
            return self.cosat(m, f.l) and self.cosat(m, f.r)
        if isinstance(f, Opp):
            return not self.cosat(m, f.child)
        if isinstance(f, Meet):
            return all(inc[g][m] for g in self.G if self.sat(g, f))
        if isinstance(f, Neg):
            return all(inc[g][m] for g in self.G if not self.sat(g, f.child))
        if isinstance(f, Box):
            return all(inc[g][m] for g in self.G if self._all_r_sat(g, f.child))
        if isinstance(f, BBox):
            return self._all_s_cosat(m, f.child)
        raise ContractViolation(f"cannot interpret {f!r}")

    def _all_r_sat(self, g, f) -> bool:
        return all(self.sat(g1, f) for g1 in self.G if self.R.holds(g, g1))

    def _all_s_cosat(self, m, f) -> bool:
        return all(self.cosat(m1, f) for m1 in self.M if self.S.holds(m, m1))

    def sat_set(self, f: Formula) -> int:
        return sum(1 << g for g in self.G if self.sat(g, f))

    def cosat_set(self, f: Formula) -> int:
        return sum(1 << m for m in self.M if self.cosat(m, f))

    def sequent(self, s: Sequent) -> bool:
        return all(self.sat(g, s.rhs) for g in self.G if self.sat(g, s.lhs)) and all(
            self.cosat(m, s.lhs) for m in self.M if self.cosat(m, s.rhs)
        )


def sat(model: Model, g: int, f: Formula) -> bool:
    return Satisfaction(model).sat(g, f)


def cosat(model: Model, m: int, f: Formula) -> bool:
    return Satisfaction(model).cosat(m, f)


def sequent_satisfied(model: Model, s: Sequent) -> bool:
    """Every object satisfying lhs satisfies rhs and every attribute
    co-satisfying rhs co-satisfies lhs."""
    return Satisfaction(model).sequent(s)


def hypersequent_satisfied(model: Model, h) -> bool:
    comps = h.components if isinstance(h, Hypersequent) else [h]
    checker = Satisfaction(model)
    return any(checker.sequent(s) for s in comps)


def sequent_holds(model: Model, s: Sequent) -> bool:
    """Algebraic form of sequent satisfaction: v(lhs) ⊑ v(rhs)."""
    return leq_componentwise(evaluate(model, s.lhs), evaluate(model, s.rhs))


def _components(h) -> tuple[Sequent, ...]:
    return h.components if isinstance(h, Hypersequent) else (h,)


# exhaustive valuation search


def valuation_count(ctx: FormalContext, h) -> int:
    objs, props = hyper_free_vars(h)
    return (1 << ctx.n_objects) ** len(objs) * (1 << ctx.n_attributes) ** len(props)


def iter_valuations(ctx: FormalContext, h) -> Iterator[dict]:
    """Sort-respecting valuations of the variables occurring in ``h``, in a fixed order."""
    objs, props = hyper_free_vars(h)
    keys = [ObjVar(i) for i in sorted(objs)] + [PropVar(i) for i in sorted(props)]
    ranges = [left_semiconcepts(ctx, bound=64)] * len(objs) + [right_semiconcepts(ctx, bound=64)] * len(props)
    for combo in itertools.product(*ranges):
        yield dict(zip(keys, combo))


@dataclass
class Failure:
    valuation: dict
    witnesses: list  # one entry per component


def _witness(model: Model, s: Sequent) -> dict:
    lhs, rhs = evaluate(model, s.lhs), evaluate(model, s.rhs)
    ctx = model.ctx
    bad_g = members(lhs.extent & ~rhs.extent)
    if bad_g:
        return {"object": ctx.object_names[bad_g[0]]}
    bad_m = members(rhs.intent & ~lhs.intent)
    return {"attribute": ctx.attribute_names[bad_m[0]]} if bad_m else {}


def find_failure(kc: KripkeContext, h, max_valuations: int = DEFAULT_MAX_VALUATIONS):
    """First valuation falsifying ``h`` on ``kc`` and the number of valuations tried."""
    n = valuation_count(kc.base, h)
    if n > max_valuations:
        raise BoundExceeded(f"{n} valuations exceed the cap of {max_valuations}")
    comps = _components(h)
    tried = 0
    for val in iter_valuations(kc.base, h):
        tried += 1
        model = Model(kc, val)
        if not any(sequent_holds(model, s) for s in comps):
            return Failure(val, [_witness(model, s) for s in comps]), tried
    return None, tried


def true_in(kc, h, max_valuations: int = DEFAULT_MAX_VALUATIONS) -> bool:
    if isinstance(kc, FormalContext):
        kc = KripkeContext.plain(kc)
    failure, _ = find_failure(kc, h, max_valuations)
    return failure is None


# bounded validity search

RELATION_CLASSES = ("any", "reflexive", "refl+trans", "equivalence")


@dataclass(frozen=True)
class SearchBounds:
    max_objects: int = 2
    max_attributes: int = 2
    relation_class: str = "any"
    max_models: int = DEFAULT_MAX_MODELS
    max_valuations: int = DEFAULT_MAX_VALUATIONS
    min_objects: int = 1
    min_attributes: int = 1

    def __post_init__(self):
        if self.relation_class not in RELATION_CLASSES:
            raise ContractViolation(f"unknown relation class {self.relation_class!r}")
        if min(self.max_objects, self.max_attributes, self.max_models, self.max_valuations) < 1:
            raise ContractViolation("bounds must be at least 1")
        if not (0 <= self.min_objects <= self.max_objects and 0 <= self.min_attributes <= self.max_attributes):
            raise ContractViolation("minimum sizes must lie within the bounds")


def _in_class(rel: BinaryRelation, cls: str) -> bool:
    if cls == "any":
        return True
    p = relation_properties(rel)
    if cls == "reflexive":
        return p.reflexive
    if cls == "refl+trans":
        return p.reflexive and p.transitive
    return p.equivalence


def _code(rel: BinaryRelation) -> int:
    return sum(s << (i * rel.n) for i, s in enumerate(rel.succ))


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


@lru_cache(maxsize=None)
def relations_in_class(n: int, cls: str) -> tuple[BinaryRelation, ...]:
    """All relations on n points in the class, ordered by their row-major bit code."""
    if cls == "equivalence":
        rels = []
        for part in _set_partitions(list(range(n))):
            pairs = [(i, j) for block in part for i in block for j in block]
            rels.append(BinaryRelation.from_pairs(n, pairs))
        return tuple(sorted(rels, key=_code))
    if n * n > 20:
        raise BoundExceeded(f"enumerating {cls} relations on {n} points is too large")
    diag = sum(1 << (i * n + i) for i in range(n))
    out = []
    for code in range(1 << (n * n)):
        if cls != "any" and code & diag != diag:
            continue
        rel = BinaryRelation.from_bits(n, code)
        if _in_class(rel, cls):
            out.append(rel)
    return tuple(out)


@dataclass
class Countermodel:
    kc: KripkeContext
    valuation: dict
    witnesses: list

    def to_json(self) -> dict:
        from .formats import dump_cxt

        ctx = self.kc.base
        return {
            "cxt": dump_cxt(ctx),
            "relations": {"R": [list(p) for p in self.kc.obj_rel.pairs()],
                          "S": [list(p) for p in self.kc.attr_rel.pairs()]},
            "valuation": {
                _var_name(v): {"extent": members(x.extent), "intent": members(x.intent)}
                for v, x in sorted(self.valuation.items(), key=lambda kv: (isinstance(kv[0], PropVar), kv[0].i))
            },
            "failing_component": list(range(len(self.witnesses))),
            "witness": self.witnesses,
        }


@dataclass
class Verdict:
    verdict: str  # "valid_up_to_bounds" or "countermodel"
    contexts_checked: int
    valuations_checked: int
    countermodel: Countermodel | None = None

    @property
    def valid(self) -> bool:
        return self.verdict == "valid_up_to_bounds"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "contexts_checked": self.contexts_checked,
            "valuations_checked": self.valuations_checked,
            "countermodel": self.countermodel.to_json() if self.countermodel else None,
        }


def _relations_for(n: int, cls: str, needed: bool) -> tuple[BinaryRelation, ...]:
    rels = relations_in_class(n, cls)
    # a relation the formula never inspects contributes one representative only
    return rels if needed else rels[:1]


def iter_kripke_contexts(bounds: SearchBounds, need_r: bool = True, need_s: bool = True):
    """Contexts by |G|, |M|, incidence code, then R code, then S code."""
    for ng in range(bounds.min_objects, bounds.max_objects + 1):
        for nm in range(bounds.min_attributes, bounds.max_attributes + 1):
            rs = _relations_for(ng, bounds.relation_class, need_r)
            ss = _relations_for(nm, bounds.relation_class, need_s)
            row = (1 << nm) - 1
            for code in range(1 << (ng * nm)):
                ctx = FormalContext.from_masks(ng, nm, [(code >> (i * nm)) & row for i in range(ng)])
                for R in rs:
                    for S in ss:
                        yield KripkeContext(ctx, R, S)


def count_kripke_contexts(bounds: SearchBounds, need_r: bool = True, need_s: bool = True) -> int:
    total = 0
    for ng in range(bounds.min_objects, bounds.max_objects + 1):
        for nm in range(bounds.min_attributes, bounds.max_attributes + 1):
            total += (1 << (ng * nm)) * len(_relations_for(ng, bounds.relation_class, need_r)) * len(
                _relations_for(nm, bounds.relation_class, need_s)
            )
    return total


def validity_search(h, bounds: SearchBounds = SearchBounds()) -> Verdict:
    comps = _components(h)
    need_r = any(_uses(s, Box) for s in comps)
    need_s = any(_uses(s, BBox) for s in comps)
    total = count_kripke_contexts(bounds, need_r, need_s)
    if total > bounds.max_models:
        raise BoundExceeded(f"{total} Kripke contexts exceed the cap of {bounds.max_models}")
    contexts = valuations = 0
    for kc in iter_kripke_contexts(bounds, need_r, need_s):
        contexts += 1
        failure, tried = find_failure(kc, h, bounds.max_valuations)
        valuations += tried
        if failure is not None:
            return Verdict("countermodel", contexts, valuations,
                           Countermodel(kc, failure.valuation, failure.witnesses))
    return Verdict("valid_up_to_bounds", contexts, valuations)


def _uses(s: Sequent, node) -> bool:
    return any(isinstance(g, node) for f in (s.lhs, s.rhs) for g in subformulas(f))


# named models and context classes


def object_semiconcept(ctx: FormalContext, g: int) -> Semiconcept:
    """({g}, {g}')"""
    return make_left(ctx, 1 << g)


def attribute_semiconcept(ctx: FormalContext, m: int) -> Semiconcept:
    """({m}', {m})"""
    return make_right(ctx, 1 << m)


def is_named_model(model: Model, window) -> bool:
    """Check the named-model conditions on variables o1..oN and a1..aK.

    ``window`` is N (used for both sorts) or a pair (N, K).
    """
    n_obj, n_prop = (window, window) if isinstance(window, int) else window
    ctx = model.ctx
    objs = {object_semiconcept(ctx, g) for g in range(ctx.n_objects)}
    atts = {attribute_semiconcept(ctx, m) for m in range(ctx.n_attributes)}
    hit_o, hit_a = set(), set()
    for i in range(1, n_obj + 1):
        x = model.valuation.get(ObjVar(i))
        if x is None or x not in objs:
            return False
        hit_o.add(x)
    for i in range(1, n_prop + 1):
        x = model.valuation.get(PropVar(i))
        if x is None or x not in atts:
            return False
        hit_a.add(x)
    return hit_o == objs and hit_a == atts


def named_valuation(ctx: FormalContext, obj_map: list[int], attr_map: list[int]) -> dict:
    """Valuation sending o(i+1) to the object semiconcept of obj_map[i], and so on."""
    val = {ObjVar(i + 1): object_semiconcept(ctx, g) for i, g in enumerate(obj_map)}
    val.update({PropVar(i + 1): attribute_semiconcept(ctx, m) for i, m in enumerate(attr_map)})
    return val


def is_clarified(ctx: FormalContext) -> bool:
    return len(set(ctx.rows)) == len(ctx.rows) and len(set(ctx.cols)) == len(ctx.cols)


def concept_formula_check(model: Model, f: Formula) -> bool:
    """The bi-sequents f*f -||- f+f, f*f -||- f and f -||- f+f all hold."""
    ff_meet, ff_join = Meet(f, f), Join(f, f)
    pairs = [(ff_meet, ff_join), (ff_meet, f), (f, ff_join)]
    return all(
        sequent_satisfied(model, Sequent(a, b)) and sequent_satisfied(model, Sequent(b, a))
        for a, b in pairs
    )
