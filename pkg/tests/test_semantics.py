import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import SetAlgebra, as_sets, formulas, kripke_contexts, set_ctx, upper_set
from pdbl.cli import parse_valuation
from pdbl.context import (
    BoundExceeded,
    ContractViolation,
    FormalContext,
    concepts,
    is_concept,
    leq,
    make_left,
    make_right,
    members,
)
from pdbl.fixtures import data_dir
from pdbl.formats import load_context
from pdbl.kripke import induced_sd
from pdbl.semantics import (
    Model,
    SearchBounds,
    UnboundVariable,
    concept_formula_check,
    cosat,
    evaluate,
    hypersequent_satisfied,
    is_clarified,
    is_named_model,
    iter_valuations,
    named_valuation,
    relations_in_class,
    sat,
    sequent_holds,
    sequent_satisfied,
    true_in,
    valuation_count,
    validity_search,
)
from pdbl.syntax import ObjVar, PropVar, Sequent, bdia, dia, parse_formula, parse_hypersequent, parse_sequent

o1, a1 = ObjVar(1), PropVar(1)


@pytest.fixture(scope="module")
def fish():
    return load_context(data_dir() / "table2.cxt").base


@pytest.fixture(scope="module")
def fish_model(fish):
    kc = induced_sd(fish)
    return Model(kc, {o1: make_left(fish, fish.objects(["Leech", "Bream", "Dog"]))})


@pytest.fixture(scope="module")
def zink_model():
    ctx = load_context(data_dir() / "zink.cxt").base
    val = parse_valuation((data_dir() / "zink.val").read_text(encoding="utf-8"), ctx)
    return Model(ctx, val)


@st.composite
def models(draw, max_g=3, max_m=3):
    kc = draw(kripke_contexts(max_g, max_m))
    ctx = kc.base
    val = {}
    for i in (1, 2):
        val[ObjVar(i)] = make_left(ctx, draw(st.integers(0, ctx.all_objects)))
        val[PropVar(i)] = make_right(ctx, draw(st.integers(0, ctx.all_attributes)))
    return Model(kc, val)


# evaluation


def test_constants(fish):
    m = Model(fish)
    top = evaluate(m, parse_formula("top"))
    assert top.extent == fish.all_objects and top.intent == 0
    for g in range(fish.n_objects):
        assert sat(m, g, parse_formula("top")) and not sat(m, g, parse_formula("bot"))
    for j in range(fish.n_attributes):
        assert not cosat(m, j, parse_formula("top")) and cosat(m, j, parse_formula("bot"))


def test_box_and_dia_on_fish(fish, fish_model):
    box = evaluate(fish_model, parse_formula("box o1"))
    assert (box.extent_labels, box.intent_labels) == (["Leech", "Bream"], ["a", "b", "g"])
    up = evaluate(fish_model, parse_formula("dia o1"))
    assert (up.extent_labels, up.intent_labels) == (["Leech", "Bream", "Dog", "Cat"], ["a", "g"])
    frog = fish.object_names.index("Frog")
    assert not sat(fish_model, frog, parse_formula("box o1"))
    assert sequent_satisfied(fish_model, parse_sequent("box o1 |- o1"))


def test_sort_violations(fish):
    right = make_right(fish, fish.attributes(["b"]))
    with pytest.raises(ContractViolation, match="o1 must be ⊓-idempotent"):
        Model(fish, {o1: right})
    with pytest.raises(ContractViolation, match="a1 must be ⊔-idempotent"):
        Model(fish, {a1: make_left(fish, fish.objects(["Dog"]))})
    # a concept is both, so either sort accepts it
    c = make_left(fish, fish.objects(["Leech", "Bream", "Frog"]))
    Model(fish, {o1: c, a1: c})


def test_unbound_variable(fish):
    with pytest.raises(UnboundVariable):
        evaluate(Model(fish), parse_formula("o1 * top"))
    with pytest.raises(UnboundVariable):
        sat(Model(fish), 0, parse_formula("o2"))


@settings(max_examples=300, deadline=None)
@given(models(), formulas(4, n_vars=2))
def test_evaluate_matches_set_oracle(model, f):
    x = evaluate(model, f)
    alg = SetAlgebra(set_ctx(model.kc))
    sval = {v: as_sets(s) for v, s in model.valuation.items()}
    assert as_sets(x) == alg.evaluate(f, sval)
    assert is_concept(x) or x.kind.name in ("LEFT", "RIGHT")


@settings(max_examples=300, deadline=None)
@given(models(), formulas(4, n_vars=2), formulas(4, n_vars=2))
def test_clauses_agree_with_algebra(model, f, g):
    x = evaluate(model, f)
    assert {i for i in range(model.ctx.n_objects) if sat(model, i, f)} == set(members(x.extent))
    assert {j for j in range(model.ctx.n_attributes) if cosat(model, j, f)} == set(members(x.intent))
    s = Sequent(f, g)
    assert sequent_satisfied(model, s) == sequent_holds(model, s) == leq(x, evaluate(model, g))


@settings(max_examples=150, deadline=None)
@given(models(), formulas(3, n_vars=2))
def test_diamond_closed_forms(model, f):
    K = set_ctx(model.kc)
    x = evaluate(model, f)
    d = evaluate(model, dia(f))
    A = upper_set(K.G, K.R, frozenset(members(x.extent)))
    assert as_sets(d) == (A, K.up(A))
    bd = evaluate(model, bdia(f))
    B = upper_set(K.M, K.S, frozenset(members(x.intent)))
    assert as_sets(bd) == (K.down(B), B)


# sequents and hypersequents


@settings(max_examples=100, deadline=None)
@given(models())
def test_always_satisfied_shapes(model):
    for text in ("o1 |- o1", "o1 |- o1*o1 || o1+o1 |- o1", "top |- bot || o1 |- o1", "o1 * o1 |- o1"):
        assert hypersequent_satisfied(model, parse_hypersequent(text))
    assert not hypersequent_satisfied(model, parse_hypersequent("top |- bot"))


def test_zink_named_model(zink_model):
    assert is_named_model(zink_model, 14)
    assert sequent_satisfied(zink_model, parse_sequent("a1 * a2 |- a1"))
    assert concept_formula_check(zink_model, parse_formula("a1 * a2"))
    stiller = evaluate(zink_model, parse_formula("a1 * a2"))
    assert stiller.extent_labels == ["1559", "1560", "1561", "1562"]
    assert set(stiller.intent_labels) == {"gerade Form", "eingedrehtes Mundstück"}
    # an object variable entails an attribute variable exactly when the object has the attribute
    ctx = zink_model.ctx
    for i, j in itertools.product(range(1, 15), range(1, 14)):
        g = members(zink_model.valuation[ObjVar(i)].extent)[0]
        m = members(zink_model.valuation[PropVar(j)].intent)[0]
        holds = sequent_satisfied(zink_model, parse_sequent(f"o{i} |- a{j}"))
        assert holds == ctx.incidence[g][m]


def test_named_model_conditions(fish):
    val = named_valuation(fish, list(range(5)), list(range(4)))
    assert is_named_model(Model(fish, val), (5, 4))
    assert not is_named_model(Model(fish, val), (6, 4))  # o6 unbound
    short = named_valuation(fish, [0, 1, 2, 3, 3], list(range(4)))
    assert not is_named_model(Model(fish, short), (5, 4))  # Cat is never named
    wide = dict(val)
    wide[o1] = make_left(fish, fish.all_objects)
    assert not is_named_model(Model(fish, wide), (5, 4))


def test_every_zink_concept_is_named_by_a_formula(zink_model):
    ctx = zink_model.ctx
    attr_var = {members(x.intent)[0]: k.i for k, x in zink_model.valuation.items() if isinstance(k, PropVar)}
    for c in concepts(ctx, bound=14):
        ms = members(c.intent)
        text = " * ".join(f"a{attr_var[m]}" for m in ms) if ms else "top"
        text = f"({text}) * ({text})"
        assert evaluate(zink_model, parse_formula(text)) == c


def test_concept_formula_check(fish):
    assert not concept_formula_check(Model(fish), parse_formula("top"))
    full = FormalContext.from_masks(2, 2, [3, 3])
    assert concept_formula_check(Model(full), parse_formula("bot + bot"))


@settings(max_examples=200, deadline=None)
@given(models(), formulas(3, n_vars=2))
def test_concept_formula_check_matches_is_concept(model, f):
    assert concept_formula_check(model, f) == is_concept(evaluate(model, f))


def test_clarified(fish):
    assert not is_clarified(fish)
    assert is_clarified(FormalContext.from_masks(3, 3, [1, 2, 4]))
    assert is_clarified(FormalContext.from_masks(1, 1, [0]))


def _clarification_rules_hold(ctx) -> bool:
    """Rules 'p+p -||- q+q gives p -||- q' and the attribute dual, over all named models."""
    objs, atts = range(ctx.n_objects), range(ctx.n_attributes)
    for g1, g2 in itertools.product(objs, repeat=2):
        val = named_valuation(ctx, [g1, g2, *objs], [*atts])
        m = Model(ctx, val)
        prem = all(sequent_satisfied(m, parse_sequent(t)) for t in ("o1+o1 |- o2+o2", "o2+o2 |- o1+o1"))
        if prem and not sequent_satisfied(m, parse_sequent("o1 |- o2")):
            return False
    for m1, m2 in itertools.product(atts, repeat=2):
        val = named_valuation(ctx, [*objs], [m1, m2, *atts])
        m = Model(ctx, val)
        prem = all(sequent_satisfied(m, parse_sequent(t)) for t in ("a1*a1 |- a2*a2", "a2*a2 |- a1*a1"))
        if prem and not sequent_satisfied(m, parse_sequent("a1 |- a2")):
            return False
    return True


def test_clarified_contexts_characterized():
    for ng, nm in [(1, 1), (2, 2), (2, 3), (3, 2)]:
        for code in range(1 << (ng * nm)):
            rows = [(code >> (i * nm)) & ((1 << nm) - 1) for i in range(ng)]
            ctx = FormalContext.from_masks(ng, nm, rows)
            assert _clarification_rules_hold(ctx) == is_clarified(ctx)


# truth in a context and bounded validity


def test_full_incidence_characterization():
    pair = parse_hypersequent("top * top |- bot + bot"), parse_hypersequent("bot + bot |- top * top")
    full = FormalContext.from_masks(2, 2, [3, 3])
    assert all(true_in(full, h) for h in pair)
    part = FormalContext.from_masks(2, 2, [3, 1])
    assert not all(true_in(part, h) for h in pair)
    assert true_in(part, parse_hypersequent("o1 * o1 |- o1"))


def test_valuation_enumeration(fish):
    h = parse_hypersequent("o1 |- a1 || o2 |- o2")
    assert valuation_count(fish, h) == 32 * 32 * 16
    first = next(iter_valuations(fish, h))
    assert first[ObjVar(1)].extent == 0 and first[PropVar(1)].intent == 0
    with pytest.raises(BoundExceeded):
        true_in(fish, h, max_valuations=100)


def test_relation_classes():
    assert len(relations_in_class(2, "any")) == 16
    assert len(relations_in_class(2, "reflexive")) == 4
    assert len(relations_in_class(3, "equivalence")) == 5
    assert len(relations_in_class(3, "refl+trans")) == 29
    with pytest.raises(ContractViolation):
        SearchBounds(relation_class="symmetric")
    with pytest.raises(ContractViolation):
        SearchBounds(max_objects=0)


@pytest.mark.parametrize(
    "text, cls, size, verdict",
    [
        ("o1 |- o1 + o1", "any", 2, "valid_up_to_bounds"),
        ("o1 + o1 |- o1", "any", 2, "countermodel"),
        ("box o1 |- o1", "refl+trans", 2, "valid_up_to_bounds"),
        ("box o1 |- o1", "any", 2, "countermodel"),
        ("dia o1 |- box dia o1", "equivalence", 3, "valid_up_to_bounds"),
        ("dia o1 |- box dia o1", "refl+trans", 3, "countermodel"),
        ("top * top |- bot + bot", "any", 2, "countermodel"),
        ("top*top |- bot+bot || bot+bot |- top*top", "any", 2, "valid_up_to_bounds"),
    ],
)
def test_validity_examples(text, cls, size, verdict):
    v = validity_search(parse_hypersequent(text), SearchBounds(size, size, cls))
    assert v.verdict == verdict
    if v.countermodel is not None:
        cm = v.countermodel
        m = Model(cm.kc, cm.valuation)
        assert not hypersequent_satisfied(m, parse_hypersequent(text))


def test_first_countermodel_is_deterministic():
    h = parse_hypersequent("top * top |- bot + bot")
    v = validity_search(h, SearchBounds(2, 2))
    # the first context in the order is 1x1 with empty incidence
    assert v.contexts_checked == 1
    doc = v.to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert doc["countermodel"]["cxt"].startswith("B\n")
    assert set(doc["countermodel"]) >= {"cxt", "relations", "valuation", "failing_component", "witness"}
    # without the smallest size the first countermodel is not full either
    v2 = validity_search(h, SearchBounds(2, 2, min_objects=2, min_attributes=2))
    assert v2.countermodel.kc.base.rows != (3, 3)


def test_search_cap():
    with pytest.raises(BoundExceeded):
        validity_search(parse_hypersequent("box o1 |- o1"), SearchBounds(3, 3, max_models=1000))
