"""Command-line interface: ``pdbl <subcommand> ...``.

Exit codes: 0 success or valid, 1 countermodel / unsatisfied / rejected proof,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import formats
from .context import (
    BoundExceeded,
    ContractViolation,
    FormalContext,
    Semiconcept,
    concepts,
    enumerate_semiconcepts,
    leq_componentwise,
    make_left,
    make_right,
    semiconcept,
)
from .kripke import KripkeContext, approx_lower, approx_upper, is_definable, induced_sd, relation_properties
from .proofs import DerivationError, Logic, check_derivation, load_derivation, parse_sigma
from .semantics import (
    Model,
    RELATION_CLASSES,
    SearchBounds,
    evaluate,
    hypersequent_satisfied,
    is_clarified,
    is_named_model,
    validity_search,
)
from .syntax import ObjVar, PropVar, is_modal, parse_formula, parse_hypersequent


class UsageError(ValueError):
    pass


# valuation files

_VAL_LINE = re.compile(r"^\s*([oa])(\d+)\s*=\s*(.*?)\s*$")


def _names(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise UsageError(f"expected a braced name list, got {text!r}")
    return [n.strip() for n in text[1:-1].split(",") if n.strip()]


def parse_valuation(text: str, ctx: FormalContext) -> dict:
    """Lines ``o<k> = {objects}``, ``a<k> = {attributes}`` or an explicit pair
    ``o<k> = ({objects}, {attributes})``."""
    val = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        m = _VAL_LINE.match(raw)
        if not m:
            raise UsageError(f"valuation line {lineno}: expected 'o<k> = {{...}}' or 'a<k> = {{...}}'")
        sort, k, body = m.group(1), int(m.group(2)), m.group(3)
        var = ObjVar(k) if sort == "o" else PropVar(k)
        try:
            if body.startswith("("):
                inner = body[1:-1] if body.endswith(")") else body
                ext_text, _, int_text = inner.partition("}")
                x = semiconcept(ctx, ctx.objects(_names(ext_text + "}")),
                                ctx.attributes(_names(int_text.lstrip(" ,"))))
            elif sort == "o":
                x = make_left(ctx, ctx.objects(_names(body)))
            else:
                x = make_right(ctx, ctx.attributes(_names(body)))
        except ContractViolation as e:
            raise UsageError(f"valuation line {lineno}: {e}") from None
        val[var] = x
    return val


def _describe(x: Semiconcept) -> dict:
    return {
        "extent": x.extent_labels,
        "intent": x.intent_labels,
        "kind": x.kind.value,
    }


def _text_pair(x: Semiconcept) -> str:
    return "extent: {" + ", ".join(x.extent_labels) + "}\nintent: {" + ", ".join(x.intent_labels) + "}"


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _load(path) -> KripkeContext:
    return formats.load_context(path)


def _load_model(args) -> Model:
    kc = _load(args.context)
    val = parse_valuation(Path(args.valuation).read_text(encoding="utf-8"), kc.base) if args.valuation else {}
    try:
        return Model(kc, val)
    except ContractViolation as e:
        raise UsageError(str(e)) from None


def _warn_modal(kc: KripkeContext, formulas):
    if not kc.has_relations and any(is_modal(f) for f in formulas):
        print("warning: modal operators evaluated over a context without relations", file=sys.stderr)


# subcommands


def cmd_ctx(args) -> int:
    kc = _load(args.context)
    ctx = kc.base
    report = {
        "objects": ctx.n_objects,
        "attributes": ctx.n_attributes,
        "clarified": is_clarified(ctx),
        "R": relation_properties(kc.obj_rel)._asdict(),
        "S": relation_properties(kc.attr_rel)._asdict(),
    }
    for key, count in (("semiconcepts", enumerate_semiconcepts), ("concepts", concepts)):
        try:
            report[key] = len(count(ctx))
        except BoundExceeded:
            report[key] = None
    lines = [
        f"objects: {ctx.n_objects}; attributes: {ctx.n_attributes}",
        f"clarified: {str(report['clarified']).lower()}",
        "R: " + ", ".join(f"{k}={str(v).lower()}" for k, v in report["R"].items()),
        "S: " + ", ".join(f"{k}={str(v).lower()}" for k, v in report["S"].items()),
        f"semiconcepts: {report['semiconcepts'] if report['semiconcepts'] is not None else 'over bound'}",
        f"concepts: {report['concepts'] if report['concepts'] is not None else 'over bound'}",
    ]
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_eval(args) -> int:
    model = _load_model(args)
    f = parse_formula(args.formula)
    _warn_modal(model.kc, [f])
    x = evaluate(model, f)
    _emit(args, _describe(x), _text_pair(x))
    return 0


def cmd_check_sequent(args) -> int:
    model = _load_model(args)
    h = parse_hypersequent(args.hypersequent)
    _warn_modal(model.kc, [g for s in h for g in (s.lhs, s.rhs)])
    ok = hypersequent_satisfied(model, h)
    payload = {"satisfied": ok}
    if args.var_window is not None:
        payload["named_model"] = is_named_model(model, args.var_window)
    text = f"satisfied: {str(ok).lower()}"
    if "named_model" in payload:
        text += f"\nnamed model: {str(payload['named_model']).lower()}"
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_validity(args) -> int:
    h = parse_hypersequent(args.hypersequent)
    bounds = SearchBounds(
        max_objects=args.max_objects or 2,
        max_attributes=args.max_attributes or 2,
        relation_class=args.relation_class or "any",
        max_models=args.max_models or SearchBounds.max_models,
    )
    verdict = validity_search(h, bounds)
    payload = verdict.to_json()
    if args.format == "text":
        text = f"verdict: {verdict.verdict}\ncontexts checked: {verdict.contexts_checked}\n" \
               f"valuations checked: {verdict.valuations_checked}"
        if verdict.countermodel:
            cm = payload["countermodel"]
            text += "\ncountermodel:\n" + cm["cxt"] + f"R: {cm['relations']['R']}\nS: {cm['relations']['S']}\n"
            text += "valuation: " + json.dumps(cm["valuation"]) + "\nwitness: " + json.dumps(cm["witness"])
        print(text)
    else:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    return 0 if verdict.valid else 1


def cmd_prove_check(args) -> int:
    extra = parse_sigma(Path(args.sigma).read_text(encoding="utf-8")) if args.sigma else ()
    logic = Logic(args.logic or "MPDBL", extra)
    d = load_derivation(args.derivation)
    try:
        result = check_derivation(logic, d)
    except DerivationError as e:
        _emit(args, {"ok": False, "line": e.line, "error": e.message}, f"rejected: {e}")
        return 1
    claim = str(result.claim)
    prem = [str(p) for p in result.premises]
    text = f"ok: {claim}" + ("".join(f"\n  from premise: {p}" for p in prem))
    _emit(args, {"ok": True, "claim": claim, "premises": prem}, text)
    return 0


def cmd_approx(args) -> int:
    kc = _load(args.context)
    ctx = kc.base
    if not kc.has_relations:
        kc = induced_sd(ctx)
    if args.extent is None and args.intent is None:
        raise UsageError("give --extent and/or --intent")
    try:
        if args.extent is not None and args.intent is not None:
            x = semiconcept(ctx, ctx.objects(_split(args.extent)), ctx.attributes(_split(args.intent)))
        elif args.extent is not None:
            x = make_left(ctx, ctx.objects(_split(args.extent)))
        else:
            x = make_right(ctx, ctx.attributes(_split(args.intent)))
        lower, upper = approx_lower(kc, x), approx_upper(kc, x)
        definable = is_definable(kc, x)
    except ContractViolation as e:
        raise UsageError(str(e)) from None
    payload = {"input": _describe(x), "definable": definable,
               "lower": _describe(lower), "upper": _describe(upper)}
    text = f"input: {x}  [{x.kind.value}]\nlower: {lower}\nupper: {upper}"
    if definable:
        text += "\ndefinable; approximations coincide"
    _emit(args, payload, text)
    return 0


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def lattice_dot(ctx: FormalContext) -> str:
    """Concept lattice as a DOT digraph, edges along the covering relation."""
    cs = concepts(ctx)
    below = {
        (i, j)
        for i, x in enumerate(cs)
        for j, y in enumerate(cs)
        if i != j and leq_componentwise(x, y)
    }
    covers = [
        (i, j) for i, j in sorted(below)
        if not any((i, k) in below and (k, j) in below for k in range(len(cs)))
    ]

    def esc(names) -> str:
        return ", ".join(n.replace("\\", "\\\\").replace('"', '\\"') for n in names)

    out = ["digraph lattice {", "  rankdir=BT;"]
    for i, c in enumerate(cs):
        out.append(f'  c{i} [label="{{{esc(c.extent_labels)}}}\\n{{{esc(c.intent_labels)}}}"];')
    for i, j in covers:
        out.append(f"  c{i} -> c{j};")
    out.append("}")
    return "\n".join(out)


def cmd_lattice_dot(args) -> int:
    kc = _load(args.context)
    print(lattice_dot(kc.base))
    return 0


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--max-objects", type=int)
    common.add_argument("--max-attributes", type=int)
    common.add_argument("--relation-class", choices=RELATION_CLASSES)
    common.add_argument("--max-models", type=int)
    common.add_argument("--var-window", type=int)
    common.add_argument("--logic", choices=("PDBL", "MPDBL", "MPDBL4", "MPDBL5"))
    common.add_argument("--sigma", help="file of extra axioms, one '<id>: <sequent>' per line")

    p = argparse.ArgumentParser(prog="pdbl", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ctx", parents=[common], help="summarise a context file")
    s.add_argument("context")
    s.set_defaults(fn=cmd_ctx)

    s = sub.add_parser("eval", parents=[common], help="evaluate a formula in a model")
    s.add_argument("context")
    s.add_argument("valuation")
    s.add_argument("formula")
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("check-sequent", parents=[common], help="check a hypersequent in a model")
    s.add_argument("context")
    s.add_argument("valuation")
    s.add_argument("hypersequent")
    s.set_defaults(fn=cmd_check_sequent)

    s = sub.add_parser("validity", parents=[common], help="bounded validity / countermodel search")
    s.add_argument("hypersequent")
    s.set_defaults(fn=cmd_validity)

    s = sub.add_parser("prove-check", parents=[common], help="check a derivation file")
    s.add_argument("derivation")
    s.set_defaults(fn=cmd_prove_check)

    s = sub.add_parser("approx", parents=[common], help="rough approximations of a semiconcept")
    s.add_argument("context")
    s.add_argument("--extent", help="comma separated object names")
    s.add_argument("--intent", help="comma separated attribute names")
    s.set_defaults(fn=cmd_approx)

    s = sub.add_parser("lattice-dot", parents=[common], help="concept lattice in DOT")
    s.add_argument("context")
    s.set_defaults(fn=cmd_lattice_dot)
    return p


_ONLY = {
    "relation_class": ("validity",),
    "max_objects": ("validity",),
    "max_attributes": ("validity",),
    "max_models": ("validity",),
    "logic": ("prove-check",),
    "sigma": ("prove-check",),
    "var_window": ("check-sequent",),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag, allowed in _ONLY.items():
        if getattr(args, flag) is not None and args.command not in allowed:
            parser.print_usage(sys.stderr)
            print(f"pdbl: error: --{flag.replace('_', '-')} only applies to {', '.join(allowed)}", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except (UsageError, ValueError, OSError) as e:
        # parse, format, contract and bound errors are all ValueErrors
        print(f"pdbl: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
