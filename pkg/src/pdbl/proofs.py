"""Axioms, inference rules and a derivation checker for PDBL and its modal extensions.

A derivation is a numbered list of hypersequents, each justified as an axiom
instance (with an explicit substitution), a rule application (with premise
line numbers and explicit context splits) or an undischarged premise. The
checker only verifies; it never searches.

Derivation file syntax, one line per step::

    <n>. <hypersequent> ; axiom <id> {A=<formula>, B=<formula>}
    <n>. <hypersequent> ; rule <name> <premise numbers, comma separated> ctx=<ints>
    <n>. <hypersequent> ; premise

``ctx`` gives the position of the active component in each premise (so the
contexts B, D, ... have those lengths). For EC it is ``b,d`` (the lengths of B
and of the repeated block D), for EE ``b,d,e``; Sp and EW take none.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .syntax import (
    BBox,
    Box,
    Formula,
    Hypersequent,
    Join,
    Meet,
    Meta,
    Neg,
    ObjVar,
    Opp,
    ParseError,
    PropVar,
    Sequent,
    children,
    is_modal,
    parse_formula,
    parse_hypersequent,
    parse_sequent,
    render_formula,
    render_hypersequent,
)

# axiom tables, written in schema syntax: A, B, C range over formulas,
# p over object variables and P over property variables

_PDBL = [
    ("1", "A |- A"),
    ("2a", "A * B |- A"),
    ("2b", "A |- A + B"),
    ("3a", "A * B |- B"),
    ("3b", "B |- A + B"),
    ("4a", "A * B |- (A * B) * (A * B)"),
    ("4b", "(A + B) + (A + B) |- A + B"),
    ("5a", "!(A * A) |- !A"),
    ("5b", "~A |- ~(A + A)"),
    ("6a", "A * !A |- bot"),
    ("6b", "top |- A + ~A"),
    ("7a", "!!(A * B) -||- A * B"),
    ("7b", "~~(A + B) -||- A + B"),
    ("8a", "A * A |- A * (A + B)"),
    ("8b", "A + A * B |- A + A"),
    ("9a", "A * A |- A * vee(A, B)"),
    ("9b", "A + wedge(A, B) |- A + A"),
    ("10a", "A * vee(B, C) -||- vee(A * B, A * C)"),
    ("10b", "A + wedge(B, C) -||- wedge(A + B, A + C)"),
    ("11a", "bot |- A"),
    ("11b", "A |- top"),
    ("12a", "!top |- bot"),
    ("12b", "top |- ~bot"),
    ("13a", "!bot -||- top * top"),
    ("13b", "~top -||- bot + bot"),
    ("14", "(A + A) * (A + A) -||- A * A + A * A"),
    ("15a", "p * p -||- p"),
    ("15b", "P + P -||- P"),
]

_MPDBL = [
    ("16a", "box A * box B -||- box (A * B)"),
    ("16b", "bbox A + bbox B -||- bbox (A + B)"),
    ("17a", "box !bot -||- !bot"),
    ("17b", "bbox ~top -||- ~top"),
    ("18a", "box (A * A) -||- box A"),
    ("18b", "bbox (A + A) -||- bbox A"),
]

_MPDBL4 = [
    ("19a", "box A |- A"),
    ("19b", "A |- bbox A"),
    ("20a", "box box A -||- box A"),
    ("20b", "bbox bbox A -||- bbox A"),
]

_MPDBL5 = [
    ("21a", "dia A |- box dia A"),
    ("21b", "bbox bdia A |- bdia A"),
]

BASES = ("PDBL", "MPDBL", "MPDBL4", "MPDBL5")

PRIMITIVE_RULES = ("R1", "R1'", "R2", "R2'", "R3", "R3'", "R4", "R5", "Sp", "EC", "EE", "EW")
MODAL_RULES = ("R8", "R9")
DERIVED_RULES = ("R6", "R7")


def _expand(table) -> dict[str, Sequent]:
    out = {}
    for ident, text in table:
        if "-||-" in text:
            lhs, rhs = (parse_formula(t, schema=True) for t in text.split("-||-"))
            out[ident + "-left"] = Sequent(lhs, rhs)
            out[ident + "-right"] = Sequent(rhs, lhs)
        else:
            out[ident] = parse_sequent(text, schema=True)
    return out


@lru_cache(maxsize=None)
def base_axioms(base: str) -> dict[str, Sequent]:
    if base not in BASES:
        raise ValueError(f"unknown logic {base!r}; expected one of {', '.join(BASES)}")
    tables = [_PDBL]
    if base != "PDBL":
        tables.append(_MPDBL)
    if base in ("MPDBL4", "MPDBL5"):
        tables.append(_MPDBL4)
    if base == "MPDBL5":
        tables.append(_MPDBL5)
    out = {}
    for t in tables:
        out.update(_expand(t))
    return out


@dataclass(frozen=True)
class SigmaAxiom:
    ident: str
    sequent: Sequent
    concrete: bool = False


@dataclass(frozen=True)
class Logic:
    """A base logic plus extra axioms (the Σ of MPDBLΣ)."""

    base: str = "MPDBL"
    extra: tuple[SigmaAxiom, ...] = ()

    def __post_init__(self):
        axioms = base_axioms(self.base)
        for ax in self.extra:
            if ax.ident in axioms:
                raise ValueError(f"extra axiom id {ax.ident!r} clashes with a built-in axiom")

    @property
    def modal(self) -> bool:
        return self.base != "PDBL"

    def axioms(self) -> dict[str, Sequent]:
        out = dict(base_axioms(self.base))
        out.update({ax.ident: ax.sequent for ax in self.extra})
        return out

    def rules(self) -> tuple[str, ...]:
        return PRIMITIVE_RULES + DERIVED_RULES + (MODAL_RULES if self.modal else ())


def parse_sigma(text: str) -> tuple[SigmaAxiom, ...]:
    """Lines ``<id>: <sequent>`` (schema syntax) or ``concrete <id>: <sequent>``."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        concrete = False
        if line.startswith("concrete "):
            concrete = True
            line = line[len("concrete "):].strip()
        ident, sep, body = line.partition(":")
        if not sep or not ident.strip():
            raise ValueError(f"line {lineno}: expected '<id>: <sequent>'")
        try:
            seq = parse_sequent(body, schema=not concrete)
        except ParseError as e:
            raise ValueError(f"line {lineno}: {e}") from None
        out.append(SigmaAxiom(ident.strip(), seq, concrete))
    return tuple(out)


# schema instantiation and matching


def substitute(schema: Formula, subst: dict[str, Formula]) -> Formula:
    if isinstance(schema, Meta):
        if schema.name not in subst:
            raise KeyError(schema.name)
        return subst[schema.name]
    if isinstance(schema, (Meet, Join)):
        return type(schema)(substitute(schema.l, subst), substitute(schema.r, subst))
    if isinstance(schema, (Neg, Opp, Box, BBox)):
        return type(schema)(substitute(schema.child, subst))
    return schema


def match(schema: Formula, f: Formula, subst: dict) -> bool:
    """One-way matching of ``f`` against ``schema``; extends ``subst`` in place."""
    if isinstance(schema, Meta):
        if schema.sort == "obj" and not isinstance(f, ObjVar):
            return False
        if schema.sort == "prop" and not isinstance(f, PropVar):
            return False
        bound = subst.get(schema.name)
        if bound is None:
            subst[schema.name] = f
            return True
        return bound == f
    if type(schema) is not type(f):
        return False
    if isinstance(schema, (ObjVar, PropVar)):
        return schema == f
    return all(match(s, g, subst) for s, g in zip(children(schema), children(f)))


def schema_metas(s: Sequent) -> dict[str, str]:
    out = {}
    stack = [s.lhs, s.rhs]
    while stack:
        f = stack.pop()
        if isinstance(f, Meta):
            out[f.name] = f.sort
        stack.extend(children(f))
    return out


def match_axiom(logic: Logic, s: Sequent) -> list[tuple[str, dict[str, Formula]]]:
    """All (axiom id, substitution) pairs for which ``s`` is an instance."""
    out = []
    for ident, schema in logic.axioms().items():
        subst: dict = {}
        if match(schema.lhs, s.lhs, subst) and match(schema.rhs, s.rhs, subst):
            out.append((ident, subst))
    return out


# derivations


class DerivationError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Line:
    n: int
    hyper: Hypersequent
    kind: str  # 'axiom', 'rule' or 'premise'
    name: str = ""
    subst: tuple[tuple[str, Formula], ...] = ()
    premises: tuple[int, ...] = ()
    ctx: tuple[int, ...] = ()

    def render(self) -> str:
        head = f"{self.n}. {render_hypersequent(self.hyper)} ; "
        if self.kind == "axiom":
            body = ", ".join(f"{k}={render_formula(v)}" for k, v in self.subst)
            return head + f"axiom {self.name} {{{body}}}"
        if self.kind == "premise":
            return head + "premise"
        out = head + f"rule {self.name}"
        if self.premises:
            out += " " + ",".join(map(str, self.premises))
        if self.ctx:
            out += " ctx=" + ",".join(map(str, self.ctx))
        return out


@dataclass(frozen=True)
class Derivation:
    lines: tuple[Line, ...]
    name: str = ""

    @property
    def claim(self) -> Hypersequent:
        return self.lines[-1].hyper

    def render(self) -> str:
        head = f"# {self.name}\n" if self.name else ""
        return head + "".join(l.render() + "\n" for l in self.lines)


def _split_top(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


_LINE = re.compile(r"\s*(\d+)\.\s+(.*?)\s*;\s*(axiom|rule|premise)\b\s*(.*)$")
_AXIOM_TAIL = re.compile(r"(\S+)\s*(?:\{(.*)\})?\s*$")
_RULE_TAIL = re.compile(r"(\S+)(?:\s+(\d+(?:\s*,\s*\d+)*))?(?:\s+ctx=(\d+(?:,\d+)*))?\s*$")


def parse_derivation(text: str, name: str = "") -> Derivation:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        if raw.lstrip().startswith("#"):
            if not name and not lines:
                name = raw.lstrip()[1:].strip()
            continue
        m = _LINE.match(raw)
        if not m:
            raise DerivationError(lineno, "expected '<n>. <hypersequent> ; axiom|rule|premise ...'")
        n, hs_text, kind, tail = int(m.group(1)), m.group(2), m.group(3), m.group(4)
        try:
            hyper = parse_hypersequent(hs_text)
        except ParseError as e:
            raise DerivationError(lineno, f"bad hypersequent: {e}") from None
        if kind == "premise":
            if tail.strip():
                raise DerivationError(lineno, "premise lines take no arguments")
            lines.append(Line(n, hyper, "premise"))
        elif kind == "axiom":
            am = _AXIOM_TAIL.match(tail)
            if not am:
                raise DerivationError(lineno, "expected 'axiom <id> {X=<formula>, ...}'")
            subst = []
            for item in _split_top(am.group(2) or ""):
                key, eq, val = item.partition("=")
                if not eq:
                    raise DerivationError(lineno, f"bad substitution entry {item!r}")
                try:
                    subst.append((key.strip(), parse_formula(val)))
                except ParseError as e:
                    raise DerivationError(lineno, f"bad substitution for {key.strip()}: {e}") from None
            lines.append(Line(n, hyper, "axiom", am.group(1), tuple(subst)))
        else:
            rm = _RULE_TAIL.match(tail)
            if not rm:
                raise DerivationError(lineno, "expected 'rule <name> <premises> ctx=<splits>'")
            prem = tuple(int(x) for x in re.split(r"\s*,\s*", rm.group(2))) if rm.group(2) else ()
            ctx = tuple(int(x) for x in rm.group(3).split(",")) if rm.group(3) else ()
            lines.append(Line(n, hyper, "rule", rm.group(1), premises=prem, ctx=ctx))
    if not lines:
        raise DerivationError(None, "empty derivation")
    return Derivation(tuple(lines), name)


def load_derivation(path) -> Derivation:
    p = Path(path)
    return parse_derivation(p.read_text(encoding="utf-8"), name="")


# rule verification


class StepError(ValueError):
    def __init__(self, message: str, component: int | None = None):
        self.component = component
        where = f" (component {component})" if component is not None else ""
        super().__init__(message + where)


def _sq(s: Sequent) -> str:
    return f"{render_formula(s.lhs)} |- {render_formula(s.rhs)}"


def _expect(cond: bool, message: str, component: int | None = None):
    if not cond:
        raise StepError(message, component)


def _check_frame(concl: tuple, expected: list, active: int):
    """Compare the conclusion with the expected component list, ignoring the active slot."""
    if len(concl) != len(expected):
        first = next((k for k in range(min(len(concl), len(expected)))
                      if k != active and concl[k] != expected[k]), min(len(concl), len(expected)))
        raise StepError(f"conclusion has {len(concl)} components, expected {len(expected)}", first)
    for k, (c, e) in enumerate(zip(concl, expected)):
        if k != active and c != e:
            raise StepError(f"context component {_sq(c)} should be {_sq(e)}", k)


def _active(prem: tuple, i: int, which: str = "premise") -> Sequent:
    _expect(0 <= i < len(prem), f"ctx index {i} out of range for {which} with {len(prem)} components")
    return prem[i]


def _unary(name: str, prem: tuple, concl: tuple, ctx: tuple):
    _expect(len(ctx) == 1, f"{name} needs ctx=<active index>")
    i = ctx[0]
    s = _active(prem, i)
    _check_frame(concl, list(prem), i)
    c = concl[i]
    a, b = s.lhs, s.rhs
    if name in ("R1", "R1'", "R2", "R2'"):
        node = Meet if name.startswith("R1") else Join
        ok = isinstance(c.lhs, node) and isinstance(c.rhs, node)
        if ok and not name.endswith("'"):
            ok = c.lhs.l == a and c.rhs.l == b and c.lhs.r == c.rhs.r
        elif ok:
            ok = c.lhs.r == a and c.rhs.r == b and c.lhs.l == c.rhs.l
        sym = "*" if node is Meet else "+"
        shape = (f"A {sym} G |- B {sym} G" if not name.endswith("'") else f"G {sym} A |- G {sym} B")
        _expect(ok, f"{name} conclusion must have the shape {shape} for premise {_sq(s)}", i)
    elif name in ("R3", "R3'"):
        node = Neg if name == "R3" else Opp
        _expect(c == Sequent(node(b), node(a)), f"{name} conclusion should be {_sq(Sequent(node(b), node(a)))}", i)
    else:
        node = Box if name == "R8" else BBox
        _expect(c == Sequent(node(a), node(b)), f"{name} conclusion should be {_sq(Sequent(node(a), node(b)))}", i)


def _binary(name: str, p1: tuple, p2: tuple, concl: tuple, ctx: tuple):
    _expect(len(ctx) == 2, f"{name} needs ctx=<i>,<j>")
    i, j = ctx
    s1, s2 = _active(p1, i, "first premise"), _active(p2, j, "second premise")
    expected = list(p1[:i]) + list(p2[:j]) + [None] + list(p1[i + 1:]) + list(p2[j + 1:])
    k = i + j
    _check_frame(concl, expected, k)
    c = concl[k]
    if name == "R4":
        _expect(s1.rhs == s2.lhs, f"R4 middle formulas differ: {render_formula(s1.rhs)} vs {render_formula(s2.lhs)}", k)
        want = Sequent(s1.lhs, s2.rhs)
    elif name == "R6":
        _expect(s1.lhs == s2.lhs, "R6 premises must share their left formula", k)
        want = Sequent(Meet(s1.lhs, s1.lhs), Meet(s1.rhs, s2.rhs))
    else:  # R7
        _expect(s1.rhs == s2.rhs, "R7 premises must share their right formula", k)
        want = Sequent(Join(s1.lhs, s2.lhs), Join(s1.rhs, s1.rhs))
    _expect(c == want, f"{name} conclusion should be {_sq(want)}", k)


def _r5(prems: list, concl: tuple, ctx: tuple):
    _expect(len(ctx) == 4, "R5 needs ctx=<i>,<j>,<k>,<l>")
    act = [_active(p, c, f"premise {n + 1}") for n, (p, c) in enumerate(zip(prems, ctx))]
    s1 = act[0]
    _expect(isinstance(s1.lhs, Meet), "R5 first premise must read A * B |- A * A", None)
    a, b = s1.lhs.l, s1.lhs.r
    want = [
        Sequent(Meet(a, b), Meet(a, a)),
        Sequent(Meet(a, a), Meet(a, b)),
        Sequent(Join(a, b), Join(b, b)),
        Sequent(Join(b, b), Join(a, b)),
    ]
    for n, (got, exp) in enumerate(zip(act, want)):
        _expect(got == exp, f"R5 premise {n + 1} should be {_sq(exp)}", ctx[n])
    befores = [list(p[:c]) for p, c in zip(prems, ctx)]
    afters = [list(p[c + 1:]) for p, c in zip(prems, ctx)]
    expected = sum(befores, []) + [None] + sum(afters, [])
    k = sum(len(b) for b in befores)
    _check_frame(concl, expected, k)
    _expect(concl[k] == Sequent(a, b), f"R5 conclusion should be {_sq(Sequent(a, b))}", k)


def verify_step(logic: Logic, line: Line, premises: list[Hypersequent]):
    """Raise StepError unless ``line`` follows from ``premises`` by its rule."""
    name, ctx = line.name, line.ctx
    concl = line.hyper.components
    prems = [p.components for p in premises]
    arity = {"Sp": 0, "R4": 2, "R6": 2, "R7": 2, "R5": 4}.get(name, 1)
    if name not in logic.rules():
        raise StepError(f"unknown rule {name!r} for {logic.base}")
    _expect(len(prems) == arity, f"{name} takes {arity} premise(s), got {len(prems)}")
    if name in ("R1", "R1'", "R2", "R2'", "R3", "R3'", "R8", "R9"):
        _unary(name, prems[0], concl, ctx)
    elif name in ("R4", "R6", "R7"):
        _binary(name, prems[0], prems[1], concl, ctx)
    elif name == "R5":
        _r5(prems, concl, ctx)
    elif name == "Sp":
        _expect(not ctx, "Sp takes no ctx")
        _expect(len(concl) == 2, "Sp concludes exactly two components")
        a = concl[0].lhs
        want = (Sequent(a, Meet(a, a)), Sequent(Join(a, a), a))
        for k in range(2):
            _expect(concl[k] == want[k], f"Sp component should be {_sq(want[k])}", k)
    elif name == "EW":
        _expect(not ctx, "EW takes no ctx")
        p = prems[0]
        _expect(len(concl) >= len(p), "EW cannot drop components")
        for k, s in enumerate(p):
            _expect(concl[k] == s, f"EW must keep premise component {_sq(s)}", k)
    elif name == "EC":
        _expect(len(ctx) == 2, "EC needs ctx=<len B>,<len D>")
        b, d = ctx
        p = prems[0]
        _expect(b + 2 * d <= len(p), "EC split exceeds the premise")
        _expect(p[b:b + d] == p[b + d:b + 2 * d], "EC premise does not repeat the block D", b + d)
        _check_frame(concl, list(p[:b + d]) + list(p[b + 2 * d:]), -1)
    elif name == "EE":
        _expect(len(ctx) == 3, "EE needs ctx=<len B>,<len D>,<len E>")
        b, d, e = ctx
        p = prems[0]
        _expect(b + d + e <= len(p), "EE split exceeds the premise")
        swapped = list(p[:b]) + list(p[b + d:b + d + e]) + list(p[b:b + d]) + list(p[b + d + e:])
        _check_frame(concl, swapped, -1)


@dataclass
class CheckResult:
    claim: Hypersequent
    premises: list[Hypersequent] = field(default_factory=list)


def _check_axiom(logic: Logic, line: Line):
    axioms = logic.axioms()
    schema = axioms.get(line.name)
    if schema is None:
        raise StepError(f"unknown axiom {line.name!r} for {logic.base}")
    if len(line.hyper) != 1:
        raise StepError("an axiom instance is a single sequent", 1)
    subst = dict(line.subst)
    metas = schema_metas(schema)
    missing = set(metas) - set(subst)
    extra = set(subst) - set(metas)
    _expect(not missing, f"substitution misses {', '.join(sorted(missing))}")
    _expect(not extra, f"substitution has unknown keys {', '.join(sorted(extra))}")
    for key, sort in metas.items():
        val = subst[key]
        if sort == "obj":
            _expect(isinstance(val, ObjVar), f"{key} must be an object variable")
        elif sort == "prop":
            _expect(isinstance(val, PropVar), f"{key} must be a property variable")
    want = Sequent(substitute(schema.lhs, subst), substitute(schema.rhs, subst))
    _expect(line.hyper[0] == want, f"axiom {line.name} instance should be {_sq(want)}", 0)


def check_derivation(logic: Logic, d: Derivation) -> CheckResult:
    """Verify every line; raises DerivationError at the first bad one."""
    seen: dict[int, Hypersequent] = {}
    prems = []
    for line in d.lines:
        if line.n in seen:
            raise DerivationError(line.n, "duplicate line number")
        if not logic.modal and any(is_modal(f) for s in line.hyper for f in (s.lhs, s.rhs)):
            raise DerivationError(line.n, "PDBL does not allow box or bbox")
        try:
            if line.kind == "premise":
                prems.append(line.hyper)
            elif line.kind == "axiom":
                _check_axiom(logic, line)
            else:
                for p in line.premises:
                    if p not in seen:
                        raise StepError(f"premise line {p} does not precede this line")
                verify_step(logic, line, [seen[p] for p in line.premises])
        except StepError as e:
            raise DerivationError(line.n, str(e)) from None
        seen[line.n] = line.hyper
    return CheckResult(d.claim, prems)
