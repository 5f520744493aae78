"""Two-sorted modal formulas, sequents and hypersequents (grammar-v1).

Grammar::

    hyper   := sequent ('||' sequent)*
    sequent := formula '|-' formula
    formula := term ('+' term)*              join, left-assoc
    term    := unary ('*' unary)*            meet, left-assoc
    unary   := ('!' | '~' | 'box' | 'bbox' | 'dia' | 'bdia') unary | atom
    atom    := o<k> | a<k> | 'top' | 'bot' | '(' formula ')'
             | 'vee' '(' formula ',' formula ')' | 'wedge' '(' formula ',' formula ')'

``vee``, ``wedge``, ``dia`` and ``bdia`` are expanded while parsing. In schema
mode single letters are pattern variables: ``p``/``q`` stand for object
variables, ``P``/``Q`` for property variables, any other capital for a formula.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class ObjVar:
    i: int


@dataclass(frozen=True)
class PropVar:
    i: int


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Meet:
    l: "Formula"
    r: "Formula"


@dataclass(frozen=True)
class Join:
    l: "Formula"
    r: "Formula"


@dataclass(frozen=True)
class Neg:
    child: "Formula"


@dataclass(frozen=True)
class Opp:
    child: "Formula"


@dataclass(frozen=True)
class Box:
    child: "Formula"


@dataclass(frozen=True)
class BBox:
    child: "Formula"


@dataclass(frozen=True)
class Meta:
    """Schema variable. ``sort`` is 'formula', 'obj' or 'prop'."""

    name: str
    sort: str = "formula"


Formula = Union[ObjVar, PropVar, Top, Bot, Meet, Join, Neg, Opp, Box, BBox, Meta]

UNARY = (Neg, Opp, Box, BBox)
BINARY = (Meet, Join)


@dataclass(frozen=True)
class Sequent:
    lhs: Formula
    rhs: Formula

    def __str__(self):
        return render_sequent(self)


@dataclass(frozen=True)
class Hypersequent:
    components: tuple[Sequent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __str__(self):
        return render_hypersequent(self)


# derived connectives


def vee(x: Formula, y: Formula) -> Formula:
    return Neg(Meet(Neg(x), Neg(y)))


def wedge(x: Formula, y: Formula) -> Formula:
    return Opp(Join(Opp(x), Opp(y)))


def dia(x: Formula) -> Formula:
    return Neg(Box(Neg(x)))


def bdia(x: Formula) -> Formula:
    return Opp(BBox(Opp(x)))


# lexing and parsing


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"at offset {offset}: {message}{exp}")


_TOKEN = re.compile(r"\s*(?:(\|-|\|\||[*+!~(),])|([A-Za-z_][A-Za-z0-9_]*))")
_KEYWORDS = {"top", "bot", "box", "bbox", "dia", "bdia", "vee", "wedge"}
_UNARY_KW = {"box": Box, "bbox": BBox, "dia": dia, "bdia": bdia}
_ATOM_START = {"variable", "top", "bot", "(", "vee", "wedge", "!", "~", "box", "bbox", "dia", "bdia"}


@dataclass
class _Tok:
    kind: str  # symbol text, 'id', or 'eof'
    text: str
    offset: int


def _lex(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    raw = text.encode("utf-8")
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip() == "":
                break
            start = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", len(text[:start].encode("utf-8")))
        start = m.start(1) if m.group(1) else m.start(2)
        off = len(text[:start].encode("utf-8"))
        if m.group(1):
            toks.append(_Tok(m.group(1), m.group(1), off))
        else:
            toks.append(_Tok("id", m.group(2), off))
        pos = m.end()
    toks.append(_Tok("eof", "", len(raw)))
    return toks


_VAR = re.compile(r"([A-Za-z_]+)(\d+)$")


class _Parser:
    def __init__(self, text: str, schema: bool):
        self.toks = _lex(text)
        self.i = 0
        self.schema = schema

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.cur
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.offset, expected)

    def eat(self, kind: str):
        if self.cur.kind != kind:
            self.fail({kind})
        self.i += 1

    def end(self):
        if self.cur.kind != "eof":
            self.fail({"end of input", "*", "+"})

    def hyper(self) -> Hypersequent:
        if self.cur.kind == "eof":
            raise ParseError("empty hypersequent", self.cur.offset, _ATOM_START)
        comps = [self.sequent()]
        while self.cur.kind == "||":
            self.i += 1
            comps.append(self.sequent())
        if self.cur.kind != "eof":
            self.fail({"||", "*", "+", "end of input"})
        return Hypersequent(tuple(comps))

    def sequent(self) -> Sequent:
        lhs = self.formula()
        if self.cur.kind != "|-":
            self.fail({"|-", "*", "+"})
        self.i += 1
        return Sequent(lhs, self.formula())

    def formula(self) -> Formula:
        f = self.term()
        while self.cur.kind == "+":
            self.i += 1
            f = Join(f, self.term())
        return f

    def term(self) -> Formula:
        f = self.unary()
        while self.cur.kind == "*":
            self.i += 1
            f = Meet(f, self.unary())
        return f

    def unary(self) -> Formula:
        t = self.cur
        if t.kind == "!":
            self.i += 1
            return Neg(self.unary())
        if t.kind == "~":
            self.i += 1
            return Opp(self.unary())
        if t.kind == "id" and t.text in _UNARY_KW:
            self.i += 1
            return _UNARY_KW[t.text](self.unary())
        return self.atom()

    def atom(self) -> Formula:
        t = self.cur
        if t.kind == "(":
            self.i += 1
            f = self.formula()
            if self.cur.kind != ")":
                self.fail({")", "*", "+"})
            self.i += 1
            return f
        if t.kind != "id":
            self.fail(_ATOM_START)
        self.i += 1
        if t.text == "top":
            return Top()
        if t.text == "bot":
            return Bot()
        if t.text in ("vee", "wedge"):
            self.eat("(")
            x = self.formula()
            if self.cur.kind != ",":
                self.fail({",", "*", "+"})
            self.i += 1
            y = self.formula()
            if self.cur.kind != ")":
                self.fail({")", "*", "+"})
            self.i += 1
            return vee(x, y) if t.text == "vee" else wedge(x, y)
        if self.schema and len(t.text) == 1 and t.text.isalpha():
            if t.text in "pq":
                return Meta(t.text, "obj")
            if t.text in "PQ":
                return Meta(t.text, "prop")
            if t.text.isupper():
                return Meta(t.text)
        m = _VAR.match(t.text)
        if m and m.group(1) in ("o", "a"):
            k = int(m.group(2))
            if k < 1:
                raise ParseError(f"variable index must be at least 1 in {t.text!r}", t.offset)
            return ObjVar(k) if m.group(1) == "o" else PropVar(k)
        if m:
            raise ParseError(
                f"unknown variable sort prefix {m.group(1)!r} (use 'o' or 'a')", t.offset
            )
        self.i -= 1
        self.fail(_ATOM_START)


def parse_formula(text: str, schema: bool = False) -> Formula:
    p = _Parser(text, schema)
    f = p.formula()
    p.end()
    return f


def parse_sequent(text: str, schema: bool = False) -> Sequent:
    p = _Parser(text, schema)
    s = p.sequent()
    p.end()
    return s


def parse_hypersequent(text: str, schema: bool = False) -> Hypersequent:
    return _Parser(text, schema).hyper()


# rendering

_ASCII = {"meet": " * ", "join": " + ", Neg: "!", Opp: "~", Box: "box ", BBox: "bbox ",
          Top: "top", Bot: "bot", "turnstile": " |- ", "bar": " || "}
_UNICODE = {"meet": " ⊓ ", "join": " ⊔ ", Neg: "¬", Opp: "⌟", Box: "□", BBox: "■",
            Top: "⊤", Bot: "⊥", "turnstile": " ⊢ ", "bar": " | "}


def render_formula(f: Formula, unicode: bool = False) -> str:
    sym = _UNICODE if unicode else _ASCII
    return _render(f, sym)


def _render(f: Formula, sym) -> str:
    if isinstance(f, ObjVar):
        return f"o{f.i}"
    if isinstance(f, PropVar):
        return f"a{f.i}"
    if isinstance(f, Meta):
        return f.name
    if isinstance(f, (Top, Bot)):
        return sym[type(f)]
    if isinstance(f, UNARY):
        inner = _render(f.child, sym)
        if isinstance(f.child, BINARY):
            inner = f"({inner})"
        return sym[type(f)] + inner
    if isinstance(f, Meet):
        left = _render(f.l, sym)
        if isinstance(f.l, Join):
            left = f"({left})"
        right = _render(f.r, sym)
        if isinstance(f.r, BINARY):
            right = f"({right})"
        return left + sym["meet"] + right
    if isinstance(f, Join):
        right = _render(f.r, sym)
        if isinstance(f.r, Join):
            right = f"({right})"
        return _render(f.l, sym) + sym["join"] + right
    raise TypeError(f"not a formula: {f!r}")


def render_sequent(s: Sequent, unicode: bool = False) -> str:
    sym = _UNICODE if unicode else _ASCII
    return _render(s.lhs, sym) + sym["turnstile"] + _render(s.rhs, sym)


def render_hypersequent(h: Hypersequent, unicode: bool = False) -> str:
    sym = _UNICODE if unicode else _ASCII
    return sym["bar"].join(render_sequent(s, unicode) for s in h.components)


# traversal helpers


def children(f: Formula) -> tuple:
    if isinstance(f, BINARY):
        return (f.l, f.r)
    if isinstance(f, UNARY):
        return (f.child,)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(children(g))


def free_vars(f: Formula) -> tuple[frozenset, frozenset]:
    objs, props = set(), set()
    for g in subformulas(f):
        if isinstance(g, ObjVar):
            objs.add(g.i)
        elif isinstance(g, PropVar):
            props.add(g.i)
    return frozenset(objs), frozenset(props)


def hyper_free_vars(h) -> tuple[frozenset, frozenset]:
    objs, props = set(), set()
    comps = h.components if isinstance(h, Hypersequent) else [h]
    for s in comps:
        for f in (s.lhs, s.rhs):
            o, p = free_vars(f)
            objs |= o
            props |= p
    return frozenset(objs), frozenset(props)


def is_modal(f: Formula) -> bool:
    return any(isinstance(g, (Box, BBox)) for g in subformulas(f))


def depth(f: Formula) -> int:
    cs = children(f)
    return 0 if not cs else 1 + max(depth(c) for c in cs)
