"""Bundled derivations: basic provable sequents of PDBL, the
derived rules R6, R7, R10, R11 and the two diamond facts for MPDBL4.

Every line states its hypersequent explicitly; the checker decides whether
the step is legal. Lemma helpers emit their lines into a shared script so that
larger proofs stay fully inlined.
"""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .proofs import Derivation, Line, parse_derivation
from .syntax import parse_formula, parse_hypersequent


def _p(x: str) -> str:
    return f"({x})"


def meet(x, y):
    return f"{_p(x)} * {_p(y)}"


def join(x, y):
    return f"{_p(x)} + {_p(y)}"


def neg(x):
    return f"!{_p(x)}"


def opp(x):
    return f"~{_p(x)}"


def vee(x, y):
    return f"vee({x}, {y})"


def wedge(x, y):
    return f"wedge({x}, {y})"


def seq(x, y):
    return f"{_p(x)} |- {_p(y)}"


class Script:
    def __init__(self, name: str):
        self.name = name
        self.lines: list[Line] = []

    def _add(self, text, **kw) -> int:
        n = len(self.lines) + 1
        self.lines.append(Line(n, parse_hypersequent(text), **kw))
        return n

    def premise(self, text) -> int:
        return self._add(text, kind="premise")

    def ax(self, text, ident, **subst) -> int:
        sub = tuple((k, parse_formula(v)) for k, v in sorted(subst.items()))
        return self._add(text, kind="axiom", name=ident, subst=sub)

    def rule(self, text, name, *premises, ctx=()) -> int:
        return self._add(text, kind="rule", name=name, premises=tuple(premises), ctx=tuple(ctx))

    def derivation(self) -> Derivation:
        return Derivation(tuple(self.lines), self.name)


# lemmas, each returns the line number of its claim


def comm_meet(s: Script, a, b) -> int:
    """a*b |- b*a"""
    ab = meet(a, b)
    l1 = s.ax(seq(ab, meet(ab, ab)), "4a", A=a, B=b)
    l2 = s.ax(seq(ab, b), "3a", A=a, B=b)
    l3 = s.ax(seq(ab, a), "2a", A=a, B=b)
    l4 = s.rule(seq(meet(ab, ab), meet(b, a)), "R6", l2, l3, ctx=(0, 0))
    return s.rule(seq(ab, meet(b, a)), "R4", l1, l4, ctx=(0, 0))


def comm_join(s: Script, a, b) -> int:
    """a+b |- b+a"""
    ba = join(b, a)
    l1 = s.ax(seq(a, ba), "3b", A=b, B=a)
    l2 = s.ax(seq(b, ba), "2b", A=b, B=a)
    l3 = s.rule(seq(join(a, b), join(ba, ba)), "R7", l1, l2, ctx=(0, 0))
    l4 = s.ax(seq(join(ba, ba), ba), "4b", A=b, B=a)
    return s.rule(seq(join(a, b), ba), "R4", l3, l4, ctx=(0, 0))


def assoc_meet_out(s: Script, a, b, c) -> int:
    """(a*b)*c |- a*(b*c)"""
    ab = meet(a, b)
    x = meet(ab, c)
    bc = meet(b, c)
    l1 = s.ax(seq(x, ab), "2a", A=ab, B=c)
    l2 = s.ax(seq(ab, b), "3a", A=a, B=b)
    l3 = s.rule(seq(x, b), "R4", l1, l2, ctx=(0, 0))
    l4 = s.ax(seq(x, c), "3a", A=ab, B=c)
    l5 = s.rule(seq(meet(x, x), bc), "R6", l3, l4, ctx=(0, 0))
    l6 = s.ax(seq(x, meet(x, x)), "4a", A=ab, B=c)
    l7 = s.rule(seq(x, bc), "R4", l6, l5, ctx=(0, 0))
    l8 = s.ax(seq(ab, a), "2a", A=a, B=b)
    l9 = s.rule(seq(x, a), "R4", l1, l8, ctx=(0, 0))
    l10 = s.rule(seq(meet(x, x), meet(a, bc)), "R6", l9, l7, ctx=(0, 0))
    return s.rule(seq(x, meet(a, bc)), "R4", l6, l10, ctx=(0, 0))


def assoc_meet_in(s: Script, a, b, c) -> int:
    """a*(b*c) |- (a*b)*c"""
    bc = meet(b, c)
    y = meet(a, bc)
    ab = meet(a, b)
    l1 = s.ax(seq(y, a), "2a", A=a, B=bc)
    l2 = s.ax(seq(y, bc), "3a", A=a, B=bc)
    l3 = s.ax(seq(bc, b), "2a", A=b, B=c)
    l4 = s.rule(seq(y, b), "R4", l2, l3, ctx=(0, 0))
    l5 = s.rule(seq(meet(y, y), ab), "R6", l1, l4, ctx=(0, 0))
    l6 = s.ax(seq(y, meet(y, y)), "4a", A=a, B=bc)
    l7 = s.rule(seq(y, ab), "R4", l6, l5, ctx=(0, 0))
    l8 = s.ax(seq(bc, c), "3a", A=b, B=c)
    l9 = s.rule(seq(y, c), "R4", l2, l8, ctx=(0, 0))
    l10 = s.rule(seq(meet(y, y), meet(ab, c)), "R6", l7, l9, ctx=(0, 0))
    return s.rule(seq(y, meet(ab, c)), "R4", l6, l10, ctx=(0, 0))


def assoc_join_in(s: Script, a, b, c) -> int:
    """a+(b+c) |- (a+b)+c"""
    ab = join(a, b)
    z = join(ab, c)
    bc = join(b, c)
    l1 = s.ax(seq(a, ab), "2b", A=a, B=b)
    l2 = s.ax(seq(ab, z), "2b", A=ab, B=c)
    l3 = s.rule(seq(a, z), "R4", l1, l2, ctx=(0, 0))
    l4 = s.ax(seq(b, ab), "3b", A=a, B=b)
    l5 = s.rule(seq(b, z), "R4", l4, l2, ctx=(0, 0))
    l6 = s.ax(seq(c, z), "3b", A=ab, B=c)
    l7 = s.rule(seq(bc, join(z, z)), "R7", l5, l6, ctx=(0, 0))
    l8 = s.ax(seq(join(z, z), z), "4b", A=ab, B=c)
    l9 = s.rule(seq(bc, z), "R4", l7, l8, ctx=(0, 0))
    l10 = s.rule(seq(join(a, bc), join(z, z)), "R7", l3, l9, ctx=(0, 0))
    return s.rule(seq(join(a, bc), z), "R4", l10, l8, ctx=(0, 0))


def assoc_join_out(s: Script, a, b, c) -> int:
    """(a+b)+c |- a+(b+c)"""
    bc = join(b, c)
    w = join(a, bc)
    ab = join(a, b)
    l1 = s.ax(seq(a, w), "2b", A=a, B=bc)
    l2 = s.ax(seq(b, bc), "2b", A=b, B=c)
    l3 = s.ax(seq(bc, w), "3b", A=a, B=bc)
    l4 = s.rule(seq(b, w), "R4", l2, l3, ctx=(0, 0))
    l5 = s.rule(seq(ab, join(w, w)), "R7", l1, l4, ctx=(0, 0))
    l6 = s.ax(seq(join(w, w), w), "4b", A=a, B=bc)
    l7 = s.rule(seq(ab, w), "R4", l5, l6, ctx=(0, 0))
    l8 = s.ax(seq(c, bc), "3b", A=b, B=c)
    l9 = s.rule(seq(c, w), "R4", l8, l3, ctx=(0, 0))
    l10 = s.rule(seq(join(ab, c), join(w, w)), "R7", l7, l9, ctx=(0, 0))
    return s.rule(seq(join(ab, c), w), "R4", l10, l6, ctx=(0, 0))


def idem_meet_drop(s: Script, a, b) -> int:
    """(a*a)*b |- a*b"""
    aa = meet(a, a)
    x = meet(aa, b)
    l1 = s.ax(seq(x, aa), "2a", A=aa, B=b)
    l2 = s.ax(seq(aa, a), "2a", A=a, B=a)
    l3 = s.rule(seq(x, a), "R4", l1, l2, ctx=(0, 0))
    l4 = s.ax(seq(x, b), "3a", A=aa, B=b)
    l5 = s.rule(seq(meet(x, x), meet(a, b)), "R6", l3, l4, ctx=(0, 0))
    l6 = s.ax(seq(x, meet(x, x)), "4a", A=aa, B=b)
    return s.rule(seq(x, meet(a, b)), "R4", l6, l5, ctx=(0, 0))


def idem_meet_add(s: Script, a, b) -> int:
    """a*b |- (a*a)*b"""
    y = meet(a, b)
    aa = meet(a, a)
    l1 = s.ax(seq(y, a), "2a", A=a, B=b)
    l2 = s.rule(seq(meet(y, y), aa), "R6", l1, l1, ctx=(0, 0))
    l3 = s.ax(seq(y, meet(y, y)), "4a", A=a, B=b)
    l4 = s.rule(seq(y, aa), "R4", l3, l2, ctx=(0, 0))
    l5 = s.ax(seq(y, b), "3a", A=a, B=b)
    l6 = s.rule(seq(meet(y, y), meet(aa, b)), "R6", l4, l5, ctx=(0, 0))
    return s.rule(seq(y, meet(aa, b)), "R4", l3, l6, ctx=(0, 0))


def idem_join_drop(s: Script, a, b) -> int:
    """(a+a)+b |- a+b"""
    z = join(a, b)
    aa = join(a, a)
    l1 = s.ax(seq(a, z), "2b", A=a, B=b)
    l2 = s.rule(seq(aa, join(z, z)), "R7", l1, l1, ctx=(0, 0))
    l3 = s.ax(seq(join(z, z), z), "4b", A=a, B=b)
    l4 = s.rule(seq(aa, z), "R4", l2, l3, ctx=(0, 0))
    l5 = s.ax(seq(b, z), "3b", A=a, B=b)
    l6 = s.rule(seq(join(aa, b), join(z, z)), "R7", l4, l5, ctx=(0, 0))
    return s.rule(seq(join(aa, b), z), "R4", l6, l3, ctx=(0, 0))


def idem_join_add(s: Script, a, b) -> int:
    """a+b |- (a+a)+b"""
    aa = join(a, a)
    w = join(aa, b)
    l1 = s.ax(seq(a, aa), "2b", A=a, B=a)
    l2 = s.ax(seq(aa, w), "2b", A=aa, B=b)
    l3 = s.rule(seq(a, w), "R4", l1, l2, ctx=(0, 0))
    l4 = s.ax(seq(b, w), "3b", A=aa, B=b)
    l5 = s.rule(seq(join(a, b), join(w, w)), "R7", l3, l4, ctx=(0, 0))
    l6 = s.ax(seq(join(w, w), w), "4b", A=aa, B=b)
    return s.rule(seq(join(a, b), w), "R4", l5, l6, ctx=(0, 0))


def neg_idem(s: Script, a) -> int:
    """!a |- !(a*a)"""
    l1 = s.ax(seq(meet(a, a), a), "2a", A=a, B=a)
    return s.rule(seq(neg(a), neg(meet(a, a))), "R3", l1, ctx=(0,))


def opp_idem(s: Script, a) -> int:
    """~(a+a) |- ~a"""
    l1 = s.ax(seq(a, join(a, a)), "2b", A=a, B=a)
    return s.rule(seq(opp(join(a, a)), opp(a)), "R3'", l1, ctx=(0,))


def absorb_meet(s: Script, a, t) -> int:
    """a*t |- a*a, for any t (used with t = a+b and t = vee(a, b))"""
    x = meet(a, t)
    l1 = s.ax(seq(x, a), "2a", A=a, B=t)
    l2 = s.rule(seq(meet(x, x), meet(a, a)), "R6", l1, l1, ctx=(0, 0))
    l3 = s.ax(seq(x, meet(x, x)), "4a", A=a, B=t)
    return s.rule(seq(x, meet(a, a)), "R4", l3, l2, ctx=(0, 0))


def absorb_join(s: Script, a, t) -> int:
    """a+a |- a+t"""
    w = join(a, t)
    l1 = s.ax(seq(a, w), "2b", A=a, B=t)
    l2 = s.rule(seq(join(a, a), join(w, w)), "R7", l1, l1, ctx=(0, 0))
    l3 = s.ax(seq(join(w, w), w), "4b", A=a, B=t)
    return s.rule(seq(join(a, a), w), "R4", l2, l3, ctx=(0, 0))


def dneg_out(s: Script, a) -> int:
    """!!a |- a*a"""
    l1 = s.ax(seq(neg(meet(a, a)), neg(a)), "5a", A=a)
    l2 = s.rule(seq(neg(neg(a)), neg(neg(meet(a, a)))), "R3", l1, ctx=(0,))
    l3 = s.ax(seq(neg(neg(meet(a, a))), meet(a, a)), "7a-left", A=a, B=a)
    return s.rule(seq(neg(neg(a)), meet(a, a)), "R4", l2, l3, ctx=(0, 0))


def dneg_in(s: Script, a) -> int:
    """a*a |- !!a"""
    l1 = s.ax(seq(meet(a, a), neg(neg(meet(a, a)))), "7a-right", A=a, B=a)
    l2 = neg_idem(s, a)
    l3 = s.rule(seq(neg(neg(meet(a, a))), neg(neg(a))), "R3", l2, ctx=(0,))
    return s.rule(seq(meet(a, a), neg(neg(a))), "R4", l1, l3, ctx=(0, 0))


def dopp_out(s: Script, a) -> int:
    """~~a |- a+a"""
    l1 = opp_idem(s, a)
    l2 = s.rule(seq(opp(opp(a)), opp(opp(join(a, a)))), "R3'", l1, ctx=(0,))
    l3 = s.ax(seq(opp(opp(join(a, a))), join(a, a)), "7b-left", A=a, B=a)
    return s.rule(seq(opp(opp(a)), join(a, a)), "R4", l2, l3, ctx=(0, 0))


def dopp_in(s: Script, a) -> int:
    """a+a |- ~~a"""
    l1 = s.ax(seq(join(a, a), opp(opp(join(a, a)))), "7b-right", A=a, B=a)
    l2 = s.ax(seq(opp(a), opp(join(a, a))), "5b", A=a)
    l3 = s.rule(seq(opp(opp(join(a, a))), opp(opp(a))), "R3'", l2, ctx=(0,))
    return s.rule(seq(join(a, a), opp(opp(a))), "R4", l1, l3, ctx=(0, 0))


def vee_intro(s: Script, a, b) -> int:
    """b |- vee(a, b) || b+b |- b"""
    l1 = s.ax(seq("bot", a), "11a", A=a)
    l2 = s.rule(seq(neg(a), neg("bot")), "R3", l1, ctx=(0,))
    l3 = s.rule(seq(meet(neg(a), neg(b)), meet(neg("bot"), neg(b))), "R1", l2, ctx=(0,))
    l4 = s.ax(seq(meet(neg("bot"), neg(b)), neg(b)), "3a", A=neg("bot"), B=neg(b))
    l5 = s.rule(seq(meet(neg(a), neg(b)), neg(b)), "R4", l3, l4, ctx=(0, 0))
    l6 = s.rule(seq(neg(neg(b)), vee(a, b)), "R3", l5, ctx=(0,))
    l7 = dneg_in(s, b)
    l8 = s.rule(seq(meet(b, b), vee(a, b)), "R4", l7, l6, ctx=(0, 0))
    l9 = s.rule(f"{seq(b, meet(b, b))} || {seq(join(b, b), b)}", "Sp")
    return s.rule(f"{seq(b, vee(a, b))} || {seq(join(b, b), b)}", "R4", l9, l8, ctx=(0, 0))


def wedge_elim(s: Script, a, b) -> int:
    """b |- b*b || wedge(a, b) |- b"""
    l1 = s.ax(seq(a, "top"), "11b", A=a)
    l2 = s.rule(seq(opp("top"), opp(a)), "R3'", l1, ctx=(0,))
    l3 = s.rule(seq(join(opp("top"), opp(b)), join(opp(a), opp(b))), "R2", l2, ctx=(0,))
    l4 = s.ax(seq(opp(b), join(opp("top"), opp(b))), "3b", A=opp("top"), B=opp(b))
    l5 = s.rule(seq(opp(b), join(opp(a), opp(b))), "R4", l4, l3, ctx=(0, 0))
    l6 = s.rule(seq(wedge(a, b), opp(opp(b))), "R3'", l5, ctx=(0,))
    l7 = dopp_out(s, b)
    l8 = s.rule(seq(wedge(a, b), join(b, b)), "R4", l6, l7, ctx=(0, 0))
    l9 = s.rule(f"{seq(b, meet(b, b))} || {seq(join(b, b), b)}", "Sp")
    return s.rule(f"{seq(b, meet(b, b))} || {seq(wedge(a, b), b)}", "R4", l8, l9, ctx=(0, 1))


# catalog

A, B, C = "o1", "o2", "o3"


def _single(name, fn, *args) -> Derivation:
    s = Script(name)
    fn(s, *args)
    return s.derivation()


def _axiom_only(name, text, ident, **subst) -> Derivation:
    s = Script(name)
    s.ax(text, ident, **subst)
    return s.derivation()


def _r6_demo() -> Derivation:
    s = Script("R6-demo")
    l1 = s.premise(seq(A, B))
    l2 = s.premise(seq(A, C))
    l3 = s.rule(seq(meet(A, A), meet(B, A)), "R1", l1, ctx=(0,))
    l4 = s.rule(seq(meet(B, A), meet(B, C)), "R1'", l2, ctx=(0,))
    s.rule(seq(meet(A, A), meet(B, C)), "R4", l3, l4, ctx=(0, 0))
    return s.derivation()


def _r7_demo() -> Derivation:
    s = Script("R7-demo")
    l1 = s.premise(seq(B, A))
    l2 = s.premise(seq(C, A))
    l3 = s.rule(seq(join(B, C), join(A, C)), "R2", l1, ctx=(0,))
    l4 = s.rule(seq(join(A, C), join(A, A)), "R2'", l2, ctx=(0,))
    s.rule(seq(join(B, C), join(A, A)), "R4", l3, l4, ctx=(0, 0))
    return s.derivation()


def _r10() -> Derivation:
    """From a*!b |- a derive bot |- a*b."""
    a, b = A, B
    s = Script("R10")
    l1 = s.premise(seq(meet(a, neg(b)), a))
    l2 = s.rule(seq(meet(meet(a, neg(b)), b), meet(a, b)), "R1", l1, ctx=(0,))
    l3 = assoc_meet_in(s, a, neg(b), b)
    l4 = s.rule(seq(meet(a, meet(neg(b), b)), meet(a, b)), "R4", l3, l2, ctx=(0, 0))
    l5 = s.ax(seq("bot", meet(neg(b), b)), "11a", A=meet(neg(b), b))
    l6 = s.rule(seq(meet(a, "bot"), meet(a, meet(neg(b), b))), "R1'", l5, ctx=(0,))
    l7 = s.rule(seq(meet(a, "bot"), meet(a, b)), "R4", l6, l4, ctx=(0, 0))
    l8 = s.ax(seq("bot", meet(a, "bot")), "11a", A=meet(a, "bot"))
    s.rule(seq("bot", meet(a, b)), "R4", l8, l7, ctx=(0, 0))
    return s.derivation()


def _r11() -> Derivation:
    """From a |- a*!b derive a*b |- bot."""
    a, b = A, B
    s = Script("R11")
    l1 = s.premise(seq(a, meet(a, neg(b))))
    l2 = s.rule(seq(meet(a, b), meet(meet(a, neg(b)), b)), "R1", l1, ctx=(0,))
    l3 = assoc_meet_out(s, a, neg(b), b)
    l4 = s.rule(seq(meet(a, b), meet(a, meet(neg(b), b))), "R4", l2, l3, ctx=(0, 0))
    l5 = comm_meet(s, neg(b), b)
    l6 = s.ax(seq(meet(b, neg(b)), "bot"), "6a", A=b)
    l7 = s.rule(seq(meet(neg(b), b), "bot"), "R4", l5, l6, ctx=(0, 0))
    l8 = s.rule(seq(meet(a, meet(neg(b), b)), meet(a, "bot")), "R1'", l7, ctx=(0,))
    l9 = s.rule(seq(meet(a, b), meet(a, "bot")), "R4", l4, l8, ctx=(0, 0))
    l10 = s.ax(seq(meet(a, "bot"), "bot"), "3a", A=a, B="bot")
    s.rule(seq(meet(a, b), "bot"), "R4", l9, l10, ctx=(0, 0))
    return s.derivation()


def _bdia_below() -> Derivation:
    """bdia a1 |- a1 + a1"""
    g = "a1"
    s = Script("bdia-below")
    l1 = s.ax(seq(opp(g), f"bbox {opp(g)}"), "19b", A=opp(g))
    l2 = s.rule(seq(opp(f"bbox {opp(g)}"), opp(opp(g))), "R3'", l1, ctx=(0,))
    l3 = dopp_out(s, g)
    s.rule(seq(f"bdia {g}", join(g, g)), "R4", l2, l3, ctx=(0, 0))
    return s.derivation()


def _dia_above() -> Derivation:
    """o1 * o1 |- dia o1"""
    g = "o1"
    s = Script("dia-above")
    l1 = s.ax(seq(f"box {neg(g)}", neg(g)), "19a", A=neg(g))
    l2 = s.rule(seq(neg(neg(g)), neg(f"box {neg(g)}")), "R3", l1, ctx=(0,))
    l3 = dneg_in(s, g)
    s.rule(seq(meet(g, g), f"dia {g}"), "R4", l3, l2, ctx=(0, 0))
    return s.derivation()


def _r5_demo() -> Derivation:
    """o1 * o2 |- o1 * o2 by the order rule, with the four order premises."""
    a, b = meet(A, B), meet(A, B)
    s = Script("R5-demo")
    ls = [s.ax(seq(x, x), "1", A=x) for x in (meet(a, b), meet(a, a), join(a, b), join(b, b))]
    # premises 1..4 of R5 need the exact shapes; with a = b all four are axiom-1 instances
    s.rule(seq(a, b), "R5", *ls, ctx=(0, 0, 0, 0))
    return s.derivation()


def _external_demo() -> Derivation:
    s = Script("external-demo")
    l1 = s.rule(f"{seq(A, meet(A, A))} || {seq(join(A, A), A)}", "Sp")
    l2 = s.rule(f"{seq(join(A, A), A)} || {seq(A, meet(A, A))}", "EE", l1, ctx=(0, 1, 1))
    l3 = s.rule(f"{seq(join(A, A), A)} || {seq(A, meet(A, A))} || {seq(A, meet(A, A))}", "EW", l2)
    s.rule(f"{seq(join(A, A), A)} || {seq(A, meet(A, A))}", "EC", l3, ctx=(1, 1))
    return s.derivation()


def derived_rule_fixtures() -> dict[str, Derivation]:
    """Named derivations with the logic they are meant to be checked in."""
    return {name: d for name, (d, _) in catalog().items()}


def catalog() -> dict[str, tuple[Derivation, str]]:
    a, b, c = A, B, C
    pdbl = [
        _single("basic-1a", comm_meet, a, b),
        _single("basic-1b", comm_join, a, b),
        _single("basic-2a-left", assoc_meet_in, a, b, c),
        _single("basic-2a-right", assoc_meet_out, a, b, c),
        _single("basic-2b-left", assoc_join_in, a, b, c),
        _single("basic-2b-right", assoc_join_out, a, b, c),
        _single("basic-3a-left", idem_meet_drop, a, b),
        _single("basic-3a-right", idem_meet_add, a, b),
        _single("basic-3b-left", idem_join_drop, a, b),
        _single("basic-3b-right", idem_join_add, a, b),
        _single("basic-4a", neg_idem, a),
        _single("basic-4b", opp_idem, a),
        _single("basic-5a", absorb_meet, a, join(a, b)),
        _single("basic-5b", absorb_join, a, meet(a, b)),
        _single("basic-6a", absorb_meet, a, vee(a, b)),
        _single("basic-6b", absorb_join, a, wedge(a, b)),
        _axiom_only("basic-7a", seq("bot", meet(a, neg(a))), "11a", A=meet(a, neg(a))),
        _axiom_only("basic-7b", seq(join(a, opp(a)), "top"), "11b", A=join(a, opp(a))),
        _axiom_only("basic-8a", seq("bot", neg("top")), "11a", A=neg("top")),
        _axiom_only("basic-8b", seq(opp("bot"), "top"), "11b", A=opp("bot")),
        _axiom_only("basic-9a-left", seq(neg(neg(meet(a, a))), meet(a, a)), "7a-left", A=a, B=a),
        _axiom_only("basic-9a-right", seq(meet(a, a), neg(neg(meet(a, a)))), "7a-right", A=a, B=a),
        _axiom_only("basic-9b-left", seq(opp(opp(join(a, a))), join(a, a)), "7b-left", A=a, B=a),
        _axiom_only("basic-9b-right", seq(join(a, a), opp(opp(join(a, a)))), "7b-right", A=a, B=a),
        _single("basic-10a-left", dneg_out, a),
        _single("basic-10a-right", dneg_in, a),
        _single("basic-10b-left", dopp_out, a),
        _single("basic-10b-right", dopp_in, a),
        _single("basic-11a", vee_intro, a, b),
        _single("basic-11b", wedge_elim, a, b),
        _r6_demo(),
        _r7_demo(),
        _r10(),
        _r11(),
        _r5_demo(),
        _external_demo(),
    ]
    out = {d.name: (d, "PDBL") for d in pdbl}
    for d in (_bdia_below(), _dia_above()):
        out[d.name] = (d, "MPDBL4")
    return out


def data_dir() -> Path:
    return Path(str(resources.files("pdbl") / "data"))


def write_fixture_files(directory: Path | None = None) -> list[Path]:
    directory = directory or data_dir() / "derivations"
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, (d, logic) in catalog().items():
        p = directory / f"{name}.drv"
        p.write_text(f"# {name} (logic {logic})\n" + d.render().split("\n", 1)[1], encoding="utf-8")
        paths.append(p)
    return paths


def load_fixture_file(path) -> Derivation:
    text = Path(path).read_text(encoding="utf-8")
    return parse_derivation(text, name=Path(path).stem)


if __name__ == "__main__":
    for p in write_fixture_files():
        print(p)
