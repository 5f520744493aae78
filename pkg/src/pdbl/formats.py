"""Burmeister ``.cxt`` files and the Kripke-context extension with ``#R``/``#S`` sections."""
from __future__ import annotations

from pathlib import Path

from .context import FormalContext
from .kripke import BinaryRelation, KripkeContext


class FormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)


def _is_int(s: str) -> bool:
    return s.strip().isdigit()


def parse_cxt(text: str, start_line: int = 1) -> tuple[FormalContext, str | None]:
    """Parse a Burmeister context. Returns the context and the optional name line."""
    lines = text.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0

    def take(what: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(f"unexpected end of file, expected {what}", start_line + pos)
        line = lines[pos]
        pos += 1
        return line

    if take("'B'").strip() != "B":
        raise FormatError("first line must be 'B'", start_line)
    name = None
    # the name line is optional; without it the two counts are followed by a blank line
    if not (len(lines) > 3 and _is_int(lines[1]) and _is_int(lines[2]) and lines[3].strip() == ""):
        name = take("name line")
    counts = []
    for what in ("object count", "attribute count"):
        s = take(what)
        if not _is_int(s):
            raise FormatError(f"expected {what}, got {s!r}", start_line + pos - 1)
        counts.append(int(s))
    n_obj, n_att = counts
    if take("blank line").strip() != "":
        raise FormatError("expected blank line after counts", start_line + pos - 1)
    objs = [take("object name") for _ in range(n_obj)]
    atts = [take("attribute name") for _ in range(n_att)]
    rows = []
    for i in range(n_obj):
        row = take(f"incidence row for {objs[i]!r}")
        lineno = start_line + pos - 1
        if len(row) != n_att:
            raise FormatError(f"row has {len(row)} cells, expected {n_att}", lineno)
        cells = []
        for c in row:
            if c in "Xx":
                cells.append(True)
            elif c == ".":
                cells.append(False)
            else:
                raise FormatError(f"bad incidence character {c!r}", lineno)
        rows.append(tuple(cells))
    if pos != len(lines) and any(l.strip() for l in lines[pos:]):
        raise FormatError("trailing content after incidence rows", start_line + pos)
    try:
        ctx = FormalContext(tuple(objs), tuple(atts), tuple(rows))
    except ValueError as e:
        raise FormatError(str(e)) from None
    return ctx, name


def dump_cxt(ctx: FormalContext, name: str | None = None) -> str:
    out = ["B"]
    if name is not None:
        out.append(name)
    out += [str(ctx.n_objects), str(ctx.n_attributes), ""]
    out += list(ctx.object_names)
    out += list(ctx.attribute_names)
    out += ["".join("X" if c else "." for c in row) for row in ctx.incidence]
    return "\n".join(out) + "\n"


def parse_kripke(text: str) -> KripkeContext:
    """A ``.cxt`` block optionally followed by ``#R`` and ``#S`` sections of index pairs."""
    lines = text.replace("\r\n", "\n").split("\n")
    marks = [i for i, l in enumerate(lines) if l.strip() in ("#R", "#S")]
    cut = marks[0] if marks else len(lines)
    ctx, _ = parse_cxt("\n".join(lines[:cut]) + "\n")
    pairs = {"#R": [], "#S": []}
    section = None
    for i in range(cut, len(lines)):
        s = lines[i].strip()
        if not s:
            continue
        if s in pairs:
            if pairs[s]:
                raise FormatError(f"duplicate section {s}", i + 1)
            section = s
            continue
        parts = s.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected an index pair, got {s!r}", i + 1)
        pairs[section].append((int(parts[0]), int(parts[1])))
    try:
        R = BinaryRelation.from_pairs(ctx.n_objects, pairs["#R"])
        S = BinaryRelation.from_pairs(ctx.n_attributes, pairs["#S"])
    except ValueError as e:
        raise FormatError(str(e)) from None
    return KripkeContext(ctx, R, S)


def dump_kripke(kc: KripkeContext) -> str:
    out = dump_cxt(kc.base)
    out += "#R\n" + "".join(f"{i} {j}\n" for i, j in kc.obj_rel.pairs())
    out += "#S\n" + "".join(f"{i} {j}\n" for i, j in kc.attr_rel.pairs())
    return out


def load_context(path) -> KripkeContext:
    """Load either a plain ``.cxt`` (empty relations) or a Kripke-context file."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_kripke(text)
