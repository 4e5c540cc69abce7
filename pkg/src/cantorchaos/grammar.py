"""Text forms of points, cylinders, indices and subshifts.

    word     := bit* "|" bit+
    point    := "zero" | fiber "=" word (";" fiber "=" word)*
    cylinder := "{}" | "{" fiber ":" pos "=" bit ("," fiber ":" pos "=" bit)* "}"
    index    := "<{" fiber ("," fiber)* "}," k ">"
    sft      := "alphabet=" n "; forbid=" word ("," word)*

Printing is ``str()`` on the value; parse(str(v)) == v for canonical values.
"""

from __future__ import annotations

from .core_space import RESERVED, Coordinate, Cylinder, FiberWord, Point
from .sft_oracle import SftSystem
from .uniformity import UIndex


class ParseError(ValueError):
    def __init__(self, msg, text, offset):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.column = col


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, msg, at=None):
        return ParseError(msg, self.text, self.i if at is None else at)

    def peek(self):
        return self.text[self.i] if self.i < len(self.text) else ""

    def at_end(self):
        return self.i >= len(self.text)

    def skip_ws(self):
        while self.peek().isspace() and self.peek():
            self.i += 1

    def expect(self, lit):
        if not self.text.startswith(lit, self.i):
            found = self.peek() or "end of input"
            raise self.error(f"expected {lit!r}, found {found!r}")
        self.i += len(lit)

    def fiber(self):
        start = self.i
        while self.peek() and self.peek() not in RESERVED and not self.peek().isspace():
            if not self.peek().isprintable():
                raise self.error(f"unprintable character {self.peek()!r} in fiber label")
            self.i += 1
        if self.i == start:
            raise self.error("expected a fiber label")
        return self.text[start : self.i]

    def bits(self):
        start = self.i
        while self.peek() in ("0", "1") and self.peek():
            self.i += 1
        return self.text[start : self.i]

    def digits(self):
        start = self.i
        while self.peek().isdigit() and self.peek():
            self.i += 1
        if self.i == start:
            raise self.error("expected a number")
        return start, int(self.text[start : self.i])

    def finish(self):
        self.skip_ws()
        if not self.at_end():
            raise self.error(f"unexpected trailing input {self.text[self.i:]!r}")


def parse_word(sc: _Scanner) -> FiberWord:
    transient = sc.bits()
    sc.expect("|")
    start = sc.i
    period = sc.bits()
    if not period:
        raise sc.error("period must be a nonempty bit string", start)
    return FiberWord(transient, period)


def parse_point(text: str) -> Point:
    sc = _Scanner(text)
    sc.skip_ws()
    if text.strip() == "zero":
        return Point()
    table = {}
    while True:
        start = sc.i
        label = sc.fiber()
        if label in table:
            raise sc.error(f"duplicate fiber {label!r}", start)
        sc.expect("=")
        table[label] = parse_word(sc)
        if sc.peek() != ";":
            break
        sc.i += 1
        sc.skip_ws()
    sc.finish()
    return Point.of(table)


def parse_cylinder(text: str) -> Cylinder:
    sc = _Scanner(text)
    sc.skip_ws()
    sc.expect("{")
    cons = {}
    if sc.peek() == "}":
        sc.i += 1
        sc.finish()
        return Cylinder()
    while True:
        start = sc.i
        label = sc.fiber()
        sc.expect(":")
        pos_at, pos = sc.digits()
        if pos < 1:
            raise sc.error("positions are 1-based", pos_at)
        sc.expect("=")
        bit_at = sc.i
        bit = sc.bits()
        if len(bit) != 1:
            raise sc.error("expected a single bit", bit_at)
        coord = Coordinate(label, pos)
        if coord in cons:
            raise sc.error(f"duplicate coordinate {coord}", start)
        cons[coord] = int(bit)
        if sc.peek() == ",":
            sc.i += 1
            sc.skip_ws()
            continue
        sc.expect("}")
        break
    sc.finish()
    return Cylinder.of(cons)


def parse_index(text: str) -> UIndex:
    sc = _Scanner(text)
    sc.skip_ws()
    sc.expect("<{")
    fibers = []
    while True:
        start = sc.i
        label = sc.fiber()
        if label in fibers:
            raise sc.error(f"duplicate fiber {label!r}", start)
        fibers.append(label)
        if sc.peek() == ",":
            sc.i += 1
            sc.skip_ws()
            continue
        break
    sc.expect("},")
    k_at, k = sc.digits()
    if k < 1:
        raise sc.error("index depth must be >= 1", k_at)
    sc.expect(">")
    sc.finish()
    return UIndex(frozenset(fibers), k)


def parse_sft(text: str) -> SftSystem:
    alphabet, forbidden = 2, set()
    seen = set()
    offset = 0
    for part in text.split(";"):
        at = offset + len(part) - len(part.lstrip())
        offset += len(part) + 1
        if not part.strip():
            continue
        key, eq, value = part.strip().partition("=")
        key = key.strip()
        if not eq or key not in ("alphabet", "forbid"):
            raise ParseError(f"expected 'alphabet=' or 'forbid=', found {part.strip()!r}", text, at)
        if key in seen:
            raise ParseError(f"duplicate field {key!r}", text, at)
        seen.add(key)
        value = value.strip()
        if key == "alphabet":
            if not value.isdigit():
                raise ParseError(f"alphabet size must be an integer, got {value!r}", text, at)
            alphabet = int(value)
        else:
            words = [w.strip() for w in value.split(",")] if value else []
            if any(not w for w in words):
                raise ParseError("empty forbidden word", text, at)
            forbidden.update(words)
    try:
        return SftSystem(frozenset(forbidden), alphabet)
    except ValueError as e:
        raise ParseError(str(e), text, 0) from None


PARSERS = {
    "point": parse_point,
    "cylinder": parse_cylinder,
    "index": parse_index,
    "sft": parse_sft,
}


def parse_value(kind: str, text: str):
    try:
        parser = PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown value kind {kind!r}") from None
    try:
        return parser(text)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e), text, 0) from None
