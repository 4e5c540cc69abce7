"""Points, cylinder sets and the shift map on C = {0,1}^A.

The index set A is a disjoint union of countable fibers ``A_alpha =
{x_(alpha,1), x_(alpha,2), ...}``.  Fiber labels are arbitrary tokens and are
never enumerated; a point stores finitely many non-zero fibers, each as an
eventually periodic bit word.  The shift drops the first symbol of every fiber.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Union

RESERVED = set(":=,;|{}<>")


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"fiber label must be a nonempty string, got {label!r}")
    for ch in label:
        if ch in RESERVED or ch.isspace() or not ch.isprintable():
            raise ValueError(f"illegal character {ch!r} in fiber label {label!r}")
    return label


def _check_bits(s: str, what: str) -> None:
    if any(ch not in "01" for ch in s):
        raise ValueError(f"{what} must be a bit string, got {s!r}")


class Coordinate(NamedTuple):
    fiber: str
    pos: int

    def __str__(self):
        return f"{self.fiber}:{self.pos}"


def primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class FiberWord:
    """The infinite sequence ``transient . period . period . ...``."""

    transient: str
    period: str

    def __post_init__(self):
        _check_bits(self.transient, "transient")
        _check_bits(self.period, "period")
        if not self.period:
            raise ValueError("period must be nonempty")

    def __str__(self):
        return f"{self.transient}|{self.period}"

    def bit(self, pos: int) -> int:
        i = pos - 1
        t = self.transient
        if i < len(t):
            return int(t[i])
        return int(self.period[(i - len(t)) % len(self.period)])

    def prefix(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(1, n + 1))

    def canonical(self) -> FiberWord:
        # primitive period, then absorb trailing transient bits into the period
        t, p = self.transient, primitive_root(self.period)
        while t and t[-1] == p[-1]:
            p = p[-1] + p[:-1]
            t = t[:-1]
        return FiberWord(t, p)

    def is_canonical(self) -> bool:
        return self.canonical() == self

    def is_zero(self) -> bool:
        return "1" not in self.transient and "1" not in self.period

    def shift(self, m: int) -> FiberWord:
        t, p = self.transient, self.period
        if m <= len(t):
            return FiberWord(t[m:], p).canonical()
        r = (m - len(t)) % len(p)
        return FiberWord("", p[r:] + p[:r]).canonical()


ZERO_WORD = FiberWord("", "0")


@dataclass(frozen=True)
class Point:
    """A finitely described element of {0,1}^A.

    ``fibers`` is a sorted tuple of ``(label, FiberWord)``; fibers not listed
    are identically zero.  Construction always canonicalizes, so equality of
    points is equality of their tables.
    """

    fibers: tuple = ()

    def __post_init__(self):
        table = {}
        for label, word in self.fibers:
            check_label(label)
            if label in table:
                raise ValueError(f"duplicate fiber {label!r}")
            table[label] = word
        canon = tuple(
            (label, table[label].canonical())
            for label in sorted(table)
            if not table[label].is_zero()
        )
        object.__setattr__(self, "fibers", canon)

    @classmethod
    def of(cls, table: Mapping[str, Union[FiberWord, tuple]]) -> Point:
        items = []
        for label, word in table.items():
            if not isinstance(word, FiberWord):
                word = FiberWord(*word)
            items.append((label, word))
        return cls(tuple(items))

    @cached_property
    def table(self) -> dict:
        return dict(self.fibers)

    def word(self, fiber: str) -> FiberWord:
        return self.table.get(fiber, ZERO_WORD)

    @property
    def support(self) -> tuple:
        return tuple(label for label, _ in self.fibers)

    def __str__(self):
        if not self.fibers:
            return "zero"
        return ";".join(f"{label}={word}" for label, word in self.fibers)

    def __repr__(self):
        return f"Point({str(self)!r})"


ZERO = Point()


def point_eval(p: Point, c: Coordinate) -> int:
    return p.word(c[0]).bit(c[1])


def shift_point(p: Point, m: int = 1) -> Point:
    if m < 0:
        raise ValueError("shift amount must be nonnegative")
    if m == 0:
        return p
    return Point(tuple((label, word.shift(m)) for label, word in p.fibers))


def canonicalize_point(p: Union[Point, Mapping[str, FiberWord]]) -> Point:
    """Canonical representative of a point or of a raw fiber table."""
    if isinstance(p, Point):
        return Point(p.fibers)
    return Point.of(p)


def primitive_period(p: Point) -> Optional[int]:
    """Least n >= 1 with shift_point(p, n) == p, or None if p is not periodic."""
    n = 1
    for _, word in p.fibers:
        if word.transient:
            return None
        n = math.lcm(n, len(word.period))
    return n


class Orbit(NamedTuple):
    points: list
    closed: bool


def orbit(p: Point, bound: int) -> Orbit:
    """Forward orbit p, sp, s^2 p, ... up to the first repetition or `bound` points."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    seen = set()
    points = []
    cur = p
    for _ in range(bound):
        if cur in seen:
            return Orbit(points, True)
        seen.add(cur)
        points.append(cur)
        cur = shift_point(cur, 1)
    return Orbit(points, cur in seen)


@dataclass(frozen=True)
class Cylinder:
    """The basic open set N(B, phi) given by finitely many coordinate constraints.

    The empty constraint set is the whole space.  ``VOID`` is the empty region
    and only ever appears as the result of an intersection.
    """

    items: tuple = ()
    void: bool = field(default=False, compare=True)

    def __post_init__(self):
        if self.void:
            if self.items:
                raise ValueError("VOID carries no constraints")
            return
        seen = {}
        for coord, bit in self.items:
            fiber, pos = coord
            check_label(fiber)
            if not isinstance(pos, int) or pos < 1:
                raise ValueError(f"positions are 1-based, got {pos!r}")
            if bit not in (0, 1):
                raise ValueError(f"constraint bit must be 0 or 1, got {bit!r}")
            key = Coordinate(fiber, pos)
            if key in seen:
                raise ValueError(f"duplicate coordinate {key}")
            seen[key] = bit
        object.__setattr__(self, "items", tuple(sorted(seen.items())))

    @classmethod
    def of(cls, constraints: Union[Mapping, Iterable] = ()) -> Cylinder:
        if isinstance(constraints, Mapping):
            constraints = constraints.items()
        return cls(tuple((Coordinate(*coord), bit) for coord, bit in constraints))

    @cached_property
    def constraints(self) -> dict:
        return dict(self.items)

    @property
    def fibers(self) -> frozenset:
        return frozenset(coord.fiber for coord, _ in self.items)

    @property
    def is_whole(self) -> bool:
        return not self.void and not self.items

    def __len__(self):
        return len(self.items)

    def __str__(self):
        if self.void:
            return "VOID"
        return "{" + ",".join(f"{c}={b}" for c, b in self.items) + "}"

    def __repr__(self):
        return f"Cylinder({str(self)!r})"


VOID = Cylinder(void=True)
WHOLE = Cylinder()


def _require_nonvoid(*cyls: Cylinder) -> None:
    for c in cyls:
        if c.void:
            raise ValueError("operation is undefined on VOID")


def cylinder_intersect(c1: Cylinder, c2: Cylinder) -> Cylinder:
    if c1.void or c2.void:
        return VOID
    merged = dict(c1.constraints)
    for coord, bit in c2.items:
        if merged.setdefault(coord, bit) != bit:
            return VOID
    return Cylinder.of(merged)


def cylinder_preimage(c: Cylinder, m: int = 1) -> Cylinder:
    """sigma^{-m}(c): every constraint moves m positions deeper."""
    _require_nonvoid(c)
    return Cylinder(tuple((Coordinate(f, i + m), b) for (f, i), b in c.items))


def cylinder_image(c: Cylinder, m: int = 1) -> Cylinder:
    # exact because sigma is onto and coordinates are independent
    _require_nonvoid(c)
    return Cylinder(tuple((Coordinate(f, i - m), b) for (f, i), b in c.items if i > m))


def k_block(fibers: Iterable[str], k: int) -> list:
    """The coordinate block K(S, k) in lexicographic order."""
    return [Coordinate(f, i) for f in sorted(fibers) for i in range(1, k + 1)]


def normalize_cylinder(c: Cylinder, designated: Optional[str] = None):
    """Pick the canonical K(S, k) basis cylinder inside `c`.

    Returns ``(S, k, psi)`` where psi constrains every coordinate of K(S, k),
    agreeing with `c` where `c` speaks and 0 elsewhere.  The whole space needs
    a designated fiber to anchor S and yields K({designated}, 1) with bit 0.
    """
    _require_nonvoid(c)
    if c.is_whole:
        if designated is None:
            raise ValueError("whole-space cylinder needs a designated fiber")
        check_label(designated)
        return frozenset([designated]), 1, Cylinder.of({(designated, 1): 0})
    fibers = c.fibers
    k = max(coord.pos for coord, _ in c.items)
    cons = c.constraints
    psi = Cylinder.of({coord: cons.get(coord, 0) for coord in k_block(fibers, k)})
    return fibers, k, psi


def membership(p: Point, c: Cylinder) -> bool:
    if c.void:
        return False
    return all(point_eval(p, coord) == bit for coord, bit in c.items)


def inclusion(c1: Cylinder, c2: Cylinder) -> bool:
    """Whether c1 is a subset of c2."""
    if c1.void:
        return True
    if c2.void:
        return False
    cons = c1.constraints
    return all(cons.get(coord) == bit for coord, bit in c2.items)


def cylinder_query(kind: str, *args) -> bool:
    if kind == "membership":
        return membership(*args)
    if kind == "inclusion":
        return inclusion(*args)
    raise ValueError(f"unknown query kind {kind!r}")


def cylinder_point(c: Cylinder) -> Point:
    """The zero-fill representative: the constrained bits, 0 everywhere else."""
    _require_nonvoid(c)
    depth = {}
    for (f, i), _ in c.items:
        depth[f] = max(depth.get(f, 0), i)
    cons = c.constraints
    table = {
        f: FiberWord("".join(str(cons.get((f, i), 0)) for i in range(1, k + 1)), "0")
        for f, k in depth.items()
    }
    return Point.of(table)
