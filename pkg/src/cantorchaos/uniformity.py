"""The coordinate-generated uniformity on C.

An index ``(S, k)`` names the entourage "agree on the first k positions of
every fiber in S".  Balls are cylinders, the entourages are equivalence
relations, and the indices are directed by componentwise refinement.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core_space import (
    VOID,
    Cylinder,
    Point,
    check_label,
    cylinder_intersect,
    inclusion,
    k_block,
    membership,
    point_eval,
)


@dataclass(frozen=True)
class UIndex:
    fibers: frozenset
    k: int

    def __post_init__(self):
        fibers = frozenset(self.fibers)
        if not fibers:
            raise ValueError("index needs at least one fiber")
        for f in fibers:
            check_label(f)
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"index depth must be >= 1, got {self.k!r}")
        object.__setattr__(self, "fibers", fibers)

    def __str__(self):
        return "<{" + ",".join(sorted(self.fibers)) + "}," + str(self.k) + ">"

    def __repr__(self):
        return f"UIndex({str(self)!r})"

    @property
    def block(self) -> list:
        return k_block(self.fibers, self.k)


def ball(idx: UIndex, p: Point) -> Cylinder:
    """V_idx(p): the cylinder pinning p's bits on K(S, k)."""
    return Cylinder(tuple((c, point_eval(p, c)) for c in idx.block))


def relates(idx: UIndex, p: Point, q: Point) -> bool:
    return all(p.word(f).prefix(idx.k) == q.word(f).prefix(idx.k) for f in idx.fibers)


def index_join(i1: UIndex, i2: UIndex) -> UIndex:
    return UIndex(i1.fibers | i2.fibers, max(i1.k, i2.k))


def index_leq(i1: UIndex, i2: UIndex) -> bool:
    """True when i1 refines i2, i.e. i1 >= i2 in the directing order."""
    return i1.fibers >= i2.fibers and i1.k >= i2.k


def separating_index(p: Point, q: Point) -> UIndex:
    """The single-fiber index at the least coordinate where p and q differ."""
    for f in sorted(set(p.support) | set(q.support)):
        w1, w2 = p.word(f), q.word(f)
        horizon = (
            len(w1.transient) + len(w2.transient) + math.lcm(len(w1.period), len(w2.period))
        )
        for i in range(1, horizon + 1):
            if w1.bit(i) != w2.bit(i):
                return UIndex(frozenset([f]), i)
    raise ValueError(f"points are equal, nothing separates {p} from itself")


@dataclass
class AxiomReport:
    axiom: str
    samples: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "samples": self.samples,
            "passed": self.passed,
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class SampleSpec:
    instances: int = 1000
    seed: int = 7


AXIOMS = (
    "UNS1", "UNS2", "UNS3", "UNS4", "UNS5",
    "ENT1", "ENT2", "ENT3", "ENT4", "ENT5",
)
MAX_FAILURES = 10


def uns_axioms_check(
    spec: SampleSpec = SampleSpec(),
    leq: Callable[[UIndex, UIndex], bool] = index_leq,
    join: Callable[[UIndex, UIndex], UIndex] = index_join,
    labels: Optional[tuple] = None,
) -> list:
    """Sampled checks of the neighborhood-system and entourage axioms.

    `leq` and `join` are injectable so the harness can be pointed at a broken
    order and shown to notice.  UNS(4) and UNS(5) are checked with beta = alpha,
    which is enough because every entourage here is an equivalence relation.
    """
    from . import sampling

    labels = labels or sampling.LABELS
    rng = random.Random(spec.seed)
    reports = {name: AxiomReport(name) for name in AXIOMS}

    def record(name, ok, desc):
        rep = reports[name]
        rep.samples += 1
        if not ok and len(rep.failures) < MAX_FAILURES:
            rep.failures.append(desc())

    for _ in range(spec.instances):
        a = sampling.random_index(rng, labels)
        b = sampling.random_index(rng, labels)
        x = sampling.random_point(rng, labels)
        y = sampling.perturb(rng, x, labels)
        z = sampling.perturb(rng, y, labels)
        j = join(a, b)

        record("UNS1", membership(x, ball(a, x)), lambda: f"{x} not in V{a}({x})")
        record(
            "UNS2",
            leq(j, a) and leq(j, b),
            lambda: f"join {j} of {a},{b} is not an upper bound",
        )
        for fine, coarse in ((a, b), (b, a), (j, a), (a, j), (j, b), (b, j)):
            if leq(fine, coarse):
                record(
                    "UNS3",
                    inclusion(ball(fine, x), ball(coarse, x)),
                    lambda: f"{fine} >= {coarse} but V{fine}({x}) not inside V{coarse}({x})",
                )
        # UNS4 with beta = alpha: x in V(y) implies y in V(x)
        if membership(x, ball(a, y)):
            record("UNS4", membership(y, ball(a, x)), lambda: f"asymmetry at {a}: {x}, {y}")
        # UNS5 with beta = alpha: y in V(x), z in V(y) implies z in V(x)
        if membership(y, ball(a, x)) and membership(z, ball(a, y)):
            record("UNS5", membership(z, ball(a, x)), lambda: f"intransitive at {a}: {x},{y},{z}")

        record("ENT1", relates(a, x, x), lambda: f"diagonal ({x},{x}) missing from E{a}")
        if relates(a, x, y):
            record("ENT2", relates(a, y, x), lambda: f"E{a} not symmetric on {x},{y}")
        if relates(a, x, y) and relates(a, y, z):
            record("ENT3", relates(a, x, z), lambda: f"E{a} o E{a} not inside E{a}: {x},{y},{z}")
        if relates(j, x, y):
            record(
                "ENT4",
                relates(a, x, y) and relates(b, x, y),
                lambda: f"E{j} not inside E{a} cap E{b} at {x},{y}",
            )
        if leq(j, a) and relates(j, x, z):
            record("ENT5", relates(a, x, z), lambda: f"E{j} not inside coarser E{a} at {x},{z}")
        # balls are equivalence classes: equal or disjoint
        bx, by = ball(a, x), ball(a, y)
        if not relates(a, x, y):
            record("ENT3", cylinder_intersect(bx, by) == VOID, lambda: f"balls overlap: {x},{y}")

    return [reports[name] for name in AXIOMS]
