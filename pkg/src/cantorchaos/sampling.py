"""Seeded random generators for points, cylinders and indices."""

import random

from .core_space import Cylinder, Coordinate, FiberWord, Point, point_eval
from .uniformity import UIndex

LABELS = ("a", "b", "c", "d")


def random_bits(rng: random.Random, n: int) -> str:
    return "".join(rng.choice("01") for _ in range(n))


def random_word(rng, max_transient=4, max_period=4) -> FiberWord:
    t = random_bits(rng, rng.randint(0, max_transient))
    p = random_bits(rng, rng.randint(1, max_period))
    return FiberWord(t, p)


def random_point(rng, labels=LABELS, max_transient=4, max_period=4) -> Point:
    chosen = [f for f in labels if rng.random() < 0.5]
    return Point.of({f: random_word(rng, max_transient, max_period) for f in chosen})


def random_periodic_point(rng, labels=LABELS, max_period=4) -> Point:
    return random_point(rng, labels, max_transient=0, max_period=max_period)


def perturb(rng, p: Point, labels=LABELS, max_keep=5) -> Point:
    """A point that agrees with `p` on a random prefix of each fiber."""
    table = {}
    for f in labels:
        if rng.random() < 0.5:
            table[f] = p.word(f)
            continue
        keep = p.word(f).prefix(rng.randint(0, max_keep))
        w = random_word(rng)
        table[f] = FiberWord(keep + w.transient, w.period)
    return Point.of(table)


def random_cylinder(rng, labels=LABELS, max_depth=4, max_constraints=None) -> Cylinder:
    """A random cylinder over at most ``len(labels)`` fibers and depth ``max_depth``."""
    coords = [Coordinate(f, i) for f in labels for i in range(1, max_depth + 1)]
    if max_constraints is None:
        max_constraints = len(coords)
    n = rng.randint(0, min(max_constraints, len(coords)))
    return Cylinder.of({c: rng.randint(0, 1) for c in rng.sample(coords, n)})


def random_neighborhood(rng, x: Point, labels=LABELS, max_depth=4) -> Cylinder:
    """A random cylinder containing x."""
    coords = [Coordinate(f, i) for f in labels for i in range(1, max_depth + 1)]
    n = rng.randint(0, len(coords))
    return Cylinder.of({c: point_eval(x, c) for c in rng.sample(coords, n)})


def random_index(rng, labels=LABELS, max_k=5) -> UIndex:
    size = rng.randint(1, len(labels))
    return UIndex(frozenset(rng.sample(list(labels), size)), rng.randint(1, max_k))
