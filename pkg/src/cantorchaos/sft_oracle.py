"""Brute-force ground truth on one-sided subshifts of finite type.

Words are strings over the digits ``0 .. alphabet-1``.  The subshift studied is
the recurrent part of the window graph (vertices surviving iterated removal of
sources and sinks); its cylinders are the open sets that transitivity, density
of periodic points and shared periodic orbits quantify over.  Transitivity is
decided on the graph, density and orbit sharing by exhaustive search over
periodic words, so the three verdicts come from independent routes.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from .core_space import ZERO_WORD, FiberWord, Point

READING = (
    "open sets are the cylinders of the recurrent subshift; density and orbit "
    "sharing are bounded by depth and period_bound"
)


@dataclass(frozen=True)
class SftSystem:
    forbidden: frozenset = frozenset()
    alphabet: int = 2

    def __post_init__(self):
        if not isinstance(self.alphabet, int) or not 2 <= self.alphabet <= 10:
            raise ValueError(f"alphabet size must be in 2..10, got {self.alphabet!r}")
        forb = frozenset(self.forbidden)
        for w in forb:
            if not w:
                raise ValueError("forbidden words must be nonempty")
            if any(not ch.isdigit() or int(ch) >= self.alphabet for ch in w):
                raise ValueError(f"forbidden word {w!r} uses symbols outside the alphabet")
        object.__setattr__(self, "forbidden", forb)

    @property
    def symbols(self) -> str:
        return "0123456789"[: self.alphabet]

    @property
    def max_forbidden_len(self) -> int:
        return max((len(w) for w in self.forbidden), default=0)

    @property
    def window(self) -> int:
        return max(1, self.max_forbidden_len - 1)

    def allows(self, word: str) -> bool:
        return not any(f in word for f in self.forbidden)

    def __str__(self):
        forb = ",".join(sorted(self.forbidden, key=lambda w: (len(w), w)))
        return f"alphabet={self.alphabet}; forbid={forb}"


FULL_SHIFT = SftSystem()


def allowed_words(sys: SftSystem, n: int) -> list:
    """Length-n words with no forbidden factor, in lexicographic order."""
    longest = sys.max_forbidden_len
    words = [""]
    for _ in range(n):
        # a new factor can only end at the appended symbol
        words = [
            w + a for w in words for a in sys.symbols if sys.allows((w + a)[-longest:] if longest else "")
        ]
    return words


class WindowGraph(NamedTuple):
    vertices: list
    edges: dict  # vertex -> list of successor vertices


def window_graph(sys: SftSystem, order: Optional[int] = None) -> WindowGraph:
    order = sys.window if order is None else order
    if order < max(1, sys.max_forbidden_len - 1):
        raise ValueError(f"window order {order} too small for {sys}")
    verts = allowed_words(sys, order)
    vset = set(verts)
    edges = {
        u: [u[1:] + a for a in sys.symbols if u[1:] + a in vset and sys.allows(u + a)]
        for u in verts
    }
    return WindowGraph(verts, edges)


def essential_graph(g: WindowGraph) -> WindowGraph:
    """Iteratively strip vertices with no successor or no predecessor."""
    alive = set(g.vertices)
    changed = True
    while changed:
        changed = False
        has_pred = {v for u in alive for v in g.edges[u] if v in alive}
        for u in list(alive):
            if u not in has_pred or not any(v in alive for v in g.edges[u]):
                alive.discard(u)
                changed = True
    verts = [v for v in g.vertices if v in alive]
    return WindowGraph(verts, {u: [v for v in g.edges[u] if v in alive] for u in verts})


def _reach(edges: dict, start) -> set:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in edges[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_empty(sys: SftSystem) -> bool:
    return not essential_graph(window_graph(sys)).vertices


def is_transitive(sys: SftSystem, order: Optional[int] = None) -> bool:
    """Strong connectivity of the essential window graph; False when it is empty."""
    g = essential_graph(window_graph(sys, order))
    if not g.vertices:
        return False
    root = g.vertices[0]
    if len(_reach(g.edges, root)) != len(g.vertices):
        return False
    back = {u: [] for u in g.vertices}
    for u in g.vertices:
        for v in g.edges[u]:
            back[v].append(u)
    return len(_reach(back, root)) == len(g.vertices)


def language_words(sys: SftSystem, n: int) -> list:
    """Words of length n that occur in points of the recurrent subshift."""
    g = essential_graph(window_graph(sys))
    L = sys.window
    if n <= L:
        return sorted({v[:n] for v in g.vertices})
    ess = set(g.vertices)
    out = []
    for w in allowed_words(sys, n):
        windows = [w[i : i + L] for i in range(n - L + 1)]
        if all(x in ess for x in windows) and all(
            b in g.edges[a] for a, b in zip(windows, windows[1:])
        ):
            out.append(w)
    return out


def periodic_extension(word: str, length: int) -> str:
    return (word * (length // len(word) + 1))[:length]


def is_periodic_word(sys: SftSystem, word: str) -> bool:
    """Whether the bi-directional periodic extension of `word` avoids every forbidden word."""
    n = len(word)
    reps = max(2, 1 + math.ceil(max(sys.max_forbidden_len - 1, 0) / n))
    return sys.allows(word * reps)


def periodic_points(sys: SftSystem, n: int):
    """Points fixed by sigma^n, as their length-n repeating blocks: (count, words)."""
    words = [w for w in allowed_words(sys, n) if is_periodic_word(sys, w)]
    return len(words), words


def transfer_matrix(sys: SftSystem) -> np.ndarray:
    g = window_graph(sys)
    index = {v: i for i, v in enumerate(g.vertices)}
    A = np.zeros((len(g.vertices), len(g.vertices)), dtype=object)
    for u, succ in g.edges.items():
        for v in succ:
            A[index[u], index[v]] = 1
    return A


def transfer_trace(sys: SftSystem, n: int) -> int:
    A = transfer_matrix(sys)
    if A.size == 0:
        return 0
    return int(np.trace(np.linalg.matrix_power(A, n)))


class Def7Hit(NamedTuple):
    word: str
    t_u: int
    t_v: int


def _hit_time(word: str, target: str) -> Optional[int]:
    for t in range(len(word)):
        rotated = word[t:] + word[:t]
        if periodic_extension(rotated, len(target)) == target:
            return t
    return None


def def7_check(sys: SftSystem, u: str, v: str, period_bound: int) -> Optional[Def7Hit]:
    """Search periodic points of period <= period_bound whose orbit enters [u] and [v].

    Returns the first hit (shortest period, then lexicographic) or None when the
    bounded search is exhausted.
    """
    for n in range(1, period_bound + 1):
        for w in periodic_points(sys, n)[1]:
            tu = _hit_time(w, u)
            if tu is None:
                continue
            tv = _hit_time(w, v)
            if tv is not None:
                return Def7Hit(w, tu, tv)
    return None


@dataclass
class OracleReport:
    system: str
    transitive: bool
    periodic_dense_to_depth: bool
    def7_to_depth: bool
    depth: int
    period_bound: int
    empty: bool = False
    counterexample: Optional[tuple] = None
    reading: str = READING

    @property
    def equivalence_holds(self) -> bool:
        return self.def7_to_depth == (self.transitive and self.periodic_dense_to_depth)

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "transitive": self.transitive,
            "periodic_dense_to_depth": self.periodic_dense_to_depth,
            "def7_to_depth": self.def7_to_depth,
            "equivalence_holds": self.equivalence_holds,
            "discrepancy": not self.equivalence_holds,
            "empty": self.empty,
            "depth": self.depth,
            "period_bound": self.period_bound,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "reading": self.reading,
        }


def _orbit_hits(sys: SftSystem, depth: int, period_bound: int) -> dict:
    """word -> bitmask over periodic blocks whose orbit enters the word's cylinder."""
    hits = {}
    idx = 0
    for n in range(1, period_bound + 1):
        for w in periodic_points(sys, n)[1]:
            if len(w) > 1 and any(w == w[:d] * (n // d) for d in range(1, n) if n % d == 0):
                continue  # same orbit as a shorter block
            bit = 1 << idx
            idx += 1
            for t in range(n):
                ext = periodic_extension(w[t:] + w[:t], depth)
                for ell in range(1, depth + 1):
                    hits[ext[:ell]] = hits.get(ext[:ell], 0) | bit
    return hits


def proposition_crosscheck(sys: SftSystem, depth: int = 5, period_bound: int = 10) -> OracleReport:
    name = str(sys)
    if is_empty(sys):
        # the definitions presuppose a nonvoid space
        return OracleReport(name, False, False, False, depth, period_bound, empty=True)
    transitive = is_transitive(sys)
    words = [w for n in range(1, depth + 1) for w in language_words(sys, n)]
    hits = _orbit_hits(sys, depth, period_bound)
    masks = [hits.get(w, 0) for w in words]

    counterexample = None
    dense = True
    for w, mask in zip(words, masks):
        if not mask:
            dense = False
            counterexample = (w, w)
            break
    def7 = True
    for (u, mu), (v, mv) in itertools.product(zip(words, masks), repeat=2):
        if not mu & mv:
            def7 = False
            counterexample = counterexample or (u, v)
            break
    return OracleReport(name, transitive, dense, def7, depth, period_bound, counterexample=counterexample)


def systems_with_forbidden_len(length: int, alphabet: int = 2) -> list:
    """Every system whose forbidden set is a subset of the words of one length."""
    pool = ["".join(t) for t in itertools.product("0123456789"[:alphabet], repeat=length)]
    return [
        SftSystem(frozenset(c), alphabet)
        for r in range(len(pool) + 1)
        for c in itertools.combinations(pool, r)
    ]


def proposition_sweep(length: int = 2, depth: int = 5, period_bound: int = 10, alphabet: int = 2):
    return [proposition_crosscheck(s, depth, period_bound) for s in systems_with_forbidden_len(length, alphabet)]


# odometer: add one with carry, least significant bit first


def odometer_word(w: FiberWord) -> FiberWord:
    w = w.canonical()
    if w == FiberWord("", "1"):
        return ZERO_WORD
    s = w.prefix(len(w.transient) + len(w.period))
    j = s.index("0")
    return FiberWord("0" * j + "1" + s[j + 1 :], w.period).canonical()


def odometer_inverse_word(w: FiberWord) -> FiberWord:
    w = w.canonical()
    if w.is_zero():
        return FiberWord("", "1")
    s = w.prefix(len(w.transient) + len(w.period))
    j = s.index("1")
    return FiberWord("1" * j + "0" + s[j + 1 :], w.period).canonical()


def odometer(p: Point, fiber: str = "a") -> Point:
    table = dict(p.table)
    table[fiber] = odometer_word(p.word(fiber))
    return Point.of(table)


def odometer_inverse(p: Point, fiber: str = "a") -> Point:
    table = dict(p.table)
    table[fiber] = odometer_inverse_word(p.word(fiber))
    return Point.of(table)


def odometer_prefix_cycle(depth: int, fiber: str = "a") -> list:
    """Depth-`depth` prefixes visited by the orbit of zero, one per step."""
    x = Point()
    out = []
    for _ in range(2**depth):
        out.append(x.word(fiber).prefix(depth))
        x = odometer(x, fiber)
    return out


def odometer_cylinder_transitive(depth: int, fiber: str = "a") -> bool:
    """Every depth-d cylinder reaches every other under positive iterates.

    Checked by evaluation: start from u.0^inf and run 2^d steps collecting the
    prefixes seen at times 1..2^d.
    """
    total = 2**depth
    for u in ("".join(t) for t in itertools.product("01", repeat=depth)):
        x = Point.of({fiber: FiberWord(u, "0")})
        seen = set()
        for _ in range(total):
            x = odometer(x, fiber)
            seen.add(x.word(fiber).prefix(depth))
        if len(seen) != total:
            return False
    return True


def odometer_periodic_sample(samples: int, period_bound: int, seed: int = 0, fiber: str = "a"):
    """Sample eventually periodic single-fiber points; return those that recur
    within period_bound steps (expected empty) and those breaking invertibility."""
    from .sampling import random_point

    rng = random.Random(seed)
    periodic, not_bijective = [], []
    for _ in range(samples):
        x = random_point(rng, labels=(fiber,), max_transient=6, max_period=5)
        if odometer_inverse(odometer(x, fiber), fiber) != x:
            not_bijective.append(str(x))
        y = x
        for n in range(1, period_bound + 1):
            y = odometer(y, fiber)
            if y == x:
                periodic.append((str(x), n))
                break
    return periodic, not_bijective


def remark_demos(depth: int = 6, period_bound: int = 12, samples: int = 200, seed: int = 0) -> dict:
    """Discrete analogues of transitivity and dense periodic points failing independently."""
    frozen = proposition_crosscheck(SftSystem(frozenset({"01", "10"})), depth, period_bound)
    periodic, not_bijective = odometer_periodic_sample(samples, period_bound, seed)
    odo_transitive = odometer_cylinder_transitive(depth)
    dense_not_transitive = frozen.periodic_dense_to_depth and not frozen.transitive
    transitive_no_periodic = odo_transitive and not periodic
    return {
        "dense_without_transitivity": {
            "system": frozen.system,
            "periodic_dense": frozen.periodic_dense_to_depth,
            "transitive": frozen.transitive,
            "holds": dense_not_transitive,
        },
        "transitive_without_periodic_points": {
            "map": "binary odometer (discrete analogue of an irrational rotation)",
            "depth": depth,
            "prefix_cycle_depth2": odometer_prefix_cycle(2),
            "cylinder_transitive": odo_transitive,
            "samples": samples,
            "period_bound": period_bound,
            "periodic_found": [list(x) for x in periodic],
            "bijective_on_sample": not not_bijective,
            "holds": transitive_no_periodic and not not_bijective,
        },
        "ok": dense_not_transitive and transitive_no_periodic and not not_bijective,
    }
