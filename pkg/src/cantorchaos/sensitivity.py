"""Constructive sensitive dependence for the shift on C.

The sensitivity index is computed from a fixed pair of periodic points before
any input point is seen, which is what makes it uniform in x.  For each x the
pipeline then builds a nearby point whose orbit is forced into a ball disjoint
from x's, and falls back on a periodic point of x's ball when x itself
follows it there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chaos_witness import periodic_point_in, transitivity_witness
from .core_space import (
    ZERO,
    Cylinder,
    FiberWord,
    Point,
    VOID,
    check_label,
    cylinder_intersect,
    cylinder_point,
    cylinder_preimage,
    membership,
    orbit,
    primitive_period,
    shift_point,
)
from .uniformity import UIndex, ball, index_join, relates, separating_index


@dataclass(frozen=True)
class SensitivityConfig:
    designated: str = "a"

    def __post_init__(self):
        check_label(self.designated)


@dataclass(frozen=True)
class SensitivityWitness:
    alpha: UIndex
    q: Point
    n: int
    chain: tuple
    U: Cylinder
    p: Point
    k: int
    W: Cylinder
    y: Point
    a: int
    b: int
    m: int
    chosen_label: str
    chosen: Point

    def to_json(self):
        return {
            "alpha": str(self.alpha),
            "q": str(self.q),
            "n": self.n,
            "chain": [str(c) for c in self.chain],
            "U": str(self.U),
            "p": str(self.p),
            "k": self.k,
            "W": str(self.W),
            "y": str(self.y),
            "a": self.a,
            "b": self.b,
            "m": self.m,
            "chosen_label": self.chosen_label,
            "chosen": str(self.chosen),
        }


def full_orbit(p: Point) -> list:
    period = primitive_period(p)
    if period is None:
        raise ValueError(f"{p} is not periodic")
    return orbit(p, period).points


def canonical_pair_and_eta(cfg: SensitivityConfig = SensitivityConfig()):
    """The fixed periodic pair r = zero, s = alternating on the designated fiber,
    and an index eta whose balls around their orbits are pairwise disjoint."""
    r = ZERO
    s = Point.of({cfg.designated: FiberWord("", "10")})
    eta = None
    for u in full_orbit(r):
        for v in full_orbit(s):
            sep = separating_index(u, v)
            eta = sep if eta is None else index_join(eta, sep)
    return r, s, eta


def select_q(x: Point, r: Point, s: Point, eta: UIndex) -> Point:
    if not any(membership(x, ball(eta, rj)) for rj in full_orbit(r)):
        return r
    return s


def lemma2_alpha(eta: UIndex) -> UIndex:
    # entourages are symmetric and transitive, so beta = beta_0 = eta
    return eta


def backward_chain(q: Point, n: int, alpha: UIndex) -> list:
    """W_0 = V(q_n), W_i = sigma^{-1}(W_{i-1}) cap V(q_{n-i}) for i = 1..n."""
    period = primitive_period(q)
    if period is None:
        raise ValueError(f"{q} is not periodic")

    def q_at(j):
        return shift_point(q, j % period)

    chain = [ball(alpha, q_at(n))]
    for i in range(1, n + 1):
        w = cylinder_intersect(cylinder_preimage(chain[-1], 1), ball(alpha, q_at(n - i)))
        assert w != VOID, f"chain collapsed at step {i} for q={q}, n={n}"
        chain.append(w)
    return chain


def sensitivity_witness(x: Point, N_x: Cylinder, cfg: SensitivityConfig = SensitivityConfig()):
    if not membership(x, N_x):
        raise ValueError(f"{x} is not in its neighborhood {N_x}")
    r, s, eta = canonical_pair_and_eta(cfg)
    alpha = lemma2_alpha(eta)
    q = select_q(x, r, s, eta)

    U = cylinder_intersect(N_x, ball(alpha, x))
    p = periodic_point_in(U, cfg.designated)
    n = primitive_period(p)
    chain = backward_chain(q, n, alpha)

    tw = transitivity_witness(U, chain[n], cfg.designated)
    k, W = tw.k, tw.W
    y = cylinder_point(W)
    # k = a*n - b with 0 <= b <= n-1
    a = -(-k // n)
    b = a * n - k
    m = a * n

    if relates(alpha, shift_point(x, m), shift_point(y, m)):
        label, chosen = "p", p
    else:
        label, chosen = "y", y
    return SensitivityWitness(
        alpha=alpha, q=q, n=n, chain=tuple(chain), U=U, p=p, k=k, W=W, y=y,
        a=a, b=b, m=m, chosen_label=label, chosen=chosen,
    )


def verify_sensitive(x: Point, w: SensitivityWitness, N_x: Cylinder) -> bool:
    """Re-check the sensitive-dependence contract by evaluation alone."""
    if w.m < 1:
        return False
    if not membership(w.chosen, N_x) or w.chosen == x:
        return False
    return not relates(w.alpha, shift_point(x, w.m), shift_point(w.chosen, w.m))
