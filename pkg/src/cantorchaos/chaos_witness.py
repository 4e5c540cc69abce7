"""Witnesses that the shift on C is transitive, has dense periodic points and
makes every pair of open sets share a periodic orbit.

Each generator has a matching ``verify_*`` function that only evaluates
points against cylinders, so a witness is never trusted on provenance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_space import (
    Cylinder,
    FiberWord,
    Point,
    VOID,
    cylinder_image,
    cylinder_intersect,
    cylinder_point,
    cylinder_preimage,
    inclusion,
    k_block,
    membership,
    normalize_cylinder,
    primitive_period,
    shift_point,
)

DEFAULT_FIBER = "a"


@dataclass(frozen=True)
class TransitivityWitness:
    k: int
    W: Cylinder

    def to_json(self):
        return {"k": self.k, "W": str(self.W)}


@dataclass(frozen=True)
class SharedOrbitWitness:
    p: Point
    tU: int
    tV: int

    def to_json(self):
        return {"p": str(self.p), "period": primitive_period(self.p), "tU": self.tU, "tV": self.tV}


def _nonvoid(*cyls):
    for c in cyls:
        if c.void:
            raise ValueError("open sets must be nonvoid")


def transitivity_witness(U: Cylinder, V: Cylinder, designated: str = DEFAULT_FIBER):
    """Build W inside U with sigma^k(W) inside V.

    Both sets are reduced to basis cylinders on K(S1, k1) and K(S2, k2).  The
    witness lives on K(S1 u S2, k1 + k2): the first k1 positions carry U's
    pattern, the next k2 carry V's, and everything else is 0.
    """
    _nonvoid(U, V)
    s1, k1, phi1 = normalize_cylinder(U, designated)
    s2, k2, phi2 = normalize_cylinder(V, designated)
    c1, c2 = phi1.constraints, phi2.constraints
    psi = {}
    for coord in k_block(s1 | s2, k1 + k2):
        f, i = coord
        if f in s1 and i <= k1:
            psi[coord] = c1[(f, i)]
        elif f in s2 and k1 < i <= k1 + k2:
            psi[coord] = c2[(f, i - k1)]
        else:
            psi[coord] = 0
    return TransitivityWitness(k1, Cylinder.of(psi))


def periodic_point_in(U: Cylinder, designated: str = DEFAULT_FIBER) -> Point:
    """A point of U fixed by sigma^k, k being the depth of U's basis cylinder."""
    _nonvoid(U)
    fibers, k, phi = normalize_cylinder(U, designated)
    cons = phi.constraints
    table = {
        f: FiberWord("", "".join(str(cons[(f, i)]) for i in range(1, k + 1)))
        for f in fibers
    }
    return Point.of(table)


def shared_orbit_witness(U: Cylinder, V: Cylinder, designated: str = DEFAULT_FIBER):
    _nonvoid(U, V)
    k = transitivity_witness(U, V, designated).k
    W = cylinder_intersect(cylinder_preimage(V, k), U)
    # the transitivity witness cylinder lies inside W, so this cannot fire
    assert W != VOID, f"empty W for U={U}, V={V}, k={k}"
    p = periodic_point_in(W, designated)
    return SharedOrbitWitness(p, 0, k)


def verify_transitivity(U: Cylinder, V: Cylinder, w: TransitivityWitness) -> bool:
    if w.k < 1 or w.W.void:
        return False
    if not (inclusion(w.W, U) and inclusion(cylinder_image(w.W, w.k), V)):
        return False
    y = cylinder_point(w.W)
    return membership(y, U) and membership(shift_point(y, w.k), V)


def verify_periodic(U: Cylinder, f: Point, k: int) -> bool:
    return k >= 1 and membership(f, U) and shift_point(f, k) == f


def verify_shared_orbit(U: Cylinder, V: Cylinder, w: SharedOrbitWitness) -> bool:
    n = primitive_period(w.p)
    if n is None or shift_point(w.p, n) != w.p:
        return False
    return membership(shift_point(w.p, w.tU), U) and membership(shift_point(w.p, w.tV), V)


def forward_transit_time(w: SharedOrbitWitness) -> int:
    """A positive n with sigma^n(U) meeting V, read off a shared periodic orbit."""
    period = primitive_period(w.p)
    n = (w.tV - w.tU) % period
    return n or period
