import pytest
from hypothesis import given

from cantorchaos.core_space import VOID, ZERO, cylinder_intersect, inclusion, membership, point_eval
from cantorchaos.grammar import parse_cylinder as C
from cantorchaos.grammar import parse_index as I
from cantorchaos.grammar import parse_point as P
from cantorchaos.uniformity import (
    SampleSpec,
    ball,
    index_join,
    index_leq,
    relates,
    separating_index,
    uns_axioms_check,
)

from .strategies import indices, points


def test_ball_examples():
    assert ball(I("<{a},2>"), ZERO) == C("{a:1=0,a:2=0}")
    assert ball(I("<{a},2>"), P("a=|10")) == C("{a:1=1,a:2=0}")
    assert ball(I("<{a,b},1>"), P("a=|1")) == C("{a:1=1,b:1=0}")


def test_relates_examples():
    assert relates(I("<{a},2>"), ZERO, ZERO)
    assert not relates(I("<{a},2>"), P("a=|10"), P("a=|01"))
    assert relates(I("<{a},1>"), ZERO, P("a=|01"))


def test_join_and_order_examples():
    assert index_join(I("<{a},1>"), I("<{b},2>")) == I("<{a,b},2>")
    assert index_leq(I("<{a,b},2>"), I("<{a},1>"))
    assert not index_leq(I("<{a},1>"), I("<{a,b},2>"))
    x = I("<{a,c},3>")
    assert index_join(x, x) == x


def test_separating_index_examples():
    assert separating_index(ZERO, P("a=|10")) == I("<{a},1>")
    assert separating_index(ZERO, P("a=|01")) == I("<{a},2>")
    with pytest.raises(ValueError):
        separating_index(P("a=|10"), P("a=|10"))


def test_separating_index_sees_late_differences():
    # differ only at position 7, past both transients
    p, q = P("a=000000|0"), P("a=000000|1")
    assert separating_index(p, q) == I("<{a},7>")


def test_uns_default_spec_passes():
    reports = uns_axioms_check(SampleSpec(instances=1000, seed=7))
    assert {r.axiom for r in reports} == {f"UNS{i}" for i in range(1, 6)} | {f"ENT{i}" for i in range(1, 6)}
    for r in reports:
        assert r.passed, (r.axiom, r.failures)
        assert r.samples > 0, r.axiom


def test_uns_harness_catches_inverted_order():
    def broken(i1, i2):
        return index_leq(i2, i1)

    reports = {r.axiom: r for r in uns_axioms_check(SampleSpec(200, 3), leq=broken)}
    assert not reports["UNS3"].passed
    assert not reports["UNS2"].passed


def test_uns_harness_catches_bad_join():
    def meet(i1, i2):
        # a lower bound posing as a join
        fibers = (i1.fibers & i2.fibers) or i1.fibers
        return type(i1)(fibers, min(i1.k, i2.k))

    reports = {r.axiom: r for r in uns_axioms_check(SampleSpec(200, 3), join=meet)}
    assert not reports["UNS2"].passed
    assert not reports["ENT4"].passed


@given(indices, points, points, points)
def test_relates_is_equivalence(idx, x, y, z):
    assert relates(idx, x, x)
    assert relates(idx, x, y) == relates(idx, y, x)
    if relates(idx, x, y) and relates(idx, y, z):
        assert relates(idx, x, z)


@given(indices, points, points)
def test_relates_is_ball_membership(idx, p, q):
    assert relates(idx, p, q) == membership(q, ball(idx, p))


@given(indices, points, points)
def test_balls_are_classes(idx, p, q):
    if relates(idx, p, q):
        assert ball(idx, p) == ball(idx, q)
    else:
        assert cylinder_intersect(ball(idx, p), ball(idx, q)) == VOID


@given(indices, indices, points)
def test_join_is_upper_bound(i1, i2, p):
    j = index_join(i1, i2)
    assert index_leq(j, i1) and index_leq(j, i2)
    assert inclusion(ball(j, p), ball(i1, p))


@given(points, points)
def test_separating_index_disjoint_balls(p, q):
    if p == q:
        return
    idx = separating_index(p, q)
    assert cylinder_intersect(ball(idx, p), ball(idx, q)) == VOID
    # least differing coordinate: everything before it on that fiber agrees
    (f,) = idx.fibers
    assert all(point_eval(p, (f, i)) == point_eval(q, (f, i)) for i in range(1, idx.k))
