"""Divided-difference engine tests: recursion, symmetry, supports, limits."""

from functools import partial

import numpy as np
import pytest

from gaussdiff import (
    ANNULUS_CURVE,
    HALFPLANE_CURVE,
    QUADRANT_CURVE,
    CurveMap,
    GridBounds,
    GridRegion,
    Interval,
    NodeTuple,
    RadialBounds,
    RepeatedNodeError,
    ShrinkSchedule,
    annulus,
    classify_trace,
    coefficient_distance,
    derivative_by_limit,
    divided_diff,
    divided_diff_lagrange,
    lp_gauge,
    node_bounds,
    scalar_curve,
    support_bound_of,
    supported_in,
    symmetry_check,
)

from oracles import eval_grid_64, random_nodes

INF = float("inf")


# ---------------------------------------------------------------------------
# node tuples and curves
# ---------------------------------------------------------------------------


def test_node_tuple_basics():
    t = NodeTuple((0, 1, 1j))
    assert t.order == 2
    assert t.pairwise_distinct
    assert not NodeTuple((0, 1, 1)).pairwise_distinct
    assert t.permuted([2, 0, 1]).nodes == (1j, 0j, 1 + 0j)
    with pytest.raises(ValueError):
        t.permuted([0, 0, 1])
    with pytest.raises(ValueError):
        NodeTuple(())


def test_curve_map_family_guard():
    broken = CurveMap("radial", lambda z: scalar_curve(lambda w: 1.0)(z))
    with pytest.raises(ValueError):
        broken(0.0)


# ---------------------------------------------------------------------------
# recursion
# ---------------------------------------------------------------------------


def test_order_zero_returns_curve_value():
    dd = divided_diff(QUADRANT_CURVE, (0.5 + 0.5j,))
    assert dd == QUADRANT_CURVE(0.5 + 0.5j)
    # a single repeated-looking node is fine at order zero
    assert divided_diff_lagrange(QUADRANT_CURVE, (1j,)) == QUADRANT_CURVE(1j)


def test_constant_curve_differences_vanish():
    const = scalar_curve(lambda z: 2.5 - 1j)
    for k in range(1, 5):
        nodes = tuple(complex(j, j * j * 0.1) for j in range(k + 1))
        assert divided_diff(const, nodes).is_zero


def test_second_difference_of_square_is_one():
    sc = scalar_curve(lambda z: z * z)
    dd = divided_diff(sc, (0, 1, 2))
    assert len(dd.atoms) == 1
    c, reg = dd.atoms[0]
    assert c == pytest.approx(1.0, abs=1e-12)
    assert reg == GridRegion(((Interval(-INF, INF), Interval(-INF, INF)),))


def test_quadrant_first_difference_atoms():
    # (f(0) - f(1)) / (0 - 1): one atom on ]0,1] x ]-inf,0]; the pointwise
    # oracle below pins the sign (+1).
    dd = divided_diff(QUADRANT_CURVE, (0, 1))
    assert dd.atoms == (
        (1.0 + 0j, GridRegion(((Interval(0.0, 1.0), Interval(-INF, 0.0)),))),
    )
    for w in eval_grid_64():
        expected = (QUADRANT_CURVE(0).value_at(w) - QUADRANT_CURVE(1).value_at(w)) / (0 - 1)
        assert dd.value_at(w) == expected


def test_repeated_nodes_rejected():
    with pytest.raises(RepeatedNodeError):
        divided_diff(QUADRANT_CURVE, (0, 1, 0))
    with pytest.raises(RepeatedNodeError):
        divided_diff_lagrange(QUADRANT_CURVE, (1j, 1j))


# ---------------------------------------------------------------------------
# barycentric cross-check
# ---------------------------------------------------------------------------


def test_lagrange_pair_weights():
    # order 1 reduces to (f(a) - f(b)) / (a - b)
    a, b = 0.3 + 0.2j, -1.1 + 0.9j
    sc = scalar_curve(lambda z: 3 * z + 2)
    direct = divided_diff(sc, (a, b))
    via = divided_diff_lagrange(sc, (a, b))
    assert coefficient_distance(direct, via) <= 1e-14


def test_lagrange_constant_second_order_vanishes():
    rng = np.random.default_rng(3)
    const = scalar_curve(lambda z: 4.2j)
    nodes = random_nodes(rng, 3)
    assert divided_diff_lagrange(const, nodes).is_zero


def test_lagrange_matches_recursion_on_quadrant():
    nodes = (0, 1, 1j)
    d1 = divided_diff(QUADRANT_CURVE, nodes)
    d2 = divided_diff_lagrange(QUADRANT_CURVE, nodes)
    assert coefficient_distance(d1, d2) <= 1e-10


@pytest.mark.parametrize("curve", [QUADRANT_CURVE, ANNULUS_CURVE, HALFPLANE_CURVE])
def test_recursion_lagrange_agreement_random(curve):
    rng = np.random.default_rng(4)
    for _ in range(30):
        k = int(rng.integers(1, 6))
        nodes = random_nodes(rng, k + 1)
        d1 = divided_diff(curve, nodes)
        d2 = divided_diff_lagrange(curve, nodes)
        assert coefficient_distance(d1, d2) <= 1e-9


# ---------------------------------------------------------------------------
# symmetry
# ---------------------------------------------------------------------------


def test_symmetry_identity_permutation():
    assert symmetry_check(QUADRANT_CURVE, (0.2, 1.4 - 0.3j), [0, 1])


def test_symmetry_swap():
    assert symmetry_check(QUADRANT_CURVE, (0, 1), [1, 0])


def test_symmetry_three_cycle_halfplane():
    assert symmetry_check(HALFPLANE_CURVE, (0.1, 0.2 + 0.3j, -0.4j), [1, 2, 0])


@pytest.mark.parametrize("curve", [QUADRANT_CURVE, ANNULUS_CURVE, HALFPLANE_CURVE])
def test_symmetry_random_permutations(curve):
    rng = np.random.default_rng(5)
    for _ in range(30):
        k = int(rng.integers(1, 5))
        nodes = random_nodes(rng, k + 1)
        perm = list(rng.permutation(k + 1))
        assert symmetry_check(curve, nodes, perm)


def test_branch_independence_via_reordering():
    # splitting the recursion on another index pair equals evaluating a
    # rotation of the tuple
    rng = np.random.default_rng(6)
    for _ in range(10):
        nodes = random_nodes(rng, 4)
        base = divided_diff(QUADRANT_CURVE, nodes)
        rotated = divided_diff(QUADRANT_CURVE, NodeTuple(nodes).permuted([2, 3, 0, 1]))
        assert coefficient_distance(base, rotated) <= 1e-9


# ---------------------------------------------------------------------------
# support localisation
# ---------------------------------------------------------------------------


def test_support_bound_shapes():
    single = support_bound_of((0.5 + 0.25j,), "grid")
    assert single.region.is_empty  # degenerate strips are empty half-open sets

    cross = support_bound_of((0, 1 + 1j), "grid")
    assert cross.region.cells == (
        (Interval(-INF, 0.0), Interval(0.0, 1.0)),
        (Interval(0.0, 1.0), Interval(-INF, INF)),
        (Interval(1.0, INF), Interval(0.0, 1.0)),
    )

    ring = support_bound_of((0.5, 0.3j), "radial")
    assert ring.region == annulus(0.3, 0.5)


def test_node_bounds():
    b = node_bounds((0, 1 + 2j, -1j), "grid")
    assert b == GridBounds(0.0, 1.0, -1.0, 2.0)
    r = node_bounds((0.5, 0.3j), "radial")
    assert r == RadialBounds(0.3, 0.5)


@pytest.mark.parametrize(
    "curve", [QUADRANT_CURVE, ANNULUS_CURVE], ids=["quadrant", "annulus"]
)
def test_support_localisation_random(curve):
    rng = np.random.default_rng(7)
    for _ in range(40):
        k = int(rng.integers(1, 5))
        nodes = random_nodes(rng, k + 1, box=1.4)
        dd = divided_diff(curve, nodes)
        assert supported_in(dd, support_bound_of(nodes, curve.family))


# ---------------------------------------------------------------------------
# polynomial exactness
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_polynomial_exactness(m):
    rng = np.random.default_rng(8 + m)
    curve = scalar_curve(lambda z: z**m)
    nodes = random_nodes(rng, m + 1, min_sep=0.5)
    dd = divided_diff(curve, nodes)
    assert len(dd.atoms) == 1
    assert abs(dd.atoms[0][0] - 1.0) <= 1e-10
    higher = divided_diff(curve, random_nodes(rng, m + 2, min_sep=0.5))
    assert higher.max_coeff() <= 1e-10


# ---------------------------------------------------------------------------
# limits along shrink schedules
# ---------------------------------------------------------------------------


def test_schedule_validation():
    with pytest.raises(ValueError):
        ShrinkSchedule((1.0, 1.0), 0.5, 10)  # repeated offsets
    with pytest.raises(ValueError):
        ShrinkSchedule((1.0, -1.0), 1.5, 10)  # ratio outside ]0,1[
    with pytest.raises(ValueError):
        ShrinkSchedule((1.0, -1.0), 0.5, 0)  # no steps
    with pytest.raises(ValueError):
        derivative_by_limit(QUADRANT_CURVE, 0.0, 2, ShrinkSchedule.roots_of_unity(1))


def test_quadrant_derivatives_converge_to_zero():
    for k in (1, 2, 3, 4):
        rep = derivative_by_limit(
            QUADRANT_CURVE, 0.3 + 0.7j, k, ShrinkSchedule.roots_of_unity(k)
        )
        assert rep.verdict == "CONVERGED-TO-ZERO"
        assert rep.gauge_trace[-1] <= 1e-6
        assert rep.estimate is not None


def test_halfplane_first_derivative_converges_in_lp():
    # the gauge decays like distance**(1-p), so reaching 1e-6 takes ~100 halvings
    rep = derivative_by_limit(
        HALFPLANE_CURVE,
        0.0,
        1,
        ShrinkSchedule.roots_of_unity(1, steps=100),
        gauge=partial(lp_gauge, p=0.75),
    )
    assert rep.verdict == "CONVERGED-TO-ZERO"


def test_halfplane_second_derivative_diverges_in_lp():
    # offsets (1, 0, 2) reproduce the second-order quotient built from the
    # pairs (t, 2t) and (0, 2t) scaled by 1/t
    rep = derivative_by_limit(
        HALFPLANE_CURVE,
        0.0,
        2,
        ShrinkSchedule((1.0, 0.0, 2.0), 0.5, 60),
        gauge=partial(lp_gauge, p=0.75),
    )
    assert rep.verdict == "DIVERGENT"
    assert rep.gauge_trace[-1] >= 1e6


def test_annulus_derivatives_converge_inside_and_outside():
    # centers inside, outside, and exactly on the support boundary
    for center in (0.4, 1.6, 0.3 + 0.4j, 1.0 + 0j, 0.0):
        rep = derivative_by_limit(
            ANNULUS_CURVE, center, 2, ShrinkSchedule.roots_of_unity(2)
        )
        assert rep.verdict == "CONVERGED-TO-ZERO"


def test_single_step_schedule_inconclusive():
    rep = derivative_by_limit(
        QUADRANT_CURVE, 0.0, 1, ShrinkSchedule.roots_of_unity(1, steps=1)
    )
    assert rep.verdict == "INCONCLUSIVE"


def test_classify_trace_states():
    assert classify_trace([1.0], 1e-6, 1e6) == "INCONCLUSIVE"
    assert classify_trace([1e-3, 1e-5, 1e-7, 1e-8], 1e-6, 1e6) == "CONVERGED-TO-ZERO"
    assert classify_trace([10.0, 1e3, 1e5, 1e7], 1e-6, 1e6) == "DIVERGENT"
    assert classify_trace([1.0, 2.0, 1.5, 1.7], 1e-6, 1e6) == "INCONCLUSIVE"


def test_real_offsets_schedule_is_real_and_distinct():
    sched = ShrinkSchedule.real_offsets(3)
    assert len(sched.offsets) == 4
    assert all(u.imag == 0 for u in sched.offsets)
    assert len(set(sched.offsets)) == 4
    rep = derivative_by_limit(QUADRANT_CURVE, -0.2, 3, sched)
    assert rep.verdict == "CONVERGED-TO-ZERO"
