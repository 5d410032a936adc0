import pytest
from hypothesis import given, settings

import oracle
from softgt import PreconditionError, StructuralError, Universe
from softgt.gt_space import (
    generate_gt,
    gt_closure,
    gt_interior,
    gt_is_closed,
    gt_is_open,
    gt_is_regular_closed,
    gt_is_regular_open,
    gt_minimal_near_subcover,
    gt_minimal_subcover,
    gt_minimal_subcover_size,
    gt_regular_open_sets,
    is_mu_locally_finite,
    is_mu_open_cover,
    is_mu_open_refinement,
    is_quasi_topology,
)
from spaces import gts

U4 = Universe([1, 2, 3, 4])


@pytest.fixture
def pairs4():
    return generate_gt(U4, [(1, 2), (2, 3), (3, 4)])


def members(m):
    return set(U4.members(m))


def test_pair_base_opens(pairs4):
    got = {frozenset(U4.members(o)) for o in pairs4.opens}
    expected = {frozenset(s) for s in [(), (1, 2), (2, 3), (3, 4), (1, 2, 3), (2, 3, 4), (1, 2, 3, 4)]}
    # {1,2} | {3,4} is the whole of X
    assert got == expected
    assert pairs4.mu_space
    assert not is_quasi_topology(pairs4)


def test_pair_base_closures(pairs4):
    assert members(gt_closure(pairs4, {1, 2})) == {1, 2}
    assert members(gt_closure(pairs4, {2, 3})) == {1, 2, 3, 4}
    assert members(gt_closure(pairs4, set())) == set()
    assert members(gt_interior(pairs4, {1, 3, 4})) == {3, 4}


def test_pair_base_regularity(pairs4):
    assert gt_is_regular_open(pairs4, {1, 2})
    assert gt_is_open(pairs4, {2, 3}) and not gt_is_regular_open(pairs4, {2, 3})
    assert gt_is_closed(pairs4, {1, 2}) and gt_is_regular_closed(pairs4, {1, 2})
    assert {frozenset(U4.members(o)) for o in gt_regular_open_sets(pairs4)} == {
        frozenset(), frozenset({1, 2}), frozenset({3, 4}), frozenset({1, 2, 3, 4})
    }


def test_masks_and_iterables_agree(pairs4):
    assert gt_closure(pairs4, {2, 3}) == gt_closure(pairs4, U4.mask([2, 3]))
    with pytest.raises(StructuralError):
        gt_interior(pairs4, {9})
    with pytest.raises(StructuralError):
        gt_interior(pairs4, 1 << 4)


def test_open_cover_and_refinement(pairs4):
    odd = [{1, 2}, {3, 4}]
    assert is_mu_open_cover(pairs4, odd)
    assert not is_mu_open_cover(pairs4, [{1, 2}, {2, 3}])
    assert not is_mu_open_cover(pairs4, [{1, 2}, {3}, {4}])
    assert is_mu_open_refinement(pairs4, odd, [{1, 2, 3}, {2, 3, 4}])
    assert not is_mu_open_refinement(pairs4, [{1, 2, 3}, {3, 4}], odd)


def test_local_finiteness_requires_mu_space():
    g = generate_gt(U4, [(1, 2)])
    assert not g.mu_space
    with pytest.raises(PreconditionError):
        is_mu_locally_finite(g, [{1, 2}])
    full = generate_gt(U4, [(1, 2), (3, 4)])
    assert is_mu_locally_finite(full, [{1, 2}, {3, 4}, {1, 2, 3, 4}])


def test_full_pair_base_subcovers():
    X = Universe(range(1, 7))
    g = generate_gt(X, [(k, k + 1) for k in range(1, 6)])
    cover = [X.mask((k, k + 1)) for k in range(1, 6)]
    assert gt_minimal_subcover(g, cover) == (3, (0, 2, 4))
    assert gt_minimal_subcover_size(g, cover) == 3
    # i(c({2,3})) = {1,2,3} and i(c({4,5})) = {4,5,6}
    assert gt_minimal_near_subcover(g, cover) == (2, (1, 3))
    odd = cover[::2]
    assert gt_minimal_near_subcover(g, odd)[0] == 3


def test_near_subcover_can_be_smaller():
    X = Universe([1, 2, 3])
    g = generate_gt(X, [(1, 2), (1, 3)])
    cover = [X.mask((1, 2)), X.mask((1, 3))]
    assert gt_minimal_subcover(g, cover)[0] == 2
    assert gt_minimal_near_subcover(g, cover) == (1, (0,))


def test_subcover_preconditions(pairs4):
    with pytest.raises(PreconditionError):
        gt_minimal_subcover(pairs4, [{1, 2}])
    not_mu = generate_gt(U4, [(1, 2)])
    with pytest.raises(PreconditionError):
        gt_minimal_subcover(not_mu, [{1, 2}])


def test_equality_is_by_open_family():
    a = generate_gt(U4, [(1, 2), (3, 4), (1, 2, 3, 4)])
    b = generate_gt(U4, [(1, 2), (3, 4)])
    assert a == b and hash(a) == hash(b)
    assert a != generate_gt(U4, [(1, 2)])


@settings(max_examples=200, deadline=None)
@given(gts())
def test_operators_match_oracle(g):
    full = frozenset(g.universe.points)
    opens = {frozenset(g.universe.members(o)) for o in g.opens}
    assert opens == oracle.all_unions(frozenset(g.universe.members(b)) for b in g.generators)
    for a in range(g.universe.full + 1):
        s = frozenset(g.universe.members(a))
        assert frozenset(g.universe.members(gt_interior(g, a))) == oracle.interior(opens, s)
        assert frozenset(g.universe.members(gt_closure(g, a))) == oracle.closure(opens, full, s)


@settings(max_examples=200, deadline=None)
@given(gts())
def test_regularization_idempotent(g):
    for a in range(g.universe.full + 1):
        once = gt_interior(g, gt_closure(g, a))
        assert gt_interior(g, gt_closure(g, once)) == once
        assert gt_is_regular_open(g, once)


@settings(max_examples=100, deadline=None)
@given(gts(mu_space=True))
def test_minimal_subcover_matches_oracle(g):
    cover = list(g.generators)
    size, idx = gt_minimal_subcover(g, cover)
    ref = oracle.min_subcover(range(len(g.universe)), [[i for i in range(len(g.universe)) if m >> i & 1] for m in cover])
    assert (size, idx) == ref


def test_refinement_examples(pairs4):
    base = [{1, 2}, {2, 3}, {3, 4}]
    assert not is_mu_open_refinement(pairs4, base, [{1, 2}, {3, 4}])
    assert is_mu_open_refinement(pairs4, [{1, 2}, {3, 4}], [{1, 2, 3}, {3, 4}])


def test_local_finiteness_examples():
    X = Universe(range(1, 7))
    g = generate_gt(X, [(k, k + 1) for k in range(1, 6)])
    assert is_mu_locally_finite(g, [X.mask((2 * j - 1, 2 * j)) for j in (1, 2, 3)])
    assert is_mu_locally_finite(g, [])


def test_generation_edge_cases():
    empty = generate_gt(U4, [])
    assert empty.opens == (0,) and not empty.mu_space
    discrete = generate_gt(U4, [(x,) for x in U4.points])
    assert len(discrete.opens) == 16


def test_odd_pairs_and_whole_space(pairs4):
    assert gt_minimal_subcover(pairs4, [{1, 2}, {3, 4}])[0] == 2
    assert gt_minimal_near_subcover(pairs4, [{1, 2}, {3, 4}])[0] == 2
    assert gt_minimal_subcover(pairs4, [{1, 2}, {2, 3}, {1, 2, 3, 4}]) == (1, (2,))


@settings(max_examples=100, deadline=None)
@given(gts(mu_space=True))
def test_open_cover_refines_itself(g):
    cover = list(g.generators)
    assert is_mu_open_refinement(g, cover, cover)
    assert is_mu_locally_finite(g, cover)
    assert gt_minimal_near_subcover(g, cover)[0] <= gt_minimal_subcover(g, cover)[0]
