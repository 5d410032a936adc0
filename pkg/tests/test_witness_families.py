import json

import pytest

from softgt import CertificationError, PreconditionError
from softgt.cover_engine import minimal_near_subcover, minimal_subcover
from softgt.gt_space import gt_is_regular_open
from softgt.sgt_space import is_open
from softgt.witness_families import (
    FAMILIES,
    TruncationFamily,
    family_constant,
    family_discrete_subspace,
    family_example_ones,
    family_example_ones_rows,
    family_pairs,
    growth_certificate,
)


def test_example_ones_structure():
    g, cover = family_example_ones(4, 2)
    assert g.strong and len(cover) == 3
    assert all(str(m).count("{1,") == 2 for m in cover.members)


def test_pairs_cover_is_regular_open():
    g, cover = family_pairs(4)
    assert all(gt_is_regular_open(g, c) for c in cover)


def test_discrete_rows_are_open():
    g, cover = family_discrete_subspace(4, 2)
    assert all(is_open(g, m) for m in cover.members)
    assert minimal_subcover(cover)[0] == 4
    assert minimal_near_subcover(cover)[0] == 4


def test_rows_variant_reports_sizes():
    cert = growth_certificate("family_example_ones_rows", 6)
    assert cert.expected_plain is None
    assert len(cert.plain) == 5


def test_constant_is_not_certified_unbounded():
    cert = growth_certificate("family_constant", 8)
    assert cert.plain == (1,) * 7
    assert not cert.plain_unbounded
    assert "not certified" in cert.verdict


@pytest.mark.parametrize("builder", [family_example_ones, family_example_ones_rows, family_constant])
def test_builders_reject_small_index(builder):
    with pytest.raises(PreconditionError):
        builder(1)


def test_certificate_values():
    ones = growth_certificate("family_example_ones", 7)
    assert ones.plain == tuple(n - 1 for n in range(2, 8))
    assert ones.near == (1,) * 6
    assert ones.plain_unbounded and ones.near_bounded
    pairs = growth_certificate("family_pairs", 5)
    assert pairs.plain == pairs.near == (1, 2, 3, 4, 5)
    assert not pairs.near_bounded


def test_certificate_json_is_deterministic():
    a = growth_certificate("family_discrete_subspace", 5).to_json()
    b = growth_certificate(FAMILIES["family_discrete_subspace"], 5).to_json()
    assert a == b
    assert json.loads(a)["plain_minimal_subcover"] == [1, 2, 3, 4, 5]


def test_certificate_mismatch_names_index():
    wrong = TruncationFamily(
        "wrong", family_pairs, FAMILIES["family_pairs"].measure, lambda m: 1, None, 1, "deliberately wrong law"
    )
    with pytest.raises(CertificationError, match="m=|n=2"):
        growth_certificate(wrong, 3)


def test_unknown_family_and_bad_range():
    with pytest.raises(PreconditionError):
        growth_certificate("nope", 3)
    with pytest.raises(PreconditionError):
        growth_certificate("family_example_ones", 4, n_min=1)
    with pytest.raises(PreconditionError):
        growth_certificate("family_pairs", 0)


@pytest.mark.parametrize("n,plain", [(2, 1), (3, 2), (6, 5)])
def test_example_ones_sizes(n, plain):
    _, cover = family_example_ones(n, 2)
    assert minimal_subcover(cover)[0] == plain
    assert minimal_near_subcover(cover)[0] == 1


def test_example_ones_smallest_case_is_carrier():
    g, cover = family_example_ones(2, 3)
    assert cover.members == (g.carrier,)


@pytest.mark.parametrize("n,p,plain", [(1, 2, 1), (3, 1, 3), (4, 2, 4)])
def test_discrete_sizes(n, p, plain):
    _, cover = family_discrete_subspace(n, p)
    assert minimal_subcover(cover)[0] == plain


def test_discrete_single_parameter_rows():
    _, cover = family_discrete_subspace(3, 1)
    assert [str(m) for m in cover.members] == ["{(r1,{1})}", "{(r1,{2})}", "{(r1,{3})}"]


@pytest.mark.parametrize("m", [1, 2, 4])
def test_pairs_sizes(m):
    cert = growth_certificate("family_pairs", m)
    assert cert.plain[-1] == m
