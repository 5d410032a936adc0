"""Truncation families for infinite counterexamples.

An infinite space without a finite subcover cannot be examined directly.
Instead each family builds the first ``n`` points of the space together with
the distinguished cover, and the certificate records how the exact minimal
subcover size grows with ``n``.  Unbounded growth over the truncations is the
finite shadow of "no finite subcover"; a bounded near-subcover size is the
shadow of near compactness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .cover_engine import SoftCover, minimal_near_subcover, minimal_subcover, validate_cover
from .errors import CertificationError, PreconditionError
from .gt_space import GTS, generate_gt, gt_minimal_near_subcover, gt_minimal_subcover
from .sgt_space import SGTS, generate_sgt
from .soft_core import ParameterSet, SoftSet, Universe

__all__ = [
    "TruncationFamily",
    "GrowthCertificate",
    "family_example_ones",
    "family_example_ones_rows",
    "family_pairs",
    "family_discrete_subspace",
    "family_constant",
    "growth_certificate",
    "FAMILIES",
]


def _space(n: int, p: int) -> tuple[Universe, ParameterSet]:
    return Universe(range(1, n + 1)), ParameterSet(f"r{j}" for j in range(1, p + 1))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def family_example_ones(n: int, p: int = 2) -> tuple[SGTS, SoftCover]:
    """Points ``1..n`` with basis ``B_x = {1, x}`` at every parameter, ``2 <= x <= n``.

    The distinguished cover is the basis itself; each ``B_x`` is the only
    member containing ``x``, so the plain subcover needs ``n - 1`` members,
    while the closure of any ``B_x`` is the whole carrier.
    """
    _require(n >= 2 and p >= 1, f"family_example_ones needs n >= 2 and p >= 1, got n={n}, p={p}")
    X, R = _space(n, p)
    carrier = SoftSet.universal(X, R)
    basis = [SoftSet.from_mapping(X, R, {r: (1, x) for r in R}) for x in range(2, n + 1)]
    g = generate_sgt(carrier, basis)
    return g, validate_cover(g, basis)


def family_example_ones_rows(n: int, p: int = 2) -> tuple[SGTS, SoftCover]:
    """Alternate cover pattern with growing initial segments.

    Row ``i`` (``1 <= i < n``) assigns ``{1..j} | {i + j}``, clipped to
    ``1..n``, to parameter ``r_j``.  Those rows are open only when the basis is placed parameter by
    parameter, so this variant generates from single-parameter soft sets
    ``(r, {1, x})``.  Its growth is reported, not prescribed.
    """
    _require(n >= 2 and p >= 1, f"family_example_ones_rows needs n >= 2 and p >= 1, got n={n}, p={p}")
    X, R = _space(n, p)
    carrier = SoftSet.universal(X, R)
    basis = [SoftSet.from_mapping(X, R, {r: (1, x)}) for r in R for x in range(2, n + 1)]
    g = generate_sgt(carrier, basis)
    rows = []
    # rows past n - 1 would clip to {1} at r_1, which is not open
    for i in range(1, n):
        assignment = {}
        for j, r in enumerate(R, start=1):
            assignment[r] = [x for x in (*range(1, j + 1), i + j) if x <= n]
        rows.append(SoftSet.from_mapping(X, R, assignment))
    return g, validate_cover(g, list(dict.fromkeys(rows)))


def family_pairs(m: int) -> tuple[GTS, tuple[int, ...]]:
    """Points ``1..2m`` with base ``{k, k+1}``; the cover is the odd pairs ``{2j-1, 2j}``.

    Each odd pair is closed (its complement is a union of pairs) and open,
    hence regular open, and the pairs are disjoint.
    """
    _require(m >= 1, f"family_pairs needs m >= 1, got {m}")
    X = Universe(range(1, 2 * m + 1))
    g = generate_gt(X, [(k, k + 1) for k in range(1, 2 * m)])
    cover = tuple(X.mask((2 * j - 1, 2 * j)) for j in range(1, m + 1))
    return g, cover


def family_discrete_subspace(n: int, p: int = 2) -> tuple[SGTS, SoftCover]:
    """The subspace on ``1..n`` generated by single-point soft sets ``(r, {x})``.

    The topology is discrete.  Row ``i`` of the cover assigns ``{i}`` to
    ``r_1`` and ``{1..j-1} | {i+j-1}`` to ``r_j``, clipped to ``1..n``.  At
    ``r_1`` every point lies in exactly one row, so all ``n`` rows are needed.
    """
    _require(n >= 1 and p >= 1, f"family_discrete_subspace needs n >= 1 and p >= 1, got n={n}, p={p}")
    X, R = _space(n, p)
    carrier = SoftSet.universal(X, R)
    basis = [SoftSet.from_mapping(X, R, {r: (x,)}) for r in R for x in X]
    g = generate_sgt(carrier, basis)
    rows = []
    for i in range(1, n + 1):
        assignment = {}
        for j, r in enumerate(R, start=1):
            assignment[r] = [x for x in (*range(1, j), i + j - 1) if x <= n]
        rows.append(SoftSet.from_mapping(X, R, assignment))
    rows = [row for row in dict.fromkeys(rows) if row]
    return g, validate_cover(g, rows)


def family_constant(n: int, p: int = 1) -> tuple[SGTS, SoftCover]:
    """Negative control: the same construction as ``family_example_ones`` but covered by the carrier alone."""
    g, _ = family_example_ones(n, p)
    return g, validate_cover(g, [g.carrier])


def _soft_sizes(built: tuple[SGTS, SoftCover]) -> tuple[int, int]:
    _, cover = built
    return minimal_subcover(cover)[0], minimal_near_subcover(cover)[0]


def _plain_sizes(built: tuple[GTS, tuple[int, ...]]) -> tuple[int, int]:
    g, cover = built
    return gt_minimal_subcover(g, cover)[0], gt_minimal_near_subcover(g, cover)[0]


@dataclass(frozen=True)
class TruncationFamily:
    name: str
    builder: Callable[[int], tuple]
    measure: Callable[[tuple], tuple[int, int]]
    expected_plain: Callable[[int], int] | None
    expected_near: Callable[[int], int] | None
    min_index: int
    claim: str


FAMILIES: dict[str, TruncationFamily] = {
    "family_example_ones": TruncationFamily(
        "family_example_ones",
        family_example_ones,
        _soft_sizes,
        lambda n: n - 1,
        lambda n: 1,
        2,
        "no finite soft open subcover in the limit; near-subcover of size 1 at every truncation",
    ),
    "family_pairs": TruncationFamily(
        "family_pairs",
        family_pairs,
        _plain_sizes,
        lambda m: m,
        lambda m: m,
        1,
        "regular-open cover with no finite subcover in the limit",
    ),
    "family_discrete_subspace": TruncationFamily(
        "family_discrete_subspace",
        family_discrete_subspace,
        _soft_sizes,
        lambda n: n,
        lambda n: n,
        1,
        "subspace cover with no finite subcover and no finite near-subcover in the limit",
    ),
    "family_example_ones_rows": TruncationFamily(
        "family_example_ones_rows",
        family_example_ones_rows,
        _soft_sizes,
        None,
        None,
        2,
        "alternate row cover; sizes reported only",
    ),
    "family_constant": TruncationFamily(
        "family_constant",
        family_constant,
        _soft_sizes,
        lambda n: 1,
        lambda n: 1,
        2,
        "negative control: cover by the carrier alone",
    ),
}


@dataclass(frozen=True)
class GrowthCertificate:
    family: str
    indices: tuple[int, ...]
    plain: tuple[int, ...]
    near: tuple[int, ...]
    expected_plain: tuple[int, ...] | None
    expected_near: tuple[int, ...] | None
    plain_unbounded: bool
    near_bounded: bool
    claim: str
    verdict: str

    def payload(self) -> dict:
        return {
            "family": self.family,
            "indices": list(self.indices),
            "plain_minimal_subcover": list(self.plain),
            "near_minimal_subcover": list(self.near),
            "expected_plain": None if self.expected_plain is None else list(self.expected_plain),
            "expected_near": None if self.expected_near is None else list(self.expected_near),
            "plain_unbounded": self.plain_unbounded,
            "near_bounded": self.near_bounded,
            "claim": self.claim,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, indent=2)


def _strictly_increasing(seq: tuple[int, ...]) -> bool:
    return len(seq) >= 2 and all(a < b for a, b in zip(seq, seq[1:]))


def growth_certificate(family: TruncationFamily | str, n_max: int, *, n_min: int | None = None) -> GrowthCertificate:
    """Compute exact minimal sizes for every truncation up to ``n_max`` and check them.

    Raises ``CertificationError`` naming the first index whose computed size
    differs from the family's expected law.  Unboundedness is claimed only
    when the plain sizes strictly increase across the whole sampled range.
    """
    if isinstance(family, str):
        try:
            family = FAMILIES[family]
        except KeyError:
            raise PreconditionError(f"unknown family {family!r}; known: {sorted(FAMILIES)}") from None
    start = family.min_index if n_min is None else n_min
    _require(start >= family.min_index, f"{family.name} starts at index {family.min_index}")
    _require(n_max >= start, f"n_max must be at least {start}")

    indices = tuple(range(start, n_max + 1))
    plain, near = [], []
    for n in indices:
        p_size, n_size = family.measure(family.builder(n))
        if family.expected_plain is not None and p_size != family.expected_plain(n):
            raise CertificationError(
                f"{family.name}: plain minimal subcover at n={n} is {p_size}, expected {family.expected_plain(n)}"
            )
        if family.expected_near is not None and n_size != family.expected_near(n):
            raise CertificationError(
                f"{family.name}: near minimal subcover at n={n} is {n_size}, expected {family.expected_near(n)}"
            )
        plain.append(p_size)
        near.append(n_size)

    plain_t, near_t = tuple(plain), tuple(near)
    unbounded = _strictly_increasing(plain_t)
    near_bounded = len(set(near_t)) == 1
    if not unbounded:
        verdict = "growth is flat or irregular over the sample; unboundedness not certified"
    elif near_bounded:
        verdict = "plain subcover grows without bound while near-subcover stays constant: not compact in the limit, nearly compact at every truncation"
    elif _strictly_increasing(near_t):
        verdict = "plain and near subcovers both grow without bound: not nearly compact in the limit"
    else:
        verdict = "plain subcover grows without bound; near-subcover pattern not classified"
    return GrowthCertificate(
        family=family.name,
        indices=indices,
        plain=plain_t,
        near=near_t,
        expected_plain=None if family.expected_plain is None else tuple(map(family.expected_plain, indices)),
        expected_near=None if family.expected_near is None else tuple(map(family.expected_near, indices)),
        plain_unbounded=unbounded,
        near_bounded=near_bounded,
        claim=family.claim,
        verdict=verdict,
    )
