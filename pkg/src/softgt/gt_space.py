"""Classical generalized topologies on a finite universe.

A generalized topology (GT) is a family of subsets of ``X`` that contains the
empty set and is closed under arbitrary unions; unlike a topology it need not
contain ``X`` or be closed under intersections.  Subsets are integer masks
over ``Universe`` positions.  A GTS keeps the generating base it was built
from and derives interior and closure from it directly, so the full open
family is only materialized when someone asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence, Union

from ._search import EXACT_LIMIT, NotACover, minimum_cover
from .errors import PreconditionError, StructuralError
from .soft_core import Universe, format_points

SetLike = Union[int, Iterable[Hashable]]

__all__ = [
    "GTS",
    "generate_gt",
    "as_mask",
    "gt_interior",
    "gt_closure",
    "gt_is_open",
    "gt_is_closed",
    "gt_is_regular_open",
    "gt_is_regular_closed",
    "gt_regular_open_sets",
    "is_quasi_topology",
    "is_mu_open_cover",
    "is_mu_locally_finite",
    "is_mu_open_refinement",
    "gt_minimal_subcover",
    "gt_minimal_near_subcover",
    "gt_minimal_subcover_size",
    "gt_minimal_near_subcover_size",
]


def as_mask(universe: Universe, subset: SetLike) -> int:
    """Accept either a mask or an iterable of points; reject anything outside X."""
    if isinstance(subset, int):
        if subset < 0 or subset & ~universe.full:
            raise StructuralError(f"{subset:#x} is not a subset of {universe!r}")
        return subset
    return universe.mask(subset)


def union_closure(generators: Iterable[int]) -> frozenset[int]:
    """All unions of subfamilies of ``generators``, the empty union included."""
    opens = {0}
    for g in generators:
        opens |= {o | g for o in opens}
    return frozenset(opens)


@dataclass(frozen=True, eq=False)
class GTS:
    universe: Universe
    generators: tuple[int, ...]
    _span: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        gens = tuple(sorted({as_mask(self.universe, g) for g in self.generators} - {0}))
        object.__setattr__(self, "generators", gens)
        span = 0
        for g in gens:
            span |= g
        object.__setattr__(self, "_span", span)

    @property
    def mu_space(self) -> bool:
        """True iff X itself is open."""
        return self._span == self.universe.full

    @cached_property
    def opens(self) -> tuple[int, ...]:
        return tuple(sorted(union_closure(self.generators), key=lambda m: (m.bit_count(), m)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GTS):
            return NotImplemented
        return self.universe == other.universe and set(self.opens) == set(other.opens)

    def __hash__(self) -> int:
        return hash((self.universe, frozenset(self.opens)))

    def format(self, mask: int) -> str:
        return format_points(self.universe, mask)

    def __repr__(self) -> str:
        return f"GTS({self.universe!r}, base=[{', '.join(self.format(g) for g in self.generators)}])"


def generate_gt(universe: Universe, base: Iterable[SetLike]) -> GTS:
    """The smallest GT on ``universe`` containing every member of ``base``."""
    return GTS(universe, tuple(as_mask(universe, b) for b in base))


def gt_interior(g: GTS, subset: SetLike) -> int:
    """Union of all open sets inside ``subset``."""
    a = as_mask(g.universe, subset)
    out = 0
    for b in g.generators:
        if b & ~a == 0:
            out |= b
    return out


def gt_closure(g: GTS, subset: SetLike) -> int:
    """Intersection of all closed supersets; equals X minus the interior of the complement."""
    a = as_mask(g.universe, subset)
    full = g.universe.full
    return full & ~gt_interior(g, full & ~a)


def gt_is_open(g: GTS, subset: SetLike) -> bool:
    a = as_mask(g.universe, subset)
    return gt_interior(g, a) == a


def gt_is_closed(g: GTS, subset: SetLike) -> bool:
    a = as_mask(g.universe, subset)
    return gt_is_open(g, g.universe.full & ~a)


def gt_is_regular_open(g: GTS, subset: SetLike) -> bool:
    a = as_mask(g.universe, subset)
    return gt_interior(g, gt_closure(g, a)) == a


def gt_is_regular_closed(g: GTS, subset: SetLike) -> bool:
    a = as_mask(g.universe, subset)
    return gt_closure(g, gt_interior(g, a)) == a


def gt_regular_open_sets(g: GTS) -> tuple[int, ...]:
    return tuple(o for o in g.opens if gt_is_regular_open(g, o))


def is_quasi_topology(g: GTS) -> bool:
    """Diagnostic: is the open family closed under finite intersections?"""
    opens = set(g.opens)
    ordered = g.opens
    return all(a & b in opens for i, a in enumerate(ordered) for b in ordered[i + 1:])


def _family(g: GTS, fam: Iterable[SetLike]) -> list[int]:
    return [as_mask(g.universe, m) for m in fam]


def is_mu_open_cover(g: GTS, fam: Iterable[SetLike]) -> bool:
    members = _family(g, fam)
    covered = 0
    for m in members:
        covered |= m
    return covered == g.universe.full and all(gt_is_open(g, m) for m in members)


def is_mu_locally_finite(g: GTS, fam: Iterable[SetLike]) -> bool:
    """Every point has an open neighbourhood meeting finitely many members of ``fam``.

    Families here are finite, so the finiteness clause always holds once a
    neighbourhood exists; the predicate reduces to every point lying in some
    open set.
    """
    if not g.mu_space:
        raise PreconditionError("local finiteness is defined on mu-spaces only")
    _family(g, fam)
    return all(any(b >> i & 1 for b in g.generators) for i in range(len(g.universe)))


def is_mu_open_refinement(g: GTS, refinement: Iterable[SetLike], cover: Iterable[SetLike]) -> bool:
    """``refinement`` is an open cover and each member sits inside some member of ``cover``."""
    finer = _family(g, refinement)
    coarser = _family(g, cover)
    if not is_mu_open_cover(g, finer):
        return False
    return all(any(u & ~v == 0 for v in coarser) for u in finer)


def _require_cover(g: GTS, members: Sequence[int]) -> None:
    if not g.mu_space:
        raise PreconditionError("subcovers are defined on mu-spaces only")
    if not is_mu_open_cover(g, members):
        raise PreconditionError("family is not a mu-open cover of X")


def gt_minimal_subcover(g: GTS, cover: Iterable[SetLike], *, limit: int = EXACT_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Exact smallest subcover: ``(size, lexicographically smallest indices)``."""
    members = _family(g, cover)
    _require_cover(g, members)
    return minimum_cover(g.universe.full, members, limit=limit)


def gt_minimal_near_subcover(g: GTS, cover: Iterable[SetLike], *, limit: int = EXACT_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Smallest subfamily whose regularizations ``i(c(V))`` cover X."""
    members = _family(g, cover)
    _require_cover(g, members)
    regularized = [gt_interior(g, gt_closure(g, m)) for m in members]
    try:
        return minimum_cover(g.universe.full, regularized, limit=limit)
    except NotACover:  # pragma: no cover - V <= i(c(V)) for open V
        raise AssertionError("regularized open cover must still cover X")


def gt_minimal_subcover_size(g: GTS, cover: Iterable[SetLike]) -> int:
    return gt_minimal_subcover(g, cover)[0]


def gt_minimal_near_subcover_size(g: GTS, cover: Iterable[SetLike]) -> int:
    return gt_minimal_near_subcover(g, cover)[0]
