"""Soft open covers: validation, exact subcover search, near compactness, FIP.

On a finite space every cover is finite, so "admits a finite subcover" is
always true.  The informative quantities are minimal sizes: the smallest
subcover, and the smallest near-subcover (a subfamily whose members'
interior-of-closure already covers the carrier).  Reports carry a
``finite_trivial`` flag so a bare ``True`` is never mistaken for evidence
about an infinite space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._search import EXACT_LIMIT, NotACover, minimum_cover
from .errors import PreconditionError, StructuralError, ThresholdExceeded
from .sgt_space import SGTS, enumerate_regular_open
from .soft_core import SoftSet, is_soft_subset

__all__ = [
    "CoverError",
    "SoftCover",
    "CompactnessReport",
    "NearCompactnessReport",
    "FipRecord",
    "validate_cover",
    "is_soft_cover",
    "minimal_subcover",
    "minimal_near_subcover",
    "cover_report",
    "irredundant_covers",
    "regular_open_covers",
    "is_soft_n_mu_compact_finite",
    "fip_nonempty_intersection_check",
    "relative_complements",
]

IRREDUNDANT_LIMIT = 200_000
FIP_BRUTE_FORCE_LIMIT = 16


class CoverError(PreconditionError):
    """A family failed to be a soft open cover; carries the first offending item."""

    def __init__(self, message: str, *, uncovered: tuple | None = None, non_open_index: int | None = None):
        super().__init__(message)
        self.uncovered = uncovered
        self.non_open_index = non_open_index


@dataclass(frozen=True)
class SoftCover:
    space: SGTS
    members: tuple[SoftSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def subfamily(self, indices: Iterable[int]) -> tuple[SoftSet, ...]:
        return tuple(self.members[i] for i in indices)


def _first_uncovered(carrier: SoftSet, covered: int) -> tuple:
    missing = carrier.bits & ~covered
    n = len(carrier.universe)
    low = (missing & -missing).bit_length() - 1
    return carrier.parameters.items[low // n], carrier.universe.points[low % n]


def validate_cover(space: SGTS, members: Iterable[SoftSet]) -> SoftCover:
    """Check that ``members`` are soft open sets whose union is the carrier."""
    if not space.strong:
        raise PreconditionError("soft open covers are defined on strong spaces only")
    members = tuple(members)
    covered = 0
    for i, m in enumerate(members):
        if not is_soft_subset(m, space.carrier):
            raise StructuralError(f"member {i} ({m}) is not a soft subset of the carrier")
        if space._interior(m.bits) != m.bits:
            raise CoverError(f"member {i} ({m}) is not soft open", non_open_index=i)
        covered |= m.bits
    if covered != space.carrier.bits:
        r, x = _first_uncovered(space.carrier, covered)
        raise CoverError(f"point {x} at parameter {r} is not covered", uncovered=(r, x))
    return SoftCover(space, members)


def is_soft_cover(space: SGTS, members: Iterable[SoftSet]) -> bool:
    try:
        validate_cover(space, members)
    except CoverError:
        return False
    return True


def minimal_subcover(cover: SoftCover, *, limit: int = EXACT_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Exact smallest subcover as ``(size, lexicographically smallest indices)``."""
    return minimum_cover(cover.space.carrier.bits, [m.bits for m in cover.members], limit=limit)


def minimal_near_subcover(cover: SoftCover, *, limit: int = EXACT_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Smallest subfamily whose interiors-of-closures cover the carrier."""
    g = cover.space
    regularized = [g._regularize(m.bits) for m in cover.members]
    return minimum_cover(g.carrier.bits, regularized, limit=limit)


@dataclass(frozen=True)
class CompactnessReport:
    plain_minimal_subcover_size: int
    near_minimal_subcover_size: int
    regular_open_cover_flag: bool
    witness_subfamily_indices: dict[str, tuple[int, ...]]
    finite_trivial: bool = True


def cover_report(cover: SoftCover) -> CompactnessReport:
    plain, plain_idx = minimal_subcover(cover)
    near, near_idx = minimal_near_subcover(cover)
    g = cover.space
    regular = all(g._regularize(m.bits) == m.bits for m in cover.members)
    return CompactnessReport(
        plain_minimal_subcover_size=plain,
        near_minimal_subcover_size=near,
        regular_open_cover_flag=regular,
        witness_subfamily_indices={"plain": plain_idx, "near": near_idx},
    )


def irredundant_covers(target: int, masks: Sequence[int], *, limit: int = IRREDUNDANT_LIMIT) -> Iterator[tuple[int, ...]]:
    """Every subfamily covering ``target`` from which no member can be dropped.

    Branches on the lowest uncovered bit; a partial family is abandoned as soon
    as one of its members has no bit that only it covers.
    """
    masks = [m & target for m in masks]
    total = 0
    for m in masks:
        total |= m
    if total != target:
        raise NotACover(target & ~total)
    seen: set[tuple[int, ...]] = set()

    def private_ok(chosen: tuple[int, ...]) -> bool:
        for j in chosen:
            others = 0
            for k in chosen:
                if k != j:
                    others |= masks[k]
            if masks[j] & ~others == 0:
                return False
        return True

    def walk(chosen: tuple[int, ...], covered: int) -> Iterator[tuple[int, ...]]:
        if covered == target:
            key = tuple(sorted(chosen))
            if key not in seen:
                if len(seen) >= limit:
                    raise ThresholdExceeded(f"more than {limit} irredundant covers")
                seen.add(key)
                yield key
            return
        missing = target & ~covered
        low = missing & -missing
        for j, m in enumerate(masks):
            if m & low and j not in chosen:
                nxt = chosen + (j,)
                if private_ok(nxt):
                    yield from walk(nxt, covered | m)

    yield from walk((), 0)


def regular_open_covers(space: SGTS) -> tuple[tuple[SoftSet, ...], list[tuple[int, ...]]]:
    """Irredundant covers of the carrier drawn from the regular-open sets.

    Returns the regular-open family and the index tuples into it, sorted
    by size then lexicographically.  Members adding no coverage are pruned,
    so every regular-open cover contains at least one of these.
    """
    regular = enumerate_regular_open(space)
    covers = sorted(irredundant_covers(space.carrier.bits, [u.bits for u in regular]), key=lambda t: (len(t), t))
    return regular, covers


@dataclass(frozen=True)
class NearCompactnessReport:
    n_mu_compact: bool
    near_formulation: bool
    formulations_agree: bool
    regular_open_covers_enumerated: int
    max_plain_over_regular_open_covers: int
    max_near_over_open_covers: int
    worst_cover: CompactnessReport | None
    worst_cover_members: tuple[SoftSet, ...]
    finite_trivial: bool = True


def is_soft_n_mu_compact_finite(space: SGTS) -> tuple[bool, NearCompactnessReport]:
    """Decide soft near compactness of a finite strong space, both ways.

    Formulation one: every regular-open cover has a finite subcover.
    Formulation two: every open cover has a finite near-subcover.  Both are
    true on finite spaces; the report carries the largest minimal subcover
    over regular-open covers and the largest minimal near-subcover over the
    open covers examined, which must coincide.
    """
    if not space.strong:
        raise PreconditionError("soft near compactness is defined on strong spaces only")
    regular, covers = regular_open_covers(space)

    max_plain = 0
    worst: tuple[int, ...] = ()
    for idx in covers:
        if len(idx) > max_plain:
            max_plain, worst = len(idx), idx
    regular_verdict = bool(covers)

    # every irredundant regular-open cover is an open cover whose near-subcover
    # cannot shrink; other open covers regularize into regular-open covers
    max_near = 0
    near_verdict = True
    probe_covers = [tuple(regular[i] for i in idx) for idx in covers]
    probe_covers.append(tuple(space.generators) or (space.carrier,))
    for members in probe_covers:
        try:
            c = validate_cover(space, members)
        except CoverError:
            near_verdict = False
            continue
        if len(c) > EXACT_LIMIT:
            continue
        size, _ = minimal_near_subcover(c)
        max_near = max(max_near, size)

    worst_members = tuple(regular[i] for i in worst)
    worst_report = cover_report(validate_cover(space, worst_members)) if covers else None
    return regular_verdict, NearCompactnessReport(
        n_mu_compact=regular_verdict,
        near_formulation=near_verdict,
        formulations_agree=(regular_verdict == near_verdict) and max_plain == max_near,
        regular_open_covers_enumerated=len(covers),
        max_plain_over_regular_open_covers=max_plain,
        max_near_over_open_covers=max_near,
        worst_cover=worst_report,
        worst_cover_members=worst_members,
    )


def relative_complements(space: SGTS, family: Iterable[SoftSet]) -> tuple[SoftSet, ...]:
    c = space.carrier
    return tuple(c.with_bits(c.bits & ~m.bits) for m in family)


@dataclass(frozen=True)
class FipRecord:
    fip_holds: bool
    total_intersection: SoftSet
    total_intersection_nonempty: bool
    space_n_mu_compact: bool
    consistent: bool
    empty_subfamily: tuple[int, ...] | None = None


def fip_nonempty_intersection_check(space: SGTS, family: Iterable[SoftSet]) -> FipRecord:
    """Finite intersection property of a family of regular-closed sets.

    For a finite family the property is decided by scanning every non-empty
    subfamily (up to 16 members); larger families use the total intersection,
    which has the same verdict because it lies inside every sub-intersection.
    """
    family = tuple(family)
    for i, f in enumerate(family):
        bits = space._check(f)
        if space._closure(space._interior(bits)) != bits:
            raise PreconditionError(f"member {i} ({f}) is not soft regular closed")

    total = space.carrier.bits
    for f in family:
        total &= f.bits

    empty_sub: tuple[int, ...] | None = None
    if len(family) <= FIP_BRUTE_FORCE_LIMIT:
        for mask in range(1, 1 << len(family)):
            meet = space.carrier.bits
            for i, f in enumerate(family):
                if mask >> i & 1:
                    meet &= f.bits
            if not meet:
                empty_sub = tuple(i for i in range(len(family)) if mask >> i & 1)
                break
        fip = empty_sub is None
    else:
        fip = total != 0

    compact = space.strong  # finite strong spaces are always soft n-mu-compact
    # on the empty carrier the empty family has the FIP vacuously but an empty meet;
    # the implication is only meaningful for non-empty carriers
    consistent = (not (compact and fip)) or total != 0 or not space.carrier
    return FipRecord(
        fip_holds=fip,
        total_intersection=space.carrier.with_bits(total),
        total_intersection_nonempty=total != 0,
        space_n_mu_compact=compact,
        consistent=consistent,
        empty_subfamily=empty_sub,
    )
