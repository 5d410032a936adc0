"""Finite soft-set algebra.

A soft set over a universe ``X`` and a parameter set ``R`` assigns a subset of
``X`` to every parameter.  Each subset is a bit-vector indexed by the universe
ordering, and the vectors of all parameters are packed into one integer:
parameter ``j`` owns bits ``[j*|X|, (j+1)*|X|)``.  Equality, hashing and all
set operations are therefore plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import StructuralError

__all__ = [
    "Universe",
    "ParameterSet",
    "SoftSet",
    "soft_union",
    "soft_intersection",
    "soft_difference",
    "soft_complement_absolute",
    "soft_relative_complement",
    "is_soft_subset",
    "is_soft_point",
    "soft_subsets",
    "popcount",
    "format_points",
]


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class _Ordered:
    items: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        if not items:
            raise StructuralError(f"{type(self).__name__} must be non-empty")
        index = {item: i for i, item in enumerate(items)}
        if len(index) != len(items):
            raise StructuralError(f"duplicate identifiers in {type(self).__name__}: {items!r}")
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __contains__(self, item: object) -> bool:
        return item in self._index

    def index(self, item: Hashable) -> int:
        try:
            return self._index[item]
        except (KeyError, TypeError):
            raise StructuralError(f"{item!r} is not in {type(self).__name__.lower()} {self.items!r}") from None


class Universe(_Ordered):
    """The finite initial universe ``X``; point order fixes bit positions."""

    def __init__(self, points: Iterable[Hashable]) -> None:
        super().__init__(tuple(points))

    @property
    def points(self) -> tuple:
        return self.items

    @property
    def full(self) -> int:
        return (1 << len(self.items)) - 1

    def mask(self, points: Iterable[Hashable]) -> int:
        bits = 0
        for x in points:
            bits |= 1 << self.index(x)
        return bits

    def members(self, mask: int) -> tuple:
        if mask & ~self.full:
            raise StructuralError(f"mask {mask:#x} has bits outside the universe")
        return tuple(x for i, x in enumerate(self.items) if mask >> i & 1)

    def __repr__(self) -> str:
        return f"Universe({list(self.items)!r})"


class ParameterSet(_Ordered):
    """The finite parameter set ``R``."""

    def __init__(self, parameters: Iterable[Hashable]) -> None:
        super().__init__(tuple(parameters))

    @property
    def parameters(self) -> tuple:
        return self.items

    def __repr__(self) -> str:
        return f"ParameterSet({list(self.items)!r})"


def format_points(universe: Universe, mask: int) -> str:
    return "{" + ",".join(str(x) for x in universe.members(mask)) + "}"


@dataclass(frozen=True)
class SoftSet:
    """An immutable soft set: a total map from parameters to subsets of the universe.

    Parameters outside the support carry the empty subset and are not shown
    by ``str``.
    """

    universe: Universe
    parameters: ParameterSet
    bits: int

    def __post_init__(self) -> None:
        width = len(self.universe) * len(self.parameters)
        if self.bits < 0 or self.bits >> width:
            raise StructuralError(f"bits {self.bits:#x} do not fit {len(self.parameters)} x {len(self.universe)}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, universe: Universe, parameters: ParameterSet, rows: Sequence[int]) -> SoftSet:
        if len(rows) != len(parameters):
            raise StructuralError(f"expected {len(parameters)} rows, got {len(rows)}")
        n = len(universe)
        bits = 0
        for j, row in enumerate(rows):
            if row < 0 or row & ~universe.full:
                raise StructuralError(f"row {row:#x} escapes the universe")
            bits |= row << (j * n)
        return cls(universe, parameters, bits)

    @classmethod
    def from_mapping(
        cls,
        universe: Universe,
        parameters: ParameterSet,
        assignment: Mapping[Hashable, Iterable[Hashable]],
    ) -> SoftSet:
        """Build from ``{parameter: points}``; unlisted parameters map to the empty set."""
        rows = [0] * len(parameters)
        for r, points in assignment.items():
            rows[parameters.index(r)] = universe.mask(points)
        return cls.from_rows(universe, parameters, rows)

    @classmethod
    def empty(cls, universe: Universe, parameters: ParameterSet) -> SoftSet:
        return cls(universe, parameters, 0)

    @classmethod
    def universal(
        cls,
        universe: Universe,
        parameters: ParameterSet,
        support: Iterable[Hashable] | None = None,
    ) -> SoftSet:
        """The A-universal soft set: every parameter of ``support`` (default all) maps to X."""
        support = parameters.items if support is None else support
        return cls.from_mapping(universe, parameters, {r: universe.points for r in support})

    # -- access -------------------------------------------------------------

    @property
    def width(self) -> int:
        return len(self.universe) * len(self.parameters)

    def row(self, r: Hashable) -> int:
        """Bit-vector of the subset assigned to parameter ``r``."""
        n = len(self.universe)
        return self.bits >> (self.parameters.index(r) * n) & self.universe.full

    def rows(self) -> tuple[int, ...]:
        n = len(self.universe)
        full = self.universe.full
        return tuple(self.bits >> (j * n) & full for j in range(len(self.parameters)))

    def assignment(self, r: Hashable) -> frozenset:
        return frozenset(self.universe.members(self.row(r)))

    def as_dict(self) -> dict:
        """Support parameters mapped to their point tuples, in canonical order."""
        return {
            r: self.universe.members(row)
            for r, row in zip(self.parameters, self.rows())
            if row
        }

    @property
    def support(self) -> tuple:
        return tuple(r for r, row in zip(self.parameters, self.rows()) if row)

    def is_empty(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def with_bits(self, bits: int) -> SoftSet:
        return SoftSet(self.universe, self.parameters, bits)

    # -- operators ----------------------------------------------------------

    def __or__(self, other: SoftSet) -> SoftSet:
        return soft_union(self, other)

    def __and__(self, other: SoftSet) -> SoftSet:
        return soft_intersection(self, other)

    def __sub__(self, other: SoftSet) -> SoftSet:
        return soft_difference(self, other)

    def __le__(self, other: SoftSet) -> bool:
        return is_soft_subset(self, other)

    def __ge__(self, other: SoftSet) -> bool:
        return is_soft_subset(other, self)

    def __str__(self) -> str:
        pairs = [
            f"({r},{format_points(self.universe, row)})"
            for r, row in zip(self.parameters, self.rows())
            if row
        ]
        return "{" + ",".join(pairs) + "}"

    def __repr__(self) -> str:
        return f"SoftSet({self})"


def _check_compatible(s: SoftSet, t: SoftSet) -> None:
    if s.universe is t.universe and s.parameters is t.parameters:
        return
    if s.universe != t.universe or s.parameters != t.parameters:
        raise StructuralError("soft sets are defined over different universes or parameter sets")


def soft_union(s: SoftSet, t: SoftSet) -> SoftSet:
    _check_compatible(s, t)
    return s.with_bits(s.bits | t.bits)


def soft_intersection(s: SoftSet, t: SoftSet) -> SoftSet:
    _check_compatible(s, t)
    return s.with_bits(s.bits & t.bits)


def soft_difference(s: SoftSet, t: SoftSet) -> SoftSet:
    _check_compatible(s, t)
    return s.with_bits(s.bits & ~t.bits)


def soft_complement_absolute(s: SoftSet) -> SoftSet:
    """Complement against ``X`` at every parameter, regardless of any carrier."""
    full = (1 << s.width) - 1
    return s.with_bits(full & ~s.bits)


def soft_relative_complement(carrier: SoftSet, s: SoftSet) -> SoftSet:
    if not is_soft_subset(s, carrier):
        raise StructuralError(f"{s} is not a soft subset of {carrier}")
    return soft_difference(carrier, s)


def is_soft_subset(s: SoftSet, t: SoftSet) -> bool:
    """True iff every ``s.assignment(r)`` is contained in ``t.assignment(r)``."""
    _check_compatible(s, t)
    return s.bits & ~t.bits == 0


def is_soft_point(x: Hashable, s: SoftSet) -> bool:
    """True iff ``x`` belongs to the assignment of every parameter."""
    i = s.universe.index(x)
    return all(row >> i & 1 for row in s.rows())


def soft_subsets(s: SoftSet) -> Iterator[SoftSet]:
    """Every soft subset of ``s`` (its soft power set), smallest bit pattern first."""
    bits = s.bits
    sub = 0
    while True:
        yield s.with_bits(sub)
        if sub == bits:
            return
        sub = (sub - bits) & bits
