"""Soft generalized topologies on a carrier soft set.

An SGTS over a carrier ``S_A`` is a union-closed family of soft subsets of
``S_A`` containing the empty soft set.  It is stored through a generating
basis: the open family is every union of basis members.  Interior, closure
and every regularity test work from the basis alone.

Closed sets are relative complements ``carrier \\ open``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable

from .errors import StructuralError
from .gt_space import GTS, union_closure
from .soft_core import SoftSet, is_soft_subset, soft_intersection, soft_union

__all__ = [
    "SGTS",
    "generate_sgt",
    "sgt_from_opens",
    "is_open",
    "is_closed",
    "is_clopen",
    "soft_interior",
    "soft_closure",
    "is_regular_open",
    "is_regular_closed",
    "enumerate_regular_open",
    "enumerate_regular_closed",
    "subspace",
    "project",
]


@dataclass(frozen=True, eq=False)
class SGTS:
    """A soft generalized topological space ``(carrier, mu)``."""

    carrier: SoftSet
    generators: tuple[SoftSet, ...]
    _gen_bits: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        bits = set()
        for b in self.generators:
            if not is_soft_subset(b, self.carrier):
                raise StructuralError(f"basis member {b} is not a soft subset of the carrier {self.carrier}")
            bits.add(b.bits)
        bits.discard(0)
        ordered = tuple(sorted(bits))
        object.__setattr__(self, "_gen_bits", ordered)
        object.__setattr__(self, "generators", tuple(self.carrier.with_bits(b) for b in ordered))

    @property
    def universe(self):
        return self.carrier.universe

    @property
    def parameters(self):
        return self.carrier.parameters

    @cached_property
    def strong(self) -> bool:
        """True iff the carrier itself is open."""
        span = 0
        for b in self._gen_bits:
            span |= b
        return span == self.carrier.bits

    @cached_property
    def open_bits(self) -> tuple[int, ...]:
        return tuple(sorted(union_closure(self._gen_bits), key=lambda m: (m.bit_count(), m)))

    @property
    def opens(self) -> tuple[SoftSet, ...]:
        """Every open soft set, ordered by size then bit pattern."""
        return tuple(self.carrier.with_bits(b) for b in self.open_bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SGTS):
            return NotImplemented
        return self.carrier == other.carrier and set(self.open_bits) == set(other.open_bits)

    def __hash__(self) -> int:
        return hash((self.carrier, frozenset(self.open_bits)))

    # raw bit-level operators; public functions below validate and wrap
    def _interior(self, bits: int) -> int:
        out = 0
        for b in self._gen_bits:
            if b & ~bits == 0:
                out |= b
        return out

    def _closure(self, bits: int) -> int:
        c = self.carrier.bits
        return c & ~self._interior(c & ~bits)

    def _regularize(self, bits: int) -> int:
        return self._interior(self._closure(bits))

    def _check(self, s: SoftSet) -> int:
        if not is_soft_subset(s, self.carrier):
            raise StructuralError(f"{s} is not a soft subset of the carrier {self.carrier}")
        return s.bits


def generate_sgt(carrier: SoftSet, basis: Iterable[SoftSet]) -> SGTS:
    """The smallest soft generalized topology on ``carrier`` containing ``basis``."""
    return SGTS(carrier, tuple(basis))


def sgt_from_opens(carrier: SoftSet, opens: Iterable[SoftSet]) -> SGTS:
    """Wrap an explicitly listed open family, rejecting one that is not union-closed."""
    opens = tuple(opens)
    g = SGTS(carrier, opens)
    given = {o.bits for o in opens} | {0}
    if given != set(g.open_bits):
        missing = sorted(set(g.open_bits) - given)
        raise StructuralError(
            f"family is not closed under unions; missing {carrier.with_bits(missing[0])}"
        )
    return g


def is_open(g: SGTS, s: SoftSet) -> bool:
    bits = g._check(s)
    return g._interior(bits) == bits


def is_closed(g: SGTS, s: SoftSet) -> bool:
    bits = g._check(s)
    c = g.carrier.bits
    return g._interior(c & ~bits) == c & ~bits


def is_clopen(g: SGTS, s: SoftSet) -> bool:
    return is_open(g, s) and is_closed(g, s)


def soft_interior(g: SGTS, s: SoftSet) -> SoftSet:
    """Union of every open soft set contained in ``s``."""
    return s.with_bits(g._interior(g._check(s)))


def soft_closure(g: SGTS, s: SoftSet) -> SoftSet:
    """Smallest closed soft set containing ``s``."""
    return s.with_bits(g._closure(g._check(s)))


def is_regular_open(g: SGTS, s: SoftSet) -> bool:
    bits = g._check(s)
    return g._regularize(bits) == bits


def is_regular_closed(g: SGTS, s: SoftSet) -> bool:
    bits = g._check(s)
    return g._closure(g._interior(bits)) == bits


def enumerate_regular_open(g: SGTS) -> tuple[SoftSet, ...]:
    return tuple(g.carrier.with_bits(b) for b in g.open_bits if g._regularize(b) == b)


def enumerate_regular_closed(g: SGTS) -> tuple[SoftSet, ...]:
    c = g.carrier.bits
    closed = sorted((c & ~b for b in g.open_bits), key=lambda m: (m.bit_count(), m))
    return tuple(g.carrier.with_bits(b) for b in closed if g._closure(g._interior(b)) == b)


def subspace(g: SGTS, b: SoftSet) -> SGTS:
    """The trace topology ``{v & b : v open}`` on ``b``.

    Tracing a basis gives a basis of the trace, since intersection with ``b``
    distributes over unions.
    """
    g._check(b)
    return SGTS(b, tuple(soft_intersection(v, b) for v in g.generators))


def project(g: SGTS, r: Hashable) -> GTS:
    """The classical GT ``{v(r) : v open}`` read off at parameter ``r``."""
    if r not in g.parameters:
        raise StructuralError(f"unknown parameter {r!r}")
    return GTS(g.universe, tuple(v.row(r) for v in g.generators))


def union_of(carrier: SoftSet, members: Iterable[SoftSet]) -> SoftSet:
    out = carrier.with_bits(0)
    for m in members:
        out = soft_union(out, m)
    return out
