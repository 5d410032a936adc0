"""Randomized law suites over small generated spaces.

Every check enumerates exhaustively inside each instance; randomness only
picks the instances.  Each law draws from its own stream seeded by the suite
seed and the law name, so a run is reproducible and laws are independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .cover_engine import (
    fip_nonempty_intersection_check,
    irredundant_covers,
    is_soft_cover,
    is_soft_n_mu_compact_finite,
    minimal_near_subcover,
    minimal_subcover,
    relative_complements,
    validate_cover,
)
from .gt_space import GTS, gt_closure, gt_interior, gt_is_regular_open, is_mu_open_cover
from .sgt_space import (
    SGTS,
    enumerate_regular_open,
    generate_sgt,
    is_regular_closed,
    is_regular_open,
    project,
    soft_closure,
    soft_interior,
    subspace,
)
from .soft_core import ParameterSet, SoftSet, Universe, soft_subsets

__all__ = [
    "LawResult",
    "random_sgts",
    "random_gts",
    "LAWS",
    "run_law",
    "run_lawsuite",
]

DEFAULT_SEED = 20160101
MAX_REPORTED = 5


def random_sgts(
    rng: random.Random,
    *,
    max_points: int = 5,
    max_params: int = 3,
    max_basis: int = 6,
    a_universal: bool = False,
    separable: bool = False,
    strong: bool = True,
    intersection_closed: bool = False,
) -> SGTS:
    """A random finite SGTS.

    ``a_universal`` makes the carrier assign X to every parameter.
    ``separable`` draws every basis member inside a single parameter, so the
    open family is the product of its projections.  ``strong`` patches the
    basis so that its union is the carrier.  ``intersection_closed`` closes
    the basis under finite intersections, which makes the open family a
    quasi-topology.
    """
    n = rng.randint(1, max_points)
    p = rng.randint(1, max_params)
    X = Universe(f"x{i}" for i in range(1, n + 1))
    R = ParameterSet(f"r{j}" for j in range(1, p + 1))
    width = n * p
    carrier_bits = (1 << width) - 1 if a_universal else rng.getrandbits(width)
    carrier = SoftSet(X, R, carrier_bits)

    def draw() -> int:
        if separable:
            j = rng.randrange(p)
            return (rng.getrandbits(n) << (j * n)) & carrier_bits
        return rng.getrandbits(width) & carrier_bits

    basis = [draw() for _ in range(rng.randint(0, max_basis))]
    if strong:
        span = 0
        for b in basis:
            span |= b
        missing = carrier_bits & ~span
        if missing:
            if separable:
                # one patch per parameter keeps members single-parameter
                full_row = (1 << n) - 1
                for j in range(p):
                    part = missing & (full_row << (j * n))
                    if part:
                        basis.append(part)
            elif len(basis) < max_basis:
                basis.append(missing)
            else:
                basis[-1] |= missing
    if intersection_closed:
        closed = set(basis)
        frontier = set(basis)
        while frontier:
            fresh = {a & b for a in frontier for b in closed} - closed
            closed |= fresh
            frontier = fresh
        basis = sorted(closed)
    return generate_sgt(carrier, [carrier.with_bits(b) for b in basis])


def random_gts(rng: random.Random, *, max_points: int = 6, max_basis: int = 6, mu_space: bool = True) -> GTS:
    n = rng.randint(1, max_points)
    X = Universe(range(1, n + 1))
    base = [rng.getrandbits(n) for _ in range(rng.randint(0, max_basis))]
    if mu_space:
        base.append(X.full)
    return GTS(X, tuple(base))


@dataclass
class LawResult:
    name: str
    instances: int = 0
    checks: int = 0
    failures: int = 0
    examples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, message: str) -> None:
        self.failures += 1
        if len(self.examples) < MAX_REPORTED:
            self.examples.append(message)

    def payload(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "checks": self.checks,
            "failures": self.failures,
            "examples": list(self.examples),
            "passed": self.passed,
        }


def _describe(g: SGTS) -> str:
    return f"carrier={g.carrier} basis=[{', '.join(map(str, g.generators))}]"


# -- individual laws -------------------------------------------------------


def law_regularization_of_open_and_closed(g: SGTS, res: LawResult) -> None:
    """Interior of a closed set is regular open; closure of an open set is regular closed."""
    for o in g.opens:
        f = g.carrier - o
        res.checks += 2
        if not is_regular_open(g, soft_interior(g, f)):
            res.fail(f"interior of closed {f} not regular open in {_describe(g)}")
        if not is_regular_closed(g, soft_closure(g, o)):
            res.fail(f"closure of open {o} not regular closed in {_describe(g)}")


def law_regular_sets_are_open_closed(g: SGTS, res: LawResult) -> None:
    c = g.carrier.bits
    opens = set(g.open_bits)
    for s in soft_subsets(g.carrier):
        res.checks += 1
        if is_regular_open(g, s) and s.bits not in opens:
            res.fail(f"regular open {s} is not open in {_describe(g)}")
        if is_regular_closed(g, s) and (c & ~s.bits) not in opens:
            res.fail(f"regular closed {s} is not closed in {_describe(g)}")


def law_operator_axioms(g: SGTS, res: LawResult) -> None:
    """Interior: deflationary, idempotent, monotone.  Closure: inflationary, idempotent, monotone."""
    subsets = list(soft_subsets(g.carrier))
    interior = {s.bits: g._interior(s.bits) for s in subsets}
    closure = {s.bits: g._closure(s.bits) for s in subsets}
    for s in subsets:
        b = s.bits
        res.checks += 1
        i, k = interior[b], closure[b]
        if i & ~b or g._interior(i) != i or b & ~k or g._closure(k) != k:
            res.fail(f"operator axiom broken at {s} in {_describe(g)}")
    # monotonicity along single-bit extensions implies it for all pairs
    for s in subsets:
        b = s.bits
        free = g.carrier.bits & ~b
        while free:
            low = free & -free
            free ^= low
            res.checks += 1
            if interior[b] & ~interior[b | low] or closure[b] & ~closure[b | low]:
                res.fail(f"monotonicity broken at {s} + bit {low:#x} in {_describe(g)}")


def law_regularization_idempotent(g: SGTS, res: LawResult) -> None:
    for s in soft_subsets(g.carrier):
        res.checks += 1
        once = g._regularize(s.bits)
        if g._regularize(once) != once:
            res.fail(f"int(cl(int(cl(s)))) != int(cl(s)) for s={s} in {_describe(g)}")


def law_gt_regularization_idempotent(g: GTS, res: LawResult) -> None:
    for a in range(g.universe.full + 1):
        res.checks += 1
        once = gt_interior(g, gt_closure(g, a))
        if gt_interior(g, gt_closure(g, once)) != once:
            res.fail(f"plain regularization not idempotent at {g.format(a)} in {g!r}")


def law_subspace_regular_trace(g: SGTS, res: LawResult) -> None:
    """For open ``b``: regular opens of the subspace are exactly traces of regular opens."""
    traces_source = enumerate_regular_open(g)
    for b in g.opens:
        res.checks += 1
        h = subspace(g, b)
        inside = {u.bits for u in enumerate_regular_open(h)}
        traced = {u.bits & b.bits for u in traces_source}
        if inside != traced:
            only_sub = sorted(inside - traced)
            only_trace = sorted(traced - inside)
            detail = []
            if only_sub:
                detail.append(f"regular open in subspace but no trace: {b.with_bits(only_sub[0])}")
            if only_trace:
                detail.append(f"trace not regular open in subspace: {b.with_bits(only_trace[0])}")
            res.fail(f"b={b} in {_describe(g)}: " + "; ".join(detail))


def _correspondence_probe_sets(g: SGTS, rng: random.Random) -> Iterator[SoftSet]:
    if g.carrier.width <= 10:
        yield from soft_subsets(g.carrier)
        return
    yield from g.opens
    for _ in range(256):
        yield g.carrier.with_bits(rng.getrandbits(g.carrier.width) & g.carrier.bits)


def law_a_universal_correspondence(g: SGTS, res: LawResult, rng: random.Random) -> None:
    """Soft cover and soft regularity verdicts agree with the per-parameter verdicts."""
    projections = {r: project(g, r) for r in g.parameters}
    opens = g.opens
    families = [tuple(g.generators), tuple(opens)]
    for _ in range(16):
        families.append(tuple(o for o in opens if rng.random() < 0.5))
    for fam in families:
        res.checks += 1
        soft = is_soft_cover(g, fam)
        plain = all(is_mu_open_cover(projections[r], [m.row(r) for m in fam]) for r in g.parameters)
        if soft != plain:
            res.fail(f"cover verdict soft={soft} projected={plain} for [{', '.join(map(str, fam))}] in {_describe(g)}")
    for s in _correspondence_probe_sets(g, rng):
        res.checks += 1
        soft = is_regular_open(g, s)
        plain = all(gt_is_regular_open(projections[r], s.row(r)) for r in g.parameters)
        if soft != plain:
            res.fail(f"regularity verdict soft={soft} projected={plain} for {s} in {_describe(g)}")


def law_formulation_equivalence(g: SGTS, res: LawResult) -> None:
    res.checks += 1
    verdict, report = is_soft_n_mu_compact_finite(g)
    if not (verdict and report.near_formulation and report.formulations_agree):
        res.fail(
            f"regular-cover verdict {verdict} / near verdict {report.near_formulation} / "
            f"max sizes {report.max_plain_over_regular_open_covers} vs {report.max_near_over_open_covers} in {_describe(g)}"
        )
    # near <= plain on the basis cover
    cover = validate_cover(g, g.generators or (g.carrier,))
    if len(cover) <= 24:
        res.checks += 1
        if minimal_near_subcover(cover)[0] > minimal_subcover(cover)[0]:
            res.fail(f"near subcover larger than plain subcover in {_describe(g)}")


def _subfamilies(regular: tuple[SoftSet, ...], target: int) -> Iterator[tuple[int, ...]]:
    k = len(regular)
    if k <= 12:
        for mask in range(1 << k):
            yield tuple(i for i in range(k) if mask >> i & 1)
        return
    for cover in irredundant_covers(target, [u.bits for u in regular]):
        yield cover
        for drop in range(len(cover)):
            yield cover[:drop] + cover[drop + 1:]


def law_fip_duality(g: SGTS, res: LawResult) -> None:
    """A regular-open family covers iff its complements have empty intersection."""
    regular = tuple(u for u in enumerate_regular_open(g) if u)
    for idx in _subfamilies(regular, g.carrier.bits):
        members = tuple(regular[i] for i in idx)
        complements = relative_complements(g, members)
        record = fip_nonempty_intersection_check(g, complements)
        covers = is_soft_cover(g, members)
        res.checks += 1
        if covers == record.total_intersection_nonempty:
            res.fail(f"cover={covers} but complement intersection {record.total_intersection} in {_describe(g)}")
        # an empty carrier makes the empty family a vacuous FIP family with empty meet
        if covers and record.fip_holds and g.carrier:
            res.fail(f"complements of a cover keep the FIP in {_describe(g)}")
        if g.carrier and not record.consistent:
            res.fail(f"FIP without non-empty intersection in {_describe(g)}")


# -- suite -------------------------------------------------------------------

Law = Callable[[random.Random, int], LawResult]


def _run_soft(name: str, check, *, pass_rng: bool = False, **gen) -> Law:
    def run(rng: random.Random, instances: int) -> LawResult:
        res = LawResult(name)
        for _ in range(instances):
            g = random_sgts(rng, **gen)
            res.instances += 1
            if pass_rng:
                check(g, res, rng)
            else:
                check(g, res)
        return res

    return run


def _run_plain(name: str, check, **gen) -> Law:
    def run(rng: random.Random, instances: int) -> LawResult:
        res = LawResult(name)
        for _ in range(instances):
            g = random_gts(rng, **gen)
            res.instances += 1
            check(g, res)
        return res

    return run


LAWS: dict[str, Law] = {
    "regularization_theorem": _run_soft("regularization_theorem", law_regularization_of_open_and_closed),
    "regular_sets_open_closed": _run_soft("regular_sets_open_closed", law_regular_sets_are_open_closed),
    "operator_axioms": _run_soft("operator_axioms", law_operator_axioms, strong=False),
    "regularization_idempotent": _run_soft("regularization_idempotent", law_regularization_idempotent, strong=False),
    "gt_regularization_idempotent": _run_plain("gt_regularization_idempotent", law_gt_regularization_idempotent),
    "subspace_regular_trace": _run_soft("subspace_regular_trace", law_subspace_regular_trace),
    "subspace_regular_trace_qt": _run_soft(
        "subspace_regular_trace_qt", law_subspace_regular_trace, intersection_closed=True
    ),
    "a_universal_correspondence": _run_soft(
        "a_universal_correspondence", law_a_universal_correspondence, pass_rng=True, a_universal=True
    ),
    "a_universal_correspondence_separable": _run_soft(
        "a_universal_correspondence_separable",
        law_a_universal_correspondence,
        pass_rng=True,
        a_universal=True,
        separable=True,
    ),
    "formulation_equivalence": _run_soft("formulation_equivalence", law_formulation_equivalence),
    "fip_duality": _run_soft("fip_duality", law_fip_duality),
}


def run_law(name: str, *, seed: int = DEFAULT_SEED, instances: int = 100) -> LawResult:
    # each law gets its own stream so adding a law never shifts another's instances
    rng = random.Random(f"{seed}:{name}")
    return LAWS[name](rng, instances)


def run_lawsuite(*, seed: int = DEFAULT_SEED, instances: int = 100, names=None) -> list[LawResult]:
    return [run_law(name, seed=seed, instances=instances) for name in (names or LAWS)]
