"""Command-line front end.

    softgt regular --fixture three_point
    softgt project --fixture three_point --param r2 --format machine
    softgt witness family_example_ones --n-max 10
    softgt lawsuite --seed 7 --instances 200

Exit status: 0 pass, 1 failed assertion or certification, 2 input error,
3 exact-search threshold exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, Union

from .cover_engine import (
    CoverError,
    cover_report,
    fip_nonempty_intersection_check,
    is_soft_n_mu_compact_finite,
    validate_cover,
)
from .document import ParseError, SpaceDocument, fixture_names, load, load_fixture
from .errors import CertificationError, PreconditionError, StructuralError, ThresholdExceeded
from .gt_space import (
    GTS,
    gt_is_regular_open,
    gt_minimal_near_subcover,
    gt_minimal_subcover,
    gt_regular_open_sets,
    is_quasi_topology,
)
from .laws import DEFAULT_SEED, LAWS, run_lawsuite
from .sgt_space import (
    SGTS,
    enumerate_regular_closed,
    enumerate_regular_open,
    is_open,
    project,
    subspace,
)
from .soft_core import SoftSet, format_points
from .witness_families import FAMILIES, growth_certificate

CHECKS = ("regular", "compactness", "fip", "subspace", "project", "witness", "lawsuite")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_THRESHOLD = 0, 1, 2, 3


@dataclass
class Report:
    check: str
    lines: list[str]
    payload: dict
    ok: bool = True

    def text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return "\n".join([*self.lines, f"{self.check}: {status}"]) + "\n"

    def machine(self) -> str:
        body = {"check": self.check, "ok": self.ok, **self.payload}
        return json.dumps(body, sort_keys=True, indent=2) + "\n"


def _s(s: SoftSet) -> str:
    return str(s)


def _need_soft(doc: SpaceDocument, check: str) -> SGTS:
    g = doc.build()
    if not isinstance(g, SGTS):
        raise PreconditionError(f"check {check!r} needs a soft document (with [parameters])")
    return g


def _named_lookup(doc: SpaceDocument) -> dict[int, str]:
    return {s.bits: name for name, s in doc.named_sets().items()} if doc.is_soft else {}


def _label(s: SoftSet, names: dict[int, str]) -> str:
    name = names.get(s.bits)
    return f"{name} = {s}" if name else str(s)


def check_regular(doc: SpaceDocument, opts) -> Report:
    g = doc.build()
    if isinstance(g, GTS):
        regular = gt_regular_open_sets(g)
        rows = [g.format(o) for o in g.opens]
        lines = [f"opens ({len(rows)}): {', '.join(rows)}", f"regular open: {', '.join(g.format(o) for o in regular)}"]
        lines.append(f"open but not regular open: {', '.join(g.format(o) for o in g.opens if o not in regular) or '-'}")
        return Report("regular", lines, {
            "opens": rows,
            "regular_open": [g.format(o) for o in regular],
            "open_not_regular_open": [g.format(o) for o in g.opens if o not in regular],
        })
    names = _named_lookup(doc)
    regular = enumerate_regular_open(g)
    regular_bits = {u.bits for u in regular}
    not_regular = [o for o in g.opens if o.bits not in regular_bits]
    closed_regular = enumerate_regular_closed(g)
    lines = [
        f"carrier: {g.carrier}  strong: {g.strong}  opens: {len(g.open_bits)}",
        "regular open:",
        *(f"  {_label(u, names)}" for u in regular),
        "open but not regular open:",
        *(f"  {_label(u, names)}" for u in not_regular),
        "regular closed:",
        *(f"  {_label(u, names)}" for u in closed_regular),
    ]
    return Report("regular", lines, {
        "carrier": _s(g.carrier),
        "strong": g.strong,
        "opens": [_s(o) for o in g.opens],
        "regular_open": [_s(u) for u in regular],
        "open_not_regular_open": [_s(u) for u in not_regular],
        "open_not_regular_open_names": [names[u.bits] for u in not_regular if u.bits in names],
        "regular_closed": [_s(u) for u in closed_regular],
    })


def check_compactness(doc: SpaceDocument, opts) -> Report:
    g = doc.build()
    covers = []
    ok = True
    if isinstance(g, GTS):
        for name, _ in doc.covers:
            members = doc.cover(name)
            plain, plain_idx = gt_minimal_subcover(g, members)
            near, near_idx = gt_minimal_near_subcover(g, members)
            regular = all(gt_is_regular_open(g, m) for m in members)
            ok &= near <= plain
            covers.append({
                "name": name,
                "plain_minimal_subcover_size": plain,
                "near_minimal_subcover_size": near,
                "regular_open_cover": regular,
                "witness": {"plain": list(plain_idx), "near": list(near_idx)},
            })
        lines = [f"mu-space: {g.mu_space}  quasi-topology: {is_quasi_topology(g)}"]
        lines += [
            f"cover {c['name']}: plain {c['plain_minimal_subcover_size']}, near {c['near_minimal_subcover_size']}, "
            f"regular-open cover: {c['regular_open_cover']}"
            for c in covers
        ]
        return Report("compactness", lines, {"mu_space": g.mu_space, "covers": covers}, ok)

    verdict, rep = is_soft_n_mu_compact_finite(g)
    ok = verdict and rep.near_formulation and rep.formulations_agree
    for name, _ in doc.covers:
        r = cover_report(validate_cover(g, doc.cover(name)))
        ok &= r.near_minimal_subcover_size <= r.plain_minimal_subcover_size
        covers.append({
            "name": name,
            "plain_minimal_subcover_size": r.plain_minimal_subcover_size,
            "near_minimal_subcover_size": r.near_minimal_subcover_size,
            "regular_open_cover": r.regular_open_cover_flag,
            "witness": {k: list(v) for k, v in r.witness_subfamily_indices.items()},
        })
    lines = [
        f"soft nearly mu-compact (finite scale): {verdict}  [finite_trivial]",
        f"near-subcover formulation: {rep.near_formulation}  formulations agree: {rep.formulations_agree}",
        f"irredundant regular-open covers: {rep.regular_open_covers_enumerated}",
        f"max minimal subcover over regular-open covers: {rep.max_plain_over_regular_open_covers}",
        f"max minimal near-subcover over open covers: {rep.max_near_over_open_covers}",
    ]
    lines += [
        f"cover {c['name']}: plain {c['plain_minimal_subcover_size']}, near {c['near_minimal_subcover_size']}, "
        f"regular-open cover: {c['regular_open_cover']}"
        for c in covers
    ]
    return Report("compactness", lines, {
        "n_mu_compact": verdict,
        "near_formulation": rep.near_formulation,
        "formulations_agree": rep.formulations_agree,
        "finite_trivial": rep.finite_trivial,
        "regular_open_covers_enumerated": rep.regular_open_covers_enumerated,
        "max_plain_over_regular_open_covers": rep.max_plain_over_regular_open_covers,
        "max_near_over_open_covers": rep.max_near_over_open_covers,
        "worst_regular_open_cover": [_s(m) for m in rep.worst_cover_members],
        "covers": covers,
    }, ok)


def check_fip(doc: SpaceDocument, opts) -> Report:
    g = _need_soft(doc, "fip")
    named = doc.named_sets()
    if opts.subset:
        family = [named[name] for name in opts.subset]
        labels = list(opts.subset)
    else:
        family = list(enumerate_regular_closed(g))
        labels = [_s(f) for f in family]
    rec = fip_nonempty_intersection_check(g, family)
    lines = [
        f"family ({len(family)}): {', '.join(labels) or '-'}",
        f"finite intersection property: {rec.fip_holds}",
        f"total intersection: {rec.total_intersection}  non-empty: {rec.total_intersection_nonempty}",
        f"consistent with near compactness: {rec.consistent}",
    ]
    return Report("fip", lines, {
        "family": labels,
        "fip_holds": rec.fip_holds,
        "total_intersection": _s(rec.total_intersection),
        "total_intersection_nonempty": rec.total_intersection_nonempty,
        "consistent": rec.consistent,
    }, rec.consistent)


def check_subspace(doc: SpaceDocument, opts) -> Report:
    g = _need_soft(doc, "subspace")
    if not opts.subset or len(opts.subset) != 1:
        raise PreconditionError("subspace needs exactly one --subset NAME")
    name = opts.subset[0]
    named = doc.named_sets()
    if name not in named:
        raise PreconditionError(f"no set named {name!r}")
    b = named[name]
    h = subspace(g, b)
    regular = enumerate_regular_open(h)
    payload = {
        "subset": name,
        "carrier": _s(b),
        "strong": h.strong,
        "opens": [_s(o) for o in h.opens],
        "regular_open": [_s(u) for u in regular],
        "subset_open_in_parent": is_open(g, b),
    }
    lines = [
        f"subspace on {name} = {b}  strong: {h.strong}",
        f"opens ({len(h.open_bits)}): {', '.join(map(_s, h.opens))}",
        f"regular open: {', '.join(map(_s, regular))}",
    ]
    ok = True
    if is_open(g, b):
        traced = {u.bits & b.bits for u in enumerate_regular_open(g)}
        inside = {u.bits for u in regular}
        ok = traced == inside
        payload["traces_of_parent_regular_open"] = [_s(b.with_bits(t)) for t in sorted(traced)]
        payload["trace_theorem_holds"] = ok
        lines.append(f"regular opens equal traces of parent regular opens: {ok}")
    return Report("subspace", lines, payload, ok)


def check_project(doc: SpaceDocument, opts) -> Report:
    g = _need_soft(doc, "project")
    params = [opts.param] if opts.param else list(g.parameters)
    out = []
    lines = []
    for r in params:
        gt = project(g, r)
        opens = [format_points(gt.universe, o) for o in gt.opens]
        out.append({"parameter": r, "opens": opens, "mu_space": gt.mu_space, "quasi_topology": is_quasi_topology(gt)})
        lines.append(f"mu_{r} = {{{', '.join(opens)}}}  mu-space: {gt.mu_space}")
    return Report("project", lines, {"projections": out})


def check_witness(opts) -> Report:
    if not opts.target:
        raise PreconditionError(f"witness needs a family name; known: {', '.join(sorted(FAMILIES))}")
    n_max = opts.n_max
    if n_max is None:
        n_max = int(opts.extra[0]) if opts.extra else 10
    try:
        cert = growth_certificate(opts.target, n_max)
    except CertificationError as exc:
        return Report("witness", [str(exc)], {"family": opts.target, "error": str(exc)}, False)
    lines = [
        f"family: {cert.family}",
        f"indices: {' '.join(map(str, cert.indices))}",
        f"plain minimal subcover: {' '.join(map(str, cert.plain))}",
        f"near minimal subcover:  {' '.join(map(str, cert.near))}",
        f"verdict: {cert.verdict}",
    ]
    return Report("witness", lines, cert.payload())


def check_lawsuite(opts) -> Report:
    names = opts.law or None
    if names:
        unknown = [n for n in names if n not in LAWS]
        if unknown:
            raise PreconditionError(f"unknown law(s) {unknown}; known: {', '.join(LAWS)}")
    results = run_lawsuite(seed=opts.seed, instances=opts.instances, names=names)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.instances} instances, {r.checks} checks, {r.failures} failures")
        lines += [f"    {e}" for e in r.examples[:2]]
    return Report(
        "lawsuite",
        lines,
        {"seed": opts.seed, "instances": opts.instances, "laws": [r.payload() for r in results]},
        all(r.passed for r in results),
    )


DOC_CHECKS = {
    "regular": check_regular,
    "compactness": check_compactness,
    "fip": check_fip,
    "subspace": check_subspace,
    "project": check_project,
}


def _resolve_document(opts) -> SpaceDocument:
    if opts.fixture:
        return load_fixture(opts.fixture)
    if opts.target:
        return load(opts.target)
    raise PreconditionError("give a document path or --fixture NAME")


def run_check(doc: Union[SpaceDocument, None], check: str, opts) -> Report:
    """Run one named check; ``doc`` is ignored by ``witness`` and ``lawsuite``."""
    if check == "witness":
        return check_witness(opts)
    if check == "lawsuite":
        return check_lawsuite(opts)
    if check not in DOC_CHECKS:
        raise PreconditionError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    return DOC_CHECKS[check](doc, opts)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="softgt", description="Finite soft generalized topology workbench.")
    p.add_argument("check", help=f"one of: {', '.join(CHECKS)}")
    p.add_argument("target", nargs="?", help="document path, or family name for 'witness'")
    p.add_argument("extra", nargs="*", help=argparse.SUPPRESS)
    p.add_argument("--fixture", help=f"bundled document: {', '.join(fixture_names())}")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random instances (lawsuite)")
    p.add_argument("--instances", type=int, default=100, help="random instances per law (lawsuite)")
    p.add_argument("--law", action="append", help="restrict lawsuite to this law (repeatable)")
    p.add_argument("--n-max", type=int, dest="n_max", help="largest truncation index (witness)")
    p.add_argument("--param", help="parameter to project on (project)")
    p.add_argument("--subset", action="append", help="named set (subspace, fip; repeatable)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        if opts.check not in CHECKS:
            raise PreconditionError(f"unknown check {opts.check!r}; choose from {', '.join(CHECKS)}")
        doc = None if opts.check in ("witness", "lawsuite") else _resolve_document(opts)
        report = run_check(doc, opts.check, opts)
    except ThresholdExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THRESHOLD
    except (ParseError, StructuralError, PreconditionError, CoverError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(report.machine() if opts.format == "machine" else report.text())
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
