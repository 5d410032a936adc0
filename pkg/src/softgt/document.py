"""Line-oriented text format for spaces, covers and named subsets.

Example::

    # a soft space over X = {a, b, c}
    [universe]
    a, b, c
    [parameters]
    r1, r2, r3
    [carrier]
    S_A: r1=X; r2={b,c}
    [opens]
    S_A1: r1={b}; r2={b,c}
    [covers]
    C1: S_A1, S_A
    [subsets]
    T: r1={a}

Sections may appear in any order; ``#`` starts a comment.  ``[basis]``
generates the topology, ``[opens]`` lists it explicitly and must already be
union-closed.  Omitting ``[parameters]`` makes a plain (non-soft) document
whose sets are written ``NAME: {a,b}`` and whose carrier is all of X.
``X`` abbreviates the whole universe and ``{}`` the empty set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import SoftGTError, StructuralError
from .gt_space import GTS, generate_gt
from .sgt_space import SGTS, generate_sgt, sgt_from_opens
from .soft_core import ParameterSet, SoftSet, Universe

__all__ = ["ParseError", "SpaceDocument", "load", "loads", "load_fixture", "fixture_names", "serialize"]

SECTIONS = ("universe", "parameters", "carrier", "basis", "opens", "covers", "subsets")
_IDENT = r"[A-Za-z0-9_.\-]+"
_IDENT_RE = re.compile(rf"^{_IDENT}$")
_NAMED_RE = re.compile(rf"^\s*({_IDENT})\s*:(.*)$")

SoftAssign = tuple[tuple[str, tuple[str, ...]], ...]
PlainAssign = tuple[str, ...]
Assign = Union[SoftAssign, PlainAssign]


class ParseError(SoftGTError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<input>"):
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class SpaceDocument:
    points: tuple[str, ...]
    parameters: tuple[str, ...] | None
    carrier_name: str | None
    carrier: SoftAssign | None
    family_kind: str
    family: tuple[tuple[str, Assign], ...]
    covers: tuple[tuple[str, tuple[str, ...]], ...] = ()
    subsets: tuple[tuple[str, Assign], ...] = ()

    @property
    def is_soft(self) -> bool:
        return self.parameters is not None

    @property
    def universe(self) -> Universe:
        return Universe(self.points)

    @property
    def parameter_set(self) -> ParameterSet:
        if self.parameters is None:
            raise StructuralError("plain document has no parameters")
        return ParameterSet(self.parameters)

    def _soft(self, assign: SoftAssign) -> SoftSet:
        return SoftSet.from_mapping(self.universe, self.parameter_set, dict(assign))

    def carrier_set(self) -> SoftSet:
        return self._soft(self.carrier or ())

    def named_sets(self) -> dict[str, Union[SoftSet, int]]:
        """Every named set of the document: carrier, family members and subsets."""
        out: dict[str, Union[SoftSet, int]] = {}
        if self.is_soft:
            if self.carrier_name:
                out[self.carrier_name] = self.carrier_set()
            for name, assign in (*self.family, *self.subsets):
                out[name] = self._soft(assign)
        else:
            X = self.universe
            for name, assign in (*self.family, *self.subsets):
                out[name] = X.mask(assign)
        return out

    def build(self) -> Union[SGTS, GTS]:
        named = self.named_sets()
        members = [named[name] for name, _ in self.family]
        if not self.is_soft:
            g = generate_gt(self.universe, members)
            if self.family_kind == "opens" and set(g.opens) != set(members) | {0}:
                raise StructuralError("listed opens are not closed under unions")
            return g
        if self.family_kind == "opens":
            return sgt_from_opens(self.carrier_set(), members)
        return generate_sgt(self.carrier_set(), members)

    def cover(self, name: str) -> list:
        named = self.named_sets()
        for cname, refs in self.covers:
            if cname == name:
                return [named[r] for r in refs]
        raise StructuralError(f"no cover named {name!r}")

    def serialize(self) -> str:
        return serialize(self)


# -- parsing -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, source: str) -> None:
        self.text = text
        self.source = source

    def error(self, message: str, line: int, column: int | None = None) -> ParseError:
        return ParseError(message, line, column, self.source)

    def ident_list(self, body: str, lineno: int, offset: int) -> list[tuple[str, int]]:
        out = []
        pos = 0
        for part in body.split(","):
            col = offset + pos + (len(part) - len(part.lstrip())) + 1
            pos += len(part) + 1
            item = part.strip()
            if not item:
                continue
            if not _IDENT_RE.match(item):
                raise self.error(f"invalid identifier {item!r}", lineno, col)
            out.append((item, col))
        return out

    def point_set(self, text: str, lineno: int, col: int, points: dict[str, int]) -> tuple[str, ...]:
        text = text.strip()
        if text == "X":
            return tuple(points)
        if not (text.startswith("{") and text.endswith("}")):
            raise self.error(f"expected a set like {{a,b}} or X, got {text!r}", lineno, col)
        found = set()
        for item, c in self.ident_list(text[1:-1], lineno, col):
            if item not in points:
                raise self.error(f"unknown point {item!r}", lineno, c)
            found.add(item)
        return tuple(sorted(found, key=points.__getitem__))

    def soft_assign(self, body: str, lineno: int, offset: int, points: dict, params: dict) -> SoftAssign:
        stripped = body.strip()
        if stripped in ("", "{}"):
            return ()
        rows: dict[str, tuple[str, ...]] = {}
        pos = 0
        for part in body.split(";"):
            col = offset + pos + (len(part) - len(part.lstrip())) + 1
            pos += len(part) + 1
            if not part.strip():
                continue
            if "=" not in part:
                raise self.error(f"expected parameter=set, got {part.strip()!r}", lineno, col)
            key, _, value = part.partition("=")
            key = key.strip()
            if key not in params:
                raise self.error(f"unknown parameter {key!r}", lineno, col)
            if key in rows:
                raise self.error(f"parameter {key!r} assigned twice", lineno, col)
            value_col = col + part.strip().index("=") + 1
            rows[key] = self.point_set(value, lineno, value_col, points)
        return tuple((r, rows[r]) for r in sorted(rows, key=params.__getitem__) if rows[r])

    def parse(self) -> SpaceDocument:
        sections: dict[str, list[tuple[int, str]]] = {}
        headers: dict[str, int] = {}
        current = None
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            m = re.match(r"^\s*\[([^\]]*)\]\s*$", line)
            if m:
                name = m.group(1).strip()
                if name not in SECTIONS:
                    raise self.error(f"unknown section [{name}]", lineno, line.index("[") + 1)
                if name in headers:
                    raise self.error(f"duplicate section [{name}]", lineno, 1)
                headers[name] = lineno
                sections[name] = []
                current = name
                continue
            if current is None:
                raise self.error("content before the first section header", lineno, 1)
            sections[current].append((lineno, line))

        if "universe" not in sections:
            raise self.error("missing [universe] section", None)
        if "basis" in sections and "opens" in sections:
            raise self.error("use either [basis] or [opens], not both", headers["opens"], 1)

        points: dict[str, int] = {}
        for lineno, line in sections["universe"]:
            for item, col in self.ident_list(line, lineno, 0):
                if item in points:
                    raise self.error(f"duplicate point {item!r}", lineno, col)
                points[item] = len(points)
        if not points:
            raise self.error("universe is empty", headers["universe"])

        params: dict[str, int] | None = None
        if "parameters" in sections:
            params = {}
            for lineno, line in sections["parameters"]:
                for item, col in self.ident_list(line, lineno, 0):
                    if item in params:
                        raise self.error(f"duplicate parameter {item!r}", lineno, col)
                    params[item] = len(params)
            if not params:
                raise self.error("parameter set is empty", headers["parameters"])

        def assign(body: str, lineno: int, offset: int) -> Assign:
            if params is None:
                return self.point_set(body, lineno, offset + 1 + (len(body) - len(body.lstrip())), points)
            return self.soft_assign(body, lineno, offset, points, params)

        names: dict[str, int] = {}

        def named_lines(section: str):
            for lineno, line in sections.get(section, []):
                m = _NAMED_RE.match(line)
                if not m:
                    raise self.error("expected NAME: ...", lineno, 1)
                name = m.group(1)
                if name in names:
                    raise self.error(f"name {name!r} already defined on line {names[name]}", lineno, line.index(name) + 1)
                names[name] = lineno
                yield lineno, name, m.group(2), m.start(2)

        carrier_name = None
        carrier: SoftAssign | None = None
        line_of: dict[str, int] = {}
        if "carrier" in sections:
            if params is None:
                raise self.error("plain documents have no [carrier]; the carrier is X", headers["carrier"], 1)
            rows = sections["carrier"]
            if len(rows) != 1:
                raise self.error("[carrier] takes exactly one line", headers["carrier"])
            lineno, line = rows[0]
            m = _NAMED_RE.match(line)
            if m:
                carrier_name = m.group(1)
                names[carrier_name] = lineno
                carrier = self.soft_assign(m.group(2), lineno, m.start(2), points, params)
            else:
                carrier = self.soft_assign(line, lineno, 0, points, params)
            line_of["<carrier>"] = lineno
        elif params is not None:
            carrier = tuple((r, tuple(points)) for r in params)

        kind = "opens" if "opens" in sections else "basis"
        family = []
        for lineno, name, body, offset in named_lines(kind):
            family.append((name, assign(body, lineno, offset)))
            line_of[name] = lineno
        subsets = []
        for lineno, name, body, offset in named_lines("subsets"):
            subsets.append((name, assign(body, lineno, offset)))
            line_of[name] = lineno

        set_names = set(names)
        covers = []
        for lineno, name, body, offset in named_lines("covers"):
            refs = []
            for ref, col in self.ident_list(body, lineno, offset):
                if ref not in set_names:
                    raise self.error(f"unknown set {ref!r}", lineno, col)
                refs.append(ref)
            covers.append((name, tuple(refs)))

        doc = SpaceDocument(
            points=tuple(points),
            parameters=None if params is None else tuple(params),
            carrier_name=carrier_name,
            carrier=carrier,
            family_kind=kind,
            family=tuple(family),
            covers=tuple(covers),
            subsets=tuple(subsets),
        )
        self.check_invariants(doc, line_of, headers)
        return doc

    def check_invariants(self, doc: SpaceDocument, line_of: dict, headers: dict) -> None:
        if not doc.is_soft:
            try:
                doc.build()
            except StructuralError as exc:
                raise self.error(str(exc), headers.get(doc.family_kind)) from None
            return
        carrier = doc.carrier_set()
        for name, s in doc.named_sets().items():
            if not s <= carrier:
                raise self.error(f"{name} is not a soft subset of the carrier", line_of.get(name), 1)
        try:
            doc.build()
        except StructuralError as exc:
            raise self.error(str(exc), headers.get(doc.family_kind)) from None


def loads(text: str, source: str = "<input>") -> SpaceDocument:
    return _Parser(text, source).parse()


def load(path: Union[str, Path]) -> SpaceDocument:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))


def fixture_names() -> list[str]:
    root = resources.files("softgt") / "fixtures"
    return sorted(p.name[: -len(".sgt")] for p in root.iterdir() if p.name.endswith(".sgt"))


def load_fixture(name: str) -> SpaceDocument:
    root = resources.files("softgt") / "fixtures"
    target = root / f"{name}.sgt"
    if not target.is_file():
        raise ParseError(f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return loads(target.read_text(encoding="utf-8"), f"fixture:{name}")


# -- serialization -----------------------------------------------------------


def _fmt_points(points: tuple[str, ...]) -> str:
    return "{" + ",".join(points) + "}"


def _fmt_assign(doc: SpaceDocument, assign: Assign) -> str:
    if not doc.is_soft:
        return _fmt_points(assign)  # type: ignore[arg-type]
    if not assign:
        return "{}"
    return "; ".join(f"{r}={_fmt_points(pts)}" for r, pts in assign)


def serialize(doc: SpaceDocument) -> str:
    lines = ["[universe]", ", ".join(doc.points)]
    if doc.is_soft:
        lines += ["[parameters]", ", ".join(doc.parameters or ())]
        carrier = _fmt_assign(doc, doc.carrier or ())
        lines += ["[carrier]", f"{doc.carrier_name}: {carrier}" if doc.carrier_name else carrier]
    lines.append(f"[{doc.family_kind}]")
    lines += [f"{name}: {_fmt_assign(doc, a)}" for name, a in doc.family]
    if doc.subsets:
        lines.append("[subsets]")
        lines += [f"{name}: {_fmt_assign(doc, a)}" for name, a in doc.subsets]
    if doc.covers:
        lines.append("[covers]")
        lines += [f"{name}: {', '.join(refs)}" for name, refs in doc.covers]
    return "\n".join(lines) + "\n"
