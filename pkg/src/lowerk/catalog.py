"""The 32 catalog groups with their expected outputs, and regression checks."""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib.resources import files

from . import registry
from .assembly import DEGREES, assemble
from .coxeter import CoxeterDiagram, CoxeterMatrix, parse_diagram, vertex_profile
from .errors import LowerKError, UnknownName
from .geodesics import DEFAULT_TABLE, EdgeBehaviorTable, cusp_groups, enumerate_type1
from .kvalue import ZERO, KValue

_MULTIPLICITY = {"twice": 2, "three times": 3, "four times": 4}
_COLUMNS = {-1: "Km1", 0: "K0t", 1: "Wh"}


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside any bracket pair."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_multiset(text: str) -> Counter | None:
    """``a, b (twice)`` -> Counter; ``-`` is empty, ``*`` is ``None`` (unknown)."""
    s = text.strip()
    if s == "*":
        return None
    out = Counter()
    if s == "-":
        return out
    for item in split_top_level(s):
        m = re.fullmatch(r"(.*?)\s*\((twice|three times|four times)\)", item)
        if m:
            out[_norm(m.group(1))] += _MULTIPLICITY[m.group(2)]
        else:
            out[_norm(item)] += 1
    return out


def format_multiset(counts: Counter | None) -> str:
    if counts is None:
        return "*"
    if not counts:
        return "-"
    words = {v: k for k, v in _MULTIPLICITY.items()}
    return ", ".join(s if c == 1 else f"{s} ({words[c]})" for s, c in counts.items())


def _norm(s: str) -> str:
    return re.sub(r"\s+", " ", s.strip())


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matrix: CoxeterMatrix
    ideal_vertices: int
    expected_stabilizers: Counter
    expected_cusps: Counter | None
    expected_k: dict  # degree -> normalized KValue

    @property
    def diagram(self) -> CoxeterDiagram:
        return CoxeterDiagram(self.matrix, self.name)

    def to_line(self) -> str:
        cols = [
            self.name,
            format_multiset(self.expected_stabilizers),
            format_multiset(self.expected_cusps),
            *(self.expected_k[n].render() for n in (-1, 0, 1)),
        ]
        return " | ".join(cols)


def parse_golden(text: str) -> list[CatalogEntry]:
    entries, ideal = [], None
    for raw in text.splitlines():
        line = raw.strip()
        m = re.fullmatch(r"##\s*ideal_vertices\s*=\s*(\d+)", line)
        if m:
            ideal = int(m.group(1))
            continue
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 6:
            raise ValueError(f"golden record needs 6 columns: {raw!r}")
        if ideal is None:
            raise ValueError("golden record before any ideal_vertices section")
        name, stabs, cusps, km1, k0, wh = cols
        rows = registry.matrix_rows(name)
        if rows is None:
            raise UnknownName(f"golden record for unregistered group {name!r}")
        expected = {-1: KValue.parse(km1), 0: KValue.parse(k0), 1: KValue.parse(wh), -2: ZERO}
        entries.append(
            CatalogEntry(
                registry.normalize_name(name),
                CoxeterMatrix(rows),
                ideal,
                parse_multiset(stabs),
                parse_multiset(cusps),
                expected,
            )
        )
    return entries


def format_golden(entries: list[CatalogEntry]) -> str:
    lines, ideal = [], None
    for e in entries:
        if e.ideal_vertices != ideal:
            ideal = e.ideal_vertices
            lines += ["", f"## ideal_vertices = {ideal}"]
        lines.append(e.to_line())
    return "\n".join(lines).lstrip("\n") + "\n"


def golden_text() -> str:
    return files("lowerk").joinpath("data/golden.txt").read_text()


_ENTRIES: list[CatalogEntry] | None = None


def entries() -> list[CatalogEntry]:
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = parse_golden(golden_text())
    return list(_ENTRIES)


def lookup(name: str) -> CatalogEntry:
    key = registry.normalize_name(name)
    for e in entries():
        if e.name == key:
            return e
    raise UnknownName(f"no catalog group named {name!r}")


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class EntryResult:
    name: str
    passed: bool
    mismatch: str = ""


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[EntryResult, ...]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.results)

    def failures(self) -> list[EntryResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        return f"{self.passed}/{len(self.results)} pass"


def check_entry(entry: CatalogEntry, edge_table: EdgeBehaviorTable = DEFAULT_TABLE) -> EntryResult:
    """Recompute one group and return its first disagreement with the golden data."""
    d = entry.diagram
    try:
        ideal = vertex_profile(d).ideal_count
        if ideal != entry.ideal_vertices:
            return EntryResult(entry.name, False, f"ideal vertices {ideal} != {entry.ideal_vertices}")
        descs = enumerate_type1(d, edge_table)
        got = Counter(_norm(x.render()) for x in descs)
        if got != entry.expected_stabilizers:
            return EntryResult(
                entry.name,
                False,
                f"stabilizers {format_multiset(got)} != {format_multiset(entry.expected_stabilizers)}",
            )
        if entry.expected_cusps is not None:
            cusps = Counter(str(c) for c in cusp_groups(d))
            if cusps != entry.expected_cusps:
                return EntryResult(
                    entry.name,
                    False,
                    f"cusps {format_multiset(cusps)} != {format_multiset(entry.expected_cusps)}",
                )
        result = assemble(d, stabilizers=descs).normalized()
        for n in DEGREES:
            if result[n] != entry.expected_k[n]:
                label = _COLUMNS.get(n, "K<=-2")
                return EntryResult(
                    entry.name, False, f"{label} {result[n].render()} != {entry.expected_k[n].render()}"
                )
    except LowerKError as exc:
        return EntryResult(entry.name, False, f"{type(exc).__name__}: {exc}")
    return EntryResult(entry.name, True)


def verify_all(
    selection: list[CatalogEntry] | None = None,
    edge_table: EdgeBehaviorTable = DEFAULT_TABLE,
    workers: int = 4,
) -> VerifyReport:
    chosen = entries() if selection is None else list(selection)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda e: check_entry(e, edge_table), chosen))
    return VerifyReport(tuple(results))


def diagram_for(name: str) -> CoxeterDiagram:
    """Catalog diagram by name, falling back to the notation parser."""
    return parse_diagram(name)
