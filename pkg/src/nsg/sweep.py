"""Grid searches over parameterized families ``<fixed, a_1, ..., a_n>_r``."""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, TextIO

from .core import GeneratorSpec, NumericalSemigroupError, build
from .invariants import CSV_COLUMNS, InvariantReport, is_highly_dense, report
from .wilf import eliahou

__all__ = [
    "SpecInvalid",
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "run_sweep",
    "iter_hits",
    "builtin_type1",
    "builtin_type2",
    "builtin_table1",
    "BUILTINS",
    "classify_family",
    "load_config",
    "write_csv",
    "write_jsonl",
]


class SpecInvalid(NumericalSemigroupError):
    pass


_PRED_RE = re.compile(r"^eliahou_in\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def _parse_predicate(text: str):
    text = text.strip()
    if text in ("eliahou_negative", "highly_dense", "all"):
        return text, None
    match = _PRED_RE.match(text)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        if lo > hi:
            raise SpecInvalid(f"empty Eliahou range in {text!r}")
        return "eliahou_in", (lo, hi)
    raise SpecInvalid(f"unknown predicate {text!r}")


@dataclass(frozen=True)
class SweepSpec:
    """Fixed generators, one inclusive range per varying generator, a
    threshold range, a predicate and a dedupe flag.

    ``predicate`` is one of ``eliahou_negative``, ``eliahou_in(lo,hi)``,
    ``highly_dense`` or ``all``.
    """

    fixed: tuple[int, ...]
    slots: tuple[tuple[int, int], ...]
    threshold: tuple[int, int]
    predicate: str = "eliahou_negative"
    dedupe: bool = True

    def __post_init__(self):
        object.__setattr__(self, "fixed", tuple(int(x) for x in self.fixed))
        object.__setattr__(self, "slots", tuple((int(a), int(b)) for a, b in self.slots))
        lo, hi = self.threshold
        object.__setattr__(self, "threshold", (int(lo), int(hi)))
        self.validate()

    def validate(self) -> None:
        for lo, hi in self.slots + (self.threshold,):
            if lo > hi:
                raise SpecInvalid(f"empty range [{lo}, {hi}]")
            if lo < 1:
                raise SpecInvalid(f"range [{lo}, {hi}] must be positive")
        if any(g < 1 for g in self.fixed):
            raise SpecInvalid("fixed generators must be positive")
        _parse_predicate(self.predicate)

    @property
    def grid_size(self) -> int:
        sizes = [hi - lo + 1 for lo, hi in self.slots + (self.threshold,)]
        return math.prod(sizes)

    def points(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Grid points ``(generators, threshold)`` in sweep order."""
        ranges = [range(lo, hi + 1) for lo, hi in self.slots]
        for r in range(self.threshold[0], self.threshold[1] + 1):
            for assignment in itertools.product(*ranges):
                yield self.fixed + assignment, r

    def matches(self, S) -> bool:
        kind, bounds = _parse_predicate(self.predicate)
        if kind == "all":
            return True
        if kind == "highly_dense":
            return is_highly_dense(S)
        if S.is_trivial:
            return False
        E = eliahou(S)
        if kind == "eliahou_negative":
            return E < 0
        return bounds[0] <= E <= bounds[1]

    def to_dict(self) -> dict:
        return {
            "fixed": list(self.fixed),
            "slots": [list(s) for s in self.slots],
            "threshold": list(self.threshold),
            "predicate": self.predicate,
            "dedupe": self.dedupe,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSpec":
        try:
            return cls(
                fixed=tuple(data.get("fixed", ())),
                slots=tuple(tuple(s) for s in data.get("slots", ())),
                threshold=tuple(data["threshold"]),
                predicate=data.get("predicate", "eliahou_negative"),
                dedupe=bool(data.get("dedupe", True)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SpecInvalid):
                raise
            raise SpecInvalid(f"bad sweep config: {exc}") from exc


@dataclass(frozen=True)
class SweepRow:
    generators: tuple[int, ...]
    threshold: int
    report: InvariantReport
    digest: str = field(default="", compare=False)

    @property
    def point(self) -> tuple[int, tuple[int, ...]]:
        return self.threshold, self.generators

    def to_dict(self) -> dict:
        d = self.report.to_dict()
        d["point"] = {"generators": list(self.generators), "threshold": self.threshold}
        return d


@dataclass
class SweepResult:
    spec: SweepSpec
    rows: list[SweepRow]
    raw_hits: int
    grid_size: int

    @property
    def distinct(self) -> int:
        return len({row.digest for row in self.rows})


def _evaluate(spec: SweepSpec, points) -> list[SweepRow]:
    hits = []
    for gens, r in points:
        S = build(GeneratorSpec(gens, r))
        if spec.matches(S):
            hits.append(SweepRow(gens, r, report(S), S.digest()))
    return hits


def iter_hits(spec: SweepSpec) -> Iterator[SweepRow]:
    """Stream matching rows in grid order without buffering (no dedupe)."""
    for point in spec.points():
        yield from _evaluate(spec, [point])


def _workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get("NSG_THREADS", "1") or 1)
    return max(1, workers)


def run_sweep(spec: SweepSpec, workers: Optional[int] = None) -> SweepResult:
    """Evaluate every grid point and keep the rows passing the predicate.

    Rows are sorted by ``(threshold, generators)``.  With ``dedupe`` the
    first row of each distinct semigroup in that order is kept.  The number
    of worker processes (``workers`` or ``$NSG_THREADS``) never changes the
    result.
    """
    points = list(spec.points())
    n = _workers(workers)
    if n == 1 or len(points) < 2 * n:
        hits = _evaluate(spec, points)
    else:
        chunks = [points[i::n] for i in range(n)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            hits = [row for part in pool.map(_evaluate, [spec] * n, chunks) for row in part]
    hits.sort(key=lambda row: row.point)
    rows = hits
    if spec.dedupe:
        seen = set()
        rows = []
        for row in hits:
            if row.digest not in seen:
                seen.add(row.digest)
                rows.append(row)
    return SweepResult(spec, rows, raw_hits=len(hits), grid_size=len(points))


def builtin_type1() -> SweepSpec:
    return SweepSpec(
        fixed=(100, 170), slots=((171, 180), (171, 180)), threshold=(593, 602),
        predicate="eliahou_negative", dedupe=True,
    )


def builtin_type2() -> SweepSpec:
    return SweepSpec(
        fixed=(100, 270), slots=((271, 280), (271, 280)), threshold=(993, 1005),
        predicate="eliahou_negative", dedupe=True,
    )


BUILTINS = {"type1": builtin_type1, "type2": builtin_type2}


def builtin_table1() -> list[GeneratorSpec]:
    """The eight semigroups of the negative-Eliahou table, as printed."""
    return [
        GeneratorSpec((100, 170, 171, 176), 599),
        GeneratorSpec((100, 270, 272, 275), 998),
        GeneratorSpec((100, 270, 271, 175), 999),
        GeneratorSpec((100, 270, 273, 275), 1000),
        GeneratorSpec((100, 170, 173, 174), 597),
        GeneratorSpec((100, 170, 172, 175), 598),
        GeneratorSpec((100, 170, 173, 175), 599),
        GeneratorSpec((100, 170, 172, 175), 600),
    ]


def classify_family(row) -> str:
    """``type1``, ``type2`` or ``other``.

    Type 1 is ``<100, 170, a, b>_c`` with a, b in [171, 176], c in
    [597, 600], e_s in {3, 4} and c > 5m; type 2 is ``<100, 270, a, b>_c``
    with a, b in [271, 276], c in [997, 1000], e_s in {3, 4} and c > 9m.
    Accepts a :class:`SweepRow` or an :class:`InvariantReport` whose
    ``generators`` field holds the presentation.
    """
    rep = row.report if isinstance(row, SweepRow) else row
    gens = row.generators if isinstance(row, SweepRow) else tuple(
        int(g) for g in rep.generators.split(",") if g
    )
    if len(gens) != 4 or rep.e_s not in (3, 4):
        return "other"
    families = {
        "type1": ((100, 170), (171, 176), (597, 600), 5),
        "type2": ((100, 270), (271, 276), (997, 1000), 9),
    }
    for name, (fixed, (alo, ahi), (clo, chi), factor) in families.items():
        if (
            tuple(gens[:2]) == fixed
            and all(alo <= g <= ahi for g in gens[2:])
            and clo <= rep.c <= chi
            and rep.c > factor * rep.m
        ):
            return name
    return "other"


def load_config(path) -> SweepSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecInvalid(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecInvalid(f"{path}: expected a JSON object")
    return SweepSpec.from_dict(data)


def write_csv(rows: Iterable, out: TextIO) -> None:
    """Rows may be SweepRows or InvariantReports."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        rep = row.report if isinstance(row, SweepRow) else row
        writer.writerow(rep.csv_row())


def write_jsonl(rows: Iterable, out: TextIO) -> None:
    for row in rows:
        out.write(json.dumps(row.to_dict(), sort_keys=True) + "\n")


def rows_to_csv(rows: Iterable) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
