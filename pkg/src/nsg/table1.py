"""Side-by-side comparison of the negative-Eliahou table with recomputed values."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .core import build, parse_spec
from .invariants import InvariantReport, report

COLUMNS = ("eliahou", "concentration", "e", "mu", "wilf_e", "wilf_mu")


@dataclass(frozen=True)
class TableRow:
    index: int
    spec: str
    published: dict
    computed: InvariantReport

    @property
    def cells(self) -> dict[str, tuple[int, int, bool]]:
        """column -> (published, computed, match)"""
        out = {}
        for col in COLUMNS:
            pub = self.published[col]
            got = getattr(self.computed, col)
            out[col] = (pub, got, pub == got)
        return out

    @property
    def mismatches(self) -> dict[str, tuple[int, int]]:
        return {col: (p, g) for col, (p, g, ok) in self.cells.items() if not ok}

    @property
    def matches(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "row": self.index,
            "spec": self.spec,
            "cells": {
                col: {"published": p, "computed": g, "match": ok}
                for col, (p, g, ok) in self.cells.items()
            },
            "match": self.matches,
        }


def load_published() -> list[dict]:
    text = resources.files("nsg").joinpath("data/table1.json").read_text(encoding="utf-8")
    return json.loads(text)["rows"]


def compare() -> list[TableRow]:
    rows = []
    for i, pub in enumerate(load_published(), start=1):
        S = build(parse_spec(pub["spec"]))
        rows.append(TableRow(i, pub["spec"], {c: pub[c] for c in COLUMNS}, report(S)))
    return rows
