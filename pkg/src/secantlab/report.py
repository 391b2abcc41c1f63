"""Analysis reports: canonical JSON and an aligned text table."""

from __future__ import annotations

import json
import re
from importlib import resources

from .bounds import BoundReport
from .terracini import DefectLedger

_NUM = re.compile(r"-?\d+|-")
LEDGER_COLUMNS = ("k", "s", "e", "delta", "f", "psi", "gamma", "t")


def build_report(spec: str, ledger: DefectLedger, bounds: BoundReport, mode: str, seed: int) -> dict:
    return {
        "spec": spec,
        "n": ledger.n,
        "r": ledger.r,
        "mode": mode,
        "seed": seed,
        "k0": ledger.k0,
        "ledger": [row.as_dict() for row in ledger.rows],
        "checks": [
            {"name": c.name, "k": c.k, "verdict": c.verdict, "witness": c.witness, "anchor": c.anchor}
            | ({"note": c.note} if c.note else {})
            | ({"details": c.details} if c.details else {})
            for c in bounds.checks
        ],
        "severi": list(bounds.severi_ks),
    }


def to_json(report: dict) -> str:
    """Canonical serialization: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def load_schema() -> dict:
    text = resources.files("secantlab").joinpath("data/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_report(report: dict) -> None:
    import jsonschema

    jsonschema.validate(report, load_schema())


def format_table(rows: list[list], header: list[str]) -> str:
    cells = [[str(h) for h in header]] + [["-" if v is None else str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    numeric = [all(_NUM.fullmatch(r[i]) for r in cells[1:]) for i in range(len(header))]
    lines = [
        "  ".join((c.rjust(w) if num else c.ljust(w)) for c, w, num in zip(r, widths, numeric)).rstrip()
        for r in cells
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def to_table(report: dict) -> str:
    out = [f"{report['spec']}: n = {report['n']}, r = {report['r']}, k0 = {report['k0']}, "
           f"mode = {report['mode']}, seed = {report['seed']}", ""]
    rows = [[row.get(c) for c in LEDGER_COLUMNS] for row in report["ledger"]]
    out.append(format_table(rows, list(LEDGER_COLUMNS)))
    out.append("")
    crow = [[c["name"], "-" if c["k"] is None else c["k"], c["verdict"], c["witness"]] for c in report["checks"]]
    out.append(format_table(crow, ["check", "k", "verdict", "witness"]))
    out.append("")
    out.append("k-Severi candidates: " + (", ".join(map(str, report["severi"])) or "none"))
    return "\n".join(out) + "\n"
