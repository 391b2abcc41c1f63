"""Golden suites: expected values next to freshly computed ones.

Each suite is a list of :class:`SuiteRow`.  A suite passes iff every row's
computed value equals the expected value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .bounds import check_extended_ln, check_step2, detect_k_severi, evaluate_bounds, is_k_severi
from .catalog import build
from .terracini import defect_ledger, projection_image_dim


@dataclass(frozen=True)
class SuiteRow:
    key: str
    expected: object
    computed: object
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _ledger(spec: str, kmax: int | None, seed: int, exact: bool, gamma: bool = True):
    return defect_ledger(build(spec, seed=seed), kmax=kmax, seed=seed, exact=exact, gamma=gamma)


def suite_seg34(seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    X = build("segre:3,4", seed=seed)
    L = defect_ledger(X, kmax=2, seed=seed, exact=exact)
    r1, r2 = L.row(1), L.row(2)
    step2 = check_step2(L, 2)
    return [
        SuiteRow("segre:3,4 s^(1)", 13, r1.s),
        SuiteRow("segre:3,4 f_1", 2, r1.f),
        SuiteRow("segre:3,4 psi_1", 2, r1.psi),
        SuiteRow("segre:3,4 gamma_1", 2, r1.gamma),
        SuiteRow("segre:3,4 s^(2)", 17, r2.s),
        SuiteRow("segre:3,4 f_2", 6, r2.f),
        SuiteRow("segre:3,4 psi_2", 4, r2.psi),
        SuiteRow("segre:3,4 gamma_2", 4, r2.gamma),
        SuiteRow("segre:3,4 dim tau_1", 5, projection_image_dim(X, 1, seed=seed, exact=exact)),
        SuiteRow("segre:3,4 dim tau_2", 3, projection_image_dim(X, 2, seed=seed, exact=exact)),
        SuiteRow("segre:3,4 2f_2 vs kn", "12 < 14 strict", f"{2 * r2.f} {'<' if 2 * r2.f < 2 * L.n else '>='} {2 * L.n} {step2.note}"),
    ]


def suite_scrolls(seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    rows = []
    A = _ledger("scroll:1,10", 4, seed, exact, gamma=False)
    for k in range(1, 5):
        rows.append(SuiteRow(f"scroll:1,10 s^({k})", 2 * k + 3, A.s(k)))
    for k in range(2, 5):
        rows.append(SuiteRow(f"scroll:1,10 f_{k}", k - 1, A.f(k)))
        rows.append(SuiteRow(f"scroll:1,10 defective at k={k}", True, A.row(k).delta > 0))
    B = _ledger("scroll:1,1,20", 5, seed, exact, gamma=False)
    for k in range(1, 6):
        rows.append(SuiteRow(f"scroll:1,1,20 s^({k})", 2 * k + 5, B.s(k)))
    violated = [k for k in range(1, 6) if check_extended_ln(B, k).verdict == "violated"]
    rows.append(SuiteRow("scroll:1,1,20 extended-ln violated at", [5], violated))
    return rows


SEVERI_K1 = (
    ("veronese:2,2", 2, 5),
    ("segre:2,2", 4, 8),
    ("grassmann:1,5", 8, 14),
    ("hermitian:splitO,3", 16, 26),
)


def suite_severi(seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    rows = []
    for spec, n, r in SEVERI_K1:
        L = _ledger(spec, 1, seed, exact, gamma=False)
        rows.append(SuiteRow(f"{spec} (n, r)", (n, r), (L.n, L.r)))
        rows.append(SuiteRow(f"{spec} s^(1)", 3 * n // 2 + 1, L.s(1)))
        rows.append(SuiteRow(f"{spec} r - s^(1)", 1, L.r - L.s(1)))
        rows.append(SuiteRow(f"{spec} severi", [1], detect_k_severi(L)))
    return rows


def ksevi_members(k: int) -> list[tuple[str, int]]:
    """(spec, f) for the three families at level k."""
    return [(f"veronese:{k + 1},2", 1), (f"segre:{k + 1},{k + 1}", 2), (f"grassmann:1,{2 * k + 3}", 4)]


def suite_ksevi(seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    rows = []
    for k in (2, 3):
        for spec, f in ksevi_members(k):
            L = _ledger(spec, k, seed, exact)
            s = L.s(k)
            note = ""
            if spec.startswith("veronese"):
                note = f"alternative ambient reading k(k+3)/2 = {k * (k + 3) // 2}; built C(k+3,2) - 1 = {comb(k + 3, 2) - 1}"
            rows.append(SuiteRow(f"{spec} k={k} 2s^(k) - (k+2)n - 2k", 0, 2 * s - (k + 2) * L.n - 2 * k, note))
            rows.append(SuiteRow(f"{spec} k={k} r - s^(k)", 1, L.r - s))
            rows.append(SuiteRow(f"{spec} k={k} f", f, L.f(1)))
            diag = check_step2(L, k).details or {}
            rows.append(SuiteRow(f"{spec} k={k} equality diagnostics", True, bool(diag) and all(v is True for k_, v in diag.items() if k_ != "f")))
            rows.append(SuiteRow(f"{spec} k={k} k-severi", True, is_k_severi(L, k, evaluate_bounds(L))))
    return rows


def suite_speculations(seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    rows = []
    for spec, n, r, f1 in (("grassmann:1,4", 6, 9, 4), ("spinor:4", 10, 15, 6)):
        L = _ledger(spec, 1, seed, exact, gamma=False)
        rows.append(SuiteRow(f"{spec} (n, r)", (n, r), (L.n, L.r)))
        rows.append(SuiteRow(f"{spec} s^(1)", r, L.s(1)))
        rows.append(SuiteRow(f"{spec} f_1", f1, L.f(1)))
        rows.append(SuiteRow(f"{spec} delta_1", 0, L.row(1).delta))
        rows.append(SuiteRow(f"{spec} 4n > 2r", True, 4 * L.n > 2 * L.r))
    return rows


SUITES: dict[str, Callable[..., list[SuiteRow]]] = {
    "severi": suite_severi,
    "ksevi": suite_ksevi,
    "scrolls": suite_scrolls,
    "seg34": suite_seg34,
    "speculations": suite_speculations,
}


def run_suite(name: str, seed: int = 0, exact: bool = False) -> list[SuiteRow]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return sorted(SUITES[name](seed=seed, exact=exact), key=lambda row: row.key)
