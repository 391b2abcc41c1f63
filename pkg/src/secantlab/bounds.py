"""Verdicts for the defect inequalities and classification predicates.

All inequalities with halves are evaluated in doubled integer form, e.g. the
linear-normality bound ``s >= (k+2)n/2 + k`` becomes ``2s >= (k+2)n + 2k``.

Verdicts are one of ``holds``, ``violated``, ``vacuous`` or ``inconclusive``.
The R_k property is reported three-valued: ``satisfied`` (sufficient
criterion met), ``refuted`` (a necessary consequence fails) or
``inconclusive``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .polymap import ParamMap
from .terracini import DefectLedger, contact_gamma

HOLDS, VIOLATED, VACUOUS, INCONCLUSIVE = "holds", "violated", "vacuous", "inconclusive"
OUTSIDE = "outside theorem hypotheses"


@dataclass
class Check:
    name: str
    anchor: str
    k: int | None
    verdict: str
    witness: str
    note: str | None = None
    details: dict | None = None

    def as_dict(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val is not None}


@dataclass
class BoundReport:
    checks: list[Check] = field(default_factory=list)
    severi_ks: list[int] = field(default_factory=list)
    scorza: Check | None = None
    rk_surrogate: dict[int, str] = field(default_factory=dict)

    def by_name(self, name: str) -> list[Check]:
        return [c for c in self.checks if c.name == name]

    def get(self, name: str, k: int | None = None) -> Check:
        for c in self.checks:
            if c.name == name and c.k == k:
                return c
        raise KeyError((name, k))


def _rel(lhs: int, rhs: int) -> str:
    return "<" if lhs < rhs else "=" if lhs == rhs else ">"


def _smooth_verdict(ok: bool, smooth: bool) -> tuple[str, str]:
    if smooth:
        return (HOLDS if ok else VIOLATED), "smoothness assumed"
    return (HOLDS if ok else INCONCLUSIVE), OUTSIDE


def check_subadditivity(L: DefectLedger) -> list[Check]:
    """Monotonicity and superadditivity of the projection defects up to k0."""
    anchor = "Palatini-Zak subadditivity of projection defects"
    top = min(L.kmax, L.k0)
    if L.k0 <= 1:
        return [
            Check(name, anchor, None, VACUOUS, f"k0 = {L.k0}")
            for name in ("psi monotone", "psi superadditive", "psi_k >= k psi_1")
        ]
    out = []
    psi = {k: L.psi(k) for k in range(top + 1)}
    for k in range(2, top + 1):
        ok = psi[k - 1] <= psi[k]
        v, note = _smooth_verdict(ok, L.smooth)
        out.append(Check("psi monotone", anchor, k, v, f"psi_{k - 1} = {psi[k - 1]} <= psi_{k} = {psi[k]}", note))
    if top == L.k0:
        ok = psi[top] <= L.n
        v, note = _smooth_verdict(ok, L.smooth)
        out.append(Check("psi_k0 <= n", anchor, top, v, f"psi_{top} = {psi[top]} <= n = {L.n}", note))
    for k in range(2, top + 1):
        rhs = psi[k - 1] + psi[1]
        v, note = _smooth_verdict(psi[k] >= rhs, L.smooth)
        out.append(
            Check(
                "psi superadditive",
                anchor,
                k,
                v,
                f"psi_{k} = {psi[k]} >= psi_{k - 1} + psi_1 = {psi[k - 1]} + {psi[1]} = {rhs} ({_rel(psi[k], rhs)})",
                note,
            )
        )
    for k in range(2, top + 1):
        rhs = k * psi[1]
        v, note = _smooth_verdict(psi[k] >= rhs, L.smooth)
        out.append(Check("psi_k >= k psi_1", anchor, k, v, f"psi_{k} = {psi[k]} >= {k}*psi_1 = {rhs}", note))
    return out


def check_scorza(L: DefectLedger) -> Check:
    anchor = "Scorza variety definition"
    psi1 = L.psi(1) if L.k0 >= 1 else 0
    psis = [L.psi(k) for k in range(1, L.k0 + 1)]
    witness = f"psi = {tuple(psis)}, k0 = {L.k0}, n = {L.n}"
    if psi1 <= 0:
        return Check("scorza", anchor, None, VIOLATED, witness + ", psi_1 = 0", "predicate requires psi_1 > 0")
    linear = all(p == (i + 1) * psi1 for i, p in enumerate(psis))
    k0_ok = L.k0 == L.n // psi1
    witness += f", floor(n/psi_1) = {L.n // psi1}"
    ok = linear and k0_ok
    note = None if L.smooth else OUTSIDE
    return Check("scorza", anchor, None, HOLDS if ok else VIOLATED, witness, note)


def check_step2(L: DefectLedger, k: int) -> Check:
    """The fibre-defect bound 2 f_k <= k n plus the equality-case diagnostics."""
    anchor = "fibre-defect bound 2f_k <= kn for R_k varieties"
    s = L.s(k)
    if s >= L.r:
        return Check("2f_k <= kn", anchor, k, VACUOUS, f"s^({k}) = {s} = r")
    fk = L.f(k)
    lhs, rhs = 2 * fk, k * L.n
    verdict = HOLDS if lhs <= rhs else VIOLATED
    check = Check("2f_k <= kn", anchor, k, verdict, f"2f_{k} = {lhs} {_rel(lhs, rhs)} {rhs} = kn")
    if lhs == rhs:
        f = L.f(1)
        diag: dict = {"f": f}
        gamma_ok = True
        for i in range(1, k + 1):
            g = _gamma(L, i)
            psi = L.psi(i)
            if g is None:
                diag[f"gamma_{i}"] = "unknown"
                gamma_ok = False
            elif not (g == psi == i * f):
                gamma_ok = False
        diag["gamma_i = psi_i = i f"] = gamma_ok
        diag["f_i = i(i+1)f/2"] = all(2 * L.f(i) == i * (i + 1) * f for i in range(1, k + 1))
        diag["n = (k+1) f"] = L.n == (k + 1) * f
        check.details = diag
        check.note = "equality"
    else:
        check.note = "strict" if lhs < rhs else None
    return check


def _gamma(L: DefectLedger, k: int):
    try:
        return L.row(k).gamma
    except KeyError:
        return None


def check_extended_ln(L: DefectLedger, k: int) -> Check:
    anchor = "extended linear normality bound"
    s = L.s(k)
    if s >= L.r:
        return Check("extended linear normality", anchor, k, VACUOUS, f"S^{k}(X) = P^{L.r}")
    lhs, rhs = 2 * s, (k + 2) * L.n + 2 * k
    witness = f"2s^({k}) = {lhs} {_rel(lhs, rhs)} (k+2)n + 2k = {rhs}"
    if lhs >= rhs:
        return Check("extended linear normality", anchor, k, HOLDS, witness, "equality" if lhs == rhs else None)
    return Check("extended linear normality", anchor, k, VIOLATED, witness, f"not an R_{k}-variety")


def detect_k_severi(L: DefectLedger) -> list[int]:
    """Numerical k-Severi candidates: r > s^(k) and 2s^(k) = (k+2)n + 2k."""
    out = []
    for row in L.rows:
        if row.k >= 1 and row.s < L.r and 2 * row.s == (row.k + 2) * L.n + 2 * row.k:
            out.append(row.k)
    return out


def check_rk_surrogate(X: ParamMap | None, L: DefectLedger, k: int, seed: int = 0) -> str:
    """``satisfied`` if gamma_i = psi_i for i = 1..k, else ``inconclusive``.

    The indeterminacy-locus hypothesis of the criterion is not checked.
    """
    if L.s(k) >= L.r:
        raise ValueError(f"R_{k} surrogate needs s^({k}) < r")
    for i in range(1, k + 1):
        g = _gamma(L, i)
        if g is None:
            if X is None:
                return INCONCLUSIVE
            g = contact_gamma(X, i, seed=seed)
        if g != L.psi(i):
            return INCONCLUSIVE
    return "satisfied"


def _equality_refutes(L: DefectLedger, k: int) -> bool:
    """In the equality case 2f_k = kn an R_k variety has psi_i = i f,
    f_i = i(i+1)f/2 and n = (k+1)f.  These use only exact secant dimensions
    (the gamma part is a tangent-space upper bound and is not used here)."""
    if L.s(k) >= L.r or 2 * L.f(k) != k * L.n:
        return False
    f = L.f(1)
    return not (
        all(L.psi(i) == i * f for i in range(1, k + 1))
        and all(2 * L.f(i) == i * (i + 1) * f for i in range(1, k + 1))
        and L.n == (k + 1) * f
    )


def rk_status(L: DefectLedger, k: int, surrogate: str) -> str:
    """Combine the sufficient criterion with the necessary consequences."""
    if (
        check_extended_ln(L, k).verdict == VIOLATED
        or check_step2(L, k).verdict == VIOLATED
        or _equality_refutes(L, k)
    ):
        return "refuted"
    return surrogate


def is_k_severi(L: DefectLedger, k: int, report: "BoundReport | None" = None) -> bool:
    """Numerical k-Severi candidate whose R_k property is not refuted."""
    if k not in detect_k_severi(L):
        return False
    status = report.rk_surrogate.get(k) if report else rk_status(L, k, INCONCLUSIVE)
    return status != "refuted"


def evaluate_bounds(L: DefectLedger, X: ParamMap | None = None, seed: int = 0) -> BoundReport:
    report = BoundReport()
    report.checks.extend(check_subadditivity(L))
    report.scorza = check_scorza(L)
    report.checks.append(report.scorza)
    for row in L.rows:
        k = row.k
        if k == 0:
            continue
        report.checks.append(check_step2(L, k))
        report.checks.append(check_extended_ln(L, k))
        if row.s < L.r:
            surrogate = check_rk_surrogate(None, L, k) if row.gamma is not None or X is None else check_rk_surrogate(X, L, k, seed)
            status = rk_status(L, k, surrogate)
            report.rk_surrogate[k] = status
            report.checks.append(
                Check(
                    "R_k surrogate",
                    "R_k criterion (gamma_i = psi_i)",
                    k,
                    HOLDS if status == "satisfied" else VIOLATED if status == "refuted" else INCONCLUSIVE,
                    ", ".join(f"gamma_{i} = {_gamma(L, i)}, psi_{i} = {L.psi(i)}" for i in range(1, k + 1)),
                    {"satisfied": "criterion satisfied (indeterminacy hypothesis unchecked)",
                     "refuted": f"not R_{k} (a necessary consequence fails)",
                     "inconclusive": "criterion not met; R_k undecided"}[status],
                )
            )
    report.severi_ks = detect_k_severi(L)
    for k in report.severi_ks:
        report.checks.append(
            Check(
                "k-severi candidate",
                "k-Severi definition",
                k,
                HOLDS,
                f"r = {L.r} > s^({k}) = {L.s(k)}, 2s^({k}) = {2 * L.s(k)} = (k+2)n + 2k",
                f"numerical candidate; R_{k}: {report.rk_surrogate.get(k, INCONCLUSIVE)}",
            )
        )
    return report
