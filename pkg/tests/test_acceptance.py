"""Acceptance criteria.  Run with ``pytest -v``; a summary section prints one
PASS/FAIL line per criterion."""

import json

import pytest

from oracles import generic_formula, skew_secant_dim, symmetric_formula
from secantlab.bounds import check_extended_ln, check_step2, detect_k_severi, evaluate_bounds, is_k_severi
from secantlab.catalog import Modifier, build, catalog_entries, format_spec, with_modifiers
from secantlab.cli import main
from secantlab.terracini import (
    defect_ledger,
    gauss_defect,
    projection_image_dim,
    secant_dim,
    secant_gauss_defect,
)


class UnattainableCriterion(AssertionError):
    """A criterion value that contradicts the quantity's own definition."""


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# --- 1 -----------------------------------------------------------------------


def seg34_values(exact):
    X = build("segre:3,4")
    L = defect_ledger(X, kmax=2, exact=exact)
    r1, r2 = L.row(1), L.row(2)
    return {
        "s1": r1.s, "f1": r1.f, "psi1": r1.psi, "gamma1": r1.gamma,
        "s2": r2.s, "f2": r2.f, "psi2": r2.psi, "gamma2": r2.gamma,
        "tau1": projection_image_dim(X, 1, exact=exact), "tau2": projection_image_dim(X, 2, exact=exact),
    }


@criterion(1, "Seg(3,4): ledger, contact loci, tangential projections, 2f_2 = 12 < 14")
def test_criterion_1_segre_3_4():
    assert seg34_values(exact=False) == {
        "s1": 13, "f1": 2, "psi1": 2, "gamma1": 2,
        "s2": 17, "f2": 6, "psi2": 4, "gamma2": 4,
        "tau1": 5, "tau2": 3,
    }
    c = check_step2(defect_ledger(build("segre:3,4"), kmax=2), 2)
    assert (c.verdict, c.note, c.witness) == ("holds", "strict", "2f_2 = 12 < 14 = kn")


# --- 2 -----------------------------------------------------------------------

SEVERI = [("veronese:2,2", 4), ("segre:2,2", 7), ("grassmann:1,5", 13), ("hermitian:splitO,3", 25)]
# rank-one hermitian matrices over R, split-C, split-H are the classical members again
HERMITIAN_COPIES = {
    1: ["hermitian:R,3", "hermitian:splitC,3", "hermitian:splitH,3"],
    2: ["hermitian:R,4", "hermitian:splitC,4", "hermitian:splitH,4"],
    3: ["hermitian:R,5", "hermitian:splitC,5", "hermitian:splitH,5"],
}


@criterion(2, "Severi row k=1: s^(1) = 3n/2 + 1 = r - 1 and detect_k_severi = [1]")
@pytest.mark.parametrize("spec,s1", SEVERI)
def test_criterion_2_severi_row(spec, s1):
    L = defect_ledger(build(spec))
    assert L.s(1) == s1 == 3 * L.n // 2 + 1
    assert L.r == s1 + 1
    assert detect_k_severi(L) == [1]


@pytest.fixture(scope="module")
def classification_scan():
    found = {1: set(), 2: set(), 3: set()}
    for spec in catalog_entries(max_n=16, max_r=44):
        L = defect_ledger(build(spec), kmax=3, gamma=False)
        for k in detect_k_severi(L):
            if is_k_severi(L, k):
                found[k].add(format_spec(spec))
    return found


@criterion(2, "Severi row k=1: s^(1) = 3n/2 + 1 = r - 1 and detect_k_severi = [1]")
def test_criterion_2_classification_scan(classification_scan):
    expected = {spec for spec, _ in SEVERI} | set(HERMITIAN_COPIES[1])
    assert classification_scan[1] == expected


# --- 3 -----------------------------------------------------------------------


def ksevi_members(k):
    return [
        (f"veronese:{k + 1},2", 1, symmetric_formula(k + 1, k)),
        (f"segre:{k + 1},{k + 1}", 2, generic_formula(k + 1, k + 1, k)),
        (f"grassmann:1,{2 * k + 3}", 4, skew_secant_dim(2 * k + 3, k)),
    ]


@criterion(3, "k-Severi rows k=2,3: quadratic Veronese, Seg(k+1,k+1), G(1,2k+3) with f = 1, 2, 4")
@pytest.mark.parametrize("k", [2, 3])
def test_criterion_3_k_severi_rows(k):
    for spec, f, oracle in ksevi_members(k):
        X = build(spec)
        L = defect_ledger(X, kmax=k)
        s = L.s(k)
        assert s == oracle, spec
        assert 2 * s == (k + 2) * L.n + 2 * k, spec
        assert L.r == s + 1, spec
        c = check_step2(L, k)
        assert c.details["f"] == f, spec
        assert all(v is True for key, v in c.details.items() if key != "f"), (spec, c.details)
        assert is_k_severi(L, k, evaluate_bounds(L, X)), spec


@criterion(3, "k-Severi rows k=2,3: quadratic Veronese, Seg(k+1,k+1), G(1,2k+3) with f = 1, 2, 4")
@pytest.mark.parametrize("k", [2, 3])
def test_criterion_3_classification_scan(classification_scan, k):
    expected = {spec for spec, _, _ in ksevi_members(k)} | set(HERMITIAN_COPIES[k])
    assert classification_scan[k] == expected


# --- 4 -----------------------------------------------------------------------


@criterion(4, "Scrolls: S(1,10) s^(k) = 2k+3, delta_k = k-1; S(1,1,20) s^(k) = 2k+5, extended bound fails only at k=5")
@pytest.mark.xfail(
    raises=UnattainableCriterion,
    strict=True,
    reason="delta_4(S(1,10)) = min(12, 14) - 11 = 1, not 3; only f_k equals k-1 for all k",
)
def test_criterion_4_scrolls():
    A = defect_ledger(build("scroll:1,10"), kmax=4, gamma=False)
    assert [A.s(k) for k in range(1, 5)] == [5, 7, 9, 11]
    B = defect_ledger(build("scroll:1,1,20"), kmax=5, gamma=False)
    assert [B.s(k) for k in range(1, 6)] == [7, 9, 11, 13, 15]
    assert [k for k in range(1, 6) if check_extended_ln(B, k).verdict == "violated"] == [5]
    assert [A.f(k) for k in range(2, 5)] == [1, 2, 3]
    deltas = [A.row(k).delta for k in range(2, 5)]
    if deltas != [1, 2, 3]:
        raise UnattainableCriterion(f"delta_2..4 = {deltas}")


# --- 5 -----------------------------------------------------------------------


def identity_violations(spec, seed=0):
    """All failures of identities (a)-(f) on one catalog entry, kmax = 3."""
    bad = []
    X = build(spec, seed=seed)
    L = defect_ledger(X, kmax=3, seed=seed)
    for row in L.rows:
        k = row.k
        if row.f != sum(L.psi(i) for i in range(1, k + 1)):
            bad.append(("a", k))
        if k >= 1 and projection_image_dim(X, k, seed=seed) != L.n - row.psi:
            bad.append(("b", k))
        if row.gamma is not None:
            if row.gamma < row.psi:
                bad.append(("d", k))
            if secant_gauss_defect(X, k, seed=seed, _s=row.s) != k * row.gamma + k + row.gamma - row.f:
                bad.append(("e", k))
    dims = L.secant_dims
    increasing = all(a < b for a, b in zip(dims, dims[1:])) and dims[-1] == L.r
    if not increasing or secant_dim(X, L.k0 + 1, seed=seed) != L.r:
        bad.append(("c", None))
    if L.r - 1 >= L.n:
        Y = build(with_modifiers(spec, Modifier("project", 1)), seed=seed)
        M = defect_ledger(Y, kmax=3, seed=seed, gamma=False)
        for row in L.rows:
            if row.s < L.r - 1 and row.k <= M.kmax and M.row(row.k).f != row.f:
                bad.append(("f", row.k))
    return bad


@criterion(5, "Identity battery (a)-(f) on every catalog entry with n <= 16, r <= 30, kmax <= 3")
def test_criterion_5_identity_battery():
    entries = catalog_entries(max_n=16, max_r=30)
    assert len(entries) > 150
    violations = {format_spec(e): v for e in entries if (v := identity_violations(e))}
    assert violations == {}


# --- 6 -----------------------------------------------------------------------


@criterion(6, "Hermitian(R/split-C/split-H, 3) ledgers equal Veronese(2,2), Segre(2,2), Grassmann(1,5)")
@pytest.mark.parametrize(
    "hermitian,classical",
    [("hermitian:R,3", "veronese:2,2"), ("hermitian:splitC,3", "segre:2,2"), ("hermitian:splitH,3", "grassmann:1,5")],
)
def test_criterion_6_hermitian_coincidences(hermitian, classical):
    H, C = defect_ledger(build(hermitian)), defect_ledger(build(classical))
    assert H.key() == C.key()
    assert H.secant_dims == C.secant_dims


# --- 7 -----------------------------------------------------------------------


@criterion(7, "Gauss defect 0 on smooth catalog entries, 1 on Cone(1) over Veronese(1,3)")
def test_criterion_7_gauss_defect():
    smooth = [e for e in catalog_entries(max_n=16, max_r=30) if build(e).smooth]
    assert len(smooth) > 100
    assert {format_spec(e): t for e in smooth if (t := gauss_defect(build(e))) != 0} == {}
    assert gauss_defect(build("veronese:1,3|cone:1")) == 1


# --- 8 -----------------------------------------------------------------------


@criterion(8, "Fixed seed gives byte-identical JSON; prime and rational modes agree on criteria 1-4")
@pytest.mark.parametrize("spec", ["segre:3,4", "scroll:1,1,20|project:2", "hermitian:splitO,3"])
def test_criterion_8_byte_identical_json(spec, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert main(["analyze", spec, "--seed", "7", "--out", str(path)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert json.loads(paths[0].read_text())["seed"] == 7


@criterion(8, "Fixed seed gives byte-identical JSON; prime and rational modes agree on criteria 1-4")
def test_criterion_8_modes_agree():
    assert seg34_values(exact=False) == seg34_values(exact=True)
    cases = [(spec, None) for spec, _ in SEVERI]
    cases += [(spec, k) for k in (2, 3) for spec, _, _ in ksevi_members(k)]
    cases += [("scroll:1,10", 4), ("scroll:1,1,20", 5)]
    for spec, kmax in cases:
        X = build(spec)
        prime = defect_ledger(X, kmax=kmax)
        rational = defect_ledger(X, kmax=kmax, exact=True)
        assert prime.rows == rational.rows, spec
        assert prime.k0 == rational.k0, spec
