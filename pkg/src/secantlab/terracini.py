"""Secant dimensions, defect ledgers, tangential projections and contact loci.

Every dimension is a generic rank measured at random points.  Sampled ranks
never exceed the generic rank, so each quantity is the maximum over a few
independent trials.  In prime-field mode trial ``i`` runs modulo
``PRIMES[i % 3]``.

Contact loci and Gauss fibres are measured by the tangent space, at the base
sample ``t0``, of the scheme

    { t : N . phi(t) = 0 and N . d phi/dt_j(t) = 0 for all j }

where the rows of ``N`` cut out a fixed tangent span.  Its Jacobian at ``t0``
has rows ``(nu . d2 phi/dt_i dt_j)_i`` for every form ``nu`` and every ``j``.
Since the parametrization may have positive-dimensional fibres (join charts),
the reported dimension is ``dim(image) - rank(Jacobian)``.  If the scheme is
non-reduced at ``t0`` this over-counts; the value is an upper bound.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .exactlinalg import PRIMES, QQ, ExactMatrix, GF, annihilator, rank, vstack
from .polymap import AnalysisError, ParamMap, compose_linear, jet, join_map, sample_point

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
KMAX_CAP = 6


def field_for(exact: bool, trial: int = 0):
    return QQ if exact else GF(PRIMES[trial % len(PRIMES)])


def _rng(seed: int, *tags) -> random.Random:
    return random.Random(":".join(str(x) for x in (seed,) + tags))


@dataclass(frozen=True)
class TangentFrame:
    matrix: ExactMatrix
    base_point: tuple


@dataclass
class LedgerRow:
    k: int
    s: int
    e: int
    delta: int
    f: int
    psi: int
    gamma: int | None = None
    t: int | None = None

    def as_dict(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val is not None}


@dataclass
class DefectLedger:
    """Per-k secant data of one chart, k = 0 .. min(kmax, k0)."""

    label: str
    n: int
    r: int
    k0: int
    rows: list[LedgerRow] = field(default_factory=list)
    smooth: bool = True
    secant_dims: list[int] = field(default_factory=list)  # s^(k) for k = 0..k0

    def row(self, k: int) -> LedgerRow:
        for row in self.rows:
            if row.k == k:
                return row
        raise KeyError(k)

    @property
    def kmax(self) -> int:
        return self.rows[-1].k if self.rows else 0

    def s(self, k: int) -> int:
        return self.secant_dims[k] if k < len(self.secant_dims) else self.r

    def f(self, k: int) -> int:
        return (k + 1) * self.n + k - self.s(k)

    def psi(self, k: int) -> int:
        return 0 if k == 0 else self.f(k) - self.f(k - 1)

    def key(self) -> tuple:
        """Ledger contents without the label, for isomorphism comparisons."""
        return (self.n, self.r, self.k0, tuple(tuple(sorted(r.as_dict().items())) for r in self.rows))


def sample_frames(
    X: ParamMap, count: int, rng: random.Random, fld, require_immersion: bool = True
) -> list[TangentFrame]:
    out = []
    for _ in range(count):
        s = sample_point(X, rng, fld, require_immersion=require_immersion)
        out.append(TangentFrame(s.frame, s.params))
    return out


def stacked_rank(frames: Sequence[TangentFrame]) -> int:
    return rank(vstack([fr.matrix for fr in frames]))


def secant_dim(
    X: ParamMap,
    k: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exact: bool = False,
    require_immersion: bool = False,
) -> int:
    """Dimension of the k-secant variety: rank of k+1 stacked frames minus one."""
    if k < 0:
        raise ValueError("k must be non-negative")
    best = 0
    failures = 0
    for trial in range(trials):
        fld = field_for(exact, trial)
        try:
            frames = sample_frames(X, k + 1, _rng(seed, "secant", k, trial), fld, require_immersion)
        except AnalysisError:
            failures += 1
            continue
        best = max(best, stacked_rank(frames))
        if best == X.r + 1:
            break
    if failures == trials:
        raise AnalysisError(f"all {trials} trials degenerate on {X.label or 'chart'}")
    return best - 1


def join_dim(Xs: Sequence[ParamMap], trials: int = DEFAULT_TRIALS, seed: int = 0, exact: bool = False) -> int:
    """Dimension of a join measured as the generic rank of the join chart."""
    J = join_map(Xs)
    return secant_dim(J, 0, trials=trials, seed=seed, exact=exact)


def defect_ledger(
    X: ParamMap,
    kmax: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exact: bool = False,
    gamma: bool = True,
) -> DefectLedger:
    """Full defect ledger through ``min(kmax, k0)``.

    ``k0`` is always located, even past ``kmax``.  The default ``kmax`` is
    ``k0`` capped at 6.
    """
    if kmax is not None and kmax < 1:
        raise ValueError("kmax must be >= 1")
    n, r = X.n, X.r
    s0 = secant_dim(X, 0, trials, seed, exact)
    if s0 != n:
        raise AnalysisError(f"{X.label}: chart is not an immersion at general points (rank {s0 + 1}, expected {n + 1})")
    dims = [s0]
    while dims[-1] < r:
        k = len(dims)
        dims.append(secant_dim(X, k, trials, seed, exact))
        if dims[-1] <= dims[-2]:
            # a stalled secant dimension below r contradicts the fill property
            raise AnalysisError(f"{X.label}: s^({k}) = {dims[-1]} did not increase; sampling is not general")
    k0 = len(dims) - 1
    top = min(k0, KMAX_CAP) if kmax is None else min(kmax, k0)

    ledger = DefectLedger(label=X.label, n=n, r=r, k0=k0, smooth=X.smooth, secant_dims=dims)
    f_prev = 0
    for k in range(top + 1):
        s = dims[k]
        f = (k + 1) * n + k - s
        e = min(r, n * (k + 1) + k)
        row = LedgerRow(k=k, s=s, e=e, delta=e - s, f=f, psi=f - f_prev)
        if gamma and k >= 1 and s < r:
            row.gamma = contact_gamma(X, k, seed=seed, trials=trials, exact=exact, _s=s)
            row.t = k * row.gamma + k + row.gamma - f
        ledger.rows.append(row)
        f_prev = f
    logger.debug("ledger %s: %s", X.label, ledger.rows)
    return ledger


def tangential_projection(X: ParamMap, k: int, seed: int = 0) -> ParamMap:
    """Project ``X`` from the span of its tangent spaces at k random points.

    The centre is computed over Q so the returned chart is valid in every
    scalar mode.  Its image dimension is ``s^(k) - s^(k-1) - 1``.
    """
    if k == 0:
        return X
    if k < 0:
        raise ValueError("k must be non-negative")
    frames = sample_frames(X, k, _rng(seed, "tanproj", k), QQ)
    N = annihilator(vstack([fr.matrix for fr in frames]))
    if N.nrows == 0:
        raise AnalysisError(f"{X.label}: tangent span at {k} points fills P^{X.r}; nothing left to project to")
    return compose_linear(X, N, label=f"{X.label}|tanproj:{k}", smooth=False)


def _fibre_tangent_dim(X: ParamMap, base: Sequence, N: ExactMatrix, fld) -> int:
    """dim(image of X) - rank of the containment-system Jacobian at ``base``."""
    j = jet(X, base, fld, order=2)
    frame = ExactMatrix((j.point,) + j.grads, fld, ncols=X.r + 1)
    image_dim = rank(frame) - 1
    if N.nrows == 0:
        return image_dim
    n = X.n
    hess = j.hessian
    zero = (0,) * (X.r + 1)
    forms = [tuple(nu) for nu in N]
    rows = []
    p = getattr(fld, "p", None)
    for nu in forms:
        # cache contractions nu . H_ij (symmetric)
        contr = {}
        for (a, b), vec in hess.items():
            val = sum(x * y for x, y in zip(nu, vec))
            contr[(a, b)] = val % p if p else val
        for jv in range(n):
            row = [contr.get((min(i, jv), max(i, jv)), 0) for i in range(n)]
            if any(row):
                rows.append(row)
    if not rows:
        return image_dim
    return image_dim - rank(ExactMatrix(rows, fld, ncols=n))


def gauss_defect(X: ParamMap, seed: int = 0, trials: int = DEFAULT_TRIALS, exact: bool = False) -> int:
    """Dimension of the general Gauss fibre (tangent-space method)."""
    best = None
    for trial in range(trials):
        fld = field_for(exact, trial)
        (fr,) = sample_frames(X, 1, _rng(seed, "gauss", trial), fld, require_immersion=False)
        N = annihilator(fr.matrix)
        val = _fibre_tangent_dim(X, fr.base_point, N, fld)
        best = val if best is None else min(best, val)
    return best


def contact_gamma(
    X: ParamMap,
    k: int,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    exact: bool = False,
    _s: int | None = None,
) -> int:
    """Dimension of the tangential k-contact locus at p0 (upper bound).

    Defined only when s^(k) < r.
    """
    if k < 1:
        raise ValueError("contact loci need k >= 1")
    s = _s if _s is not None else secant_dim(X, k, trials, seed, exact)
    if s >= X.r:
        raise AnalysisError("contact locus undefined: the k-secant variety fills the ambient space")
    best = None
    for trial in range(trials):
        fld = field_for(exact, trial)
        frames = sample_frames(X, k + 1, _rng(seed, "gamma", k, trial), fld)
        stack = vstack([fr.matrix for fr in frames])
        if rank(stack) - 1 < s:
            continue
        N = annihilator(stack)
        val = _fibre_tangent_dim(X, frames[0].base_point, N, fld)
        best = val if best is None else min(best, val)
    if best is None:
        raise AnalysisError(f"{X.label}: no trial reached the generic secant rank for k={k}")
    return best


def secant_gauss_defect(
    X: ParamMap, k: int, seed: int = 0, trials: int = DEFAULT_TRIALS, exact: bool = False, _s: int | None = None
) -> int:
    """Gauss-fibre dimension of the k-secant variety, from the join chart."""
    s = _s if _s is not None else secant_dim(X, k, trials, seed, exact)
    if s >= X.r:
        raise AnalysisError("Gauss fibre of a filling secant variety is undefined")
    J = join_map([X] * (k + 1))
    best = None
    for trial in range(trials):
        fld = field_for(exact, trial)
        (fr,) = sample_frames(J, 1, _rng(seed, "secgauss", k, trial), fld, require_immersion=False)
        if rank(fr.matrix) - 1 < s:
            continue
        N = annihilator(fr.matrix)
        val = _fibre_tangent_dim(J, fr.base_point, N, fld)
        best = val if best is None else min(best, val)
    if best is None:
        raise AnalysisError(f"{X.label}: join chart never reached the generic rank for k={k}")
    return best


def projection_image_dim(X: ParamMap, k: int, seed: int = 0, trials: int = DEFAULT_TRIALS, exact: bool = False) -> int:
    """Dimension of the image of a general k-tangential projection."""
    Y = tangential_projection(X, k, seed=seed)
    return secant_dim(Y, 0, trials=trials, seed=seed, exact=exact)
