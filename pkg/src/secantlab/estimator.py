"""Estimator-style front end.

``SecantAnalyzer`` follows the scikit-learn conventions: hyper-parameters are
set in ``__init__`` and exposed through ``get_params``/``set_params``; ``fit``
measures a variety and stores results in trailing-underscore attributes.

    >>> from secantlab import SecantAnalyzer
    >>> an = SecantAnalyzer(kmax=2, seed=7).fit("segre:3,4")
    >>> [row.s for row in an.ledger_.rows]
    [7, 13, 17]
"""

from __future__ import annotations

import numbers

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bounds import BoundReport, evaluate_bounds
from .catalog import VarietySpec, build, format_spec, parse_spec
from .exactlinalg import QQ, annihilator, vstack
from .polymap import ParamMap, compose_linear
from .terracini import DEFAULT_TRIALS, DefectLedger, _rng, defect_ledger, sample_frames


def check_variety(X, seed: int = 0) -> tuple[ParamMap, str]:
    """Coerce a spec string, :class:`VarietySpec` or :class:`ParamMap` to a chart.

    Returns the chart and a canonical spec string (the chart label for raw
    charts).
    """
    if isinstance(X, ParamMap):
        return X, X.label
    if isinstance(X, str):
        X = parse_spec(X)
    if isinstance(X, VarietySpec):
        return build(X, seed=seed), format_spec(X)
    raise TypeError(f"expected a spec string, VarietySpec or ParamMap, got {type(X).__name__}")


def _check_params(est) -> None:
    if est.kmax is not None and (not isinstance(est.kmax, numbers.Integral) or est.kmax < 1):
        raise ValueError(f"kmax must be a positive integer or None, got {est.kmax!r}")
    if not isinstance(est.trials, numbers.Integral) or est.trials < 1:
        raise ValueError(f"trials must be a positive integer, got {est.trials!r}")
    if not isinstance(est.seed, numbers.Integral):
        raise ValueError(f"seed must be an integer, got {est.seed!r}")


class SecantAnalyzer(BaseEstimator):
    """Measure the secant defect ledger of a variety and evaluate the bounds.

    Parameters
    ----------
    kmax : int or None
        Largest k in the ledger; ``None`` means k0 capped at 6.
    trials : int
        Random trials per generic rank (the maximum is kept).
    seed : int
        Seed for every random choice, including ``project`` modifiers.
    exact : bool
        Work over Q instead of the prime fields.
    gamma : bool
        Compute contact-locus dimensions where the secant variety does not fill.
    """

    def __init__(self, kmax=None, trials=DEFAULT_TRIALS, seed=0, exact=False, gamma=True):
        self.kmax = kmax
        self.trials = trials
        self.seed = seed
        self.exact = exact
        self.gamma = gamma

    def fit(self, X, y=None):
        _check_params(self)
        chart, spec = check_variety(X, seed=self.seed)
        self.variety_ = chart
        self.spec_ = spec
        self.ledger_: DefectLedger = defect_ledger(
            chart, kmax=self.kmax, trials=self.trials, seed=self.seed, exact=self.exact, gamma=self.gamma
        )
        self.bounds_: BoundReport = evaluate_bounds(self.ledger_, chart if self.gamma else None, seed=self.seed)
        self.k0_ = self.ledger_.k0
        self.severi_ = list(self.bounds_.severi_ks)
        return self

    @property
    def mode(self) -> str:
        return "rational" if self.exact else "prime"

    def to_report(self) -> dict:
        check_is_fitted(self, ["ledger_", "bounds_"])
        from .report import build_report

        return build_report(self.spec_, self.ledger_, self.bounds_, self.mode, self.seed)


class TangentialProjector(TransformerMixin, BaseEstimator):
    """General k-tangential projection as a fitted linear map.

    ``fit`` picks k random points of the chart and stores the linear forms
    vanishing on the span of their tangent spaces; ``transform`` composes a
    chart in the same ambient space with that projection.
    """

    def __init__(self, k=1, seed=0):
        self.k = k
        self.seed = seed

    def fit(self, X, y=None):
        if not isinstance(self.k, numbers.Integral) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k!r}")
        chart, _ = check_variety(X, seed=self.seed)
        self.ambient_ = chart.r
        if self.k == 0:
            self.centre_ = None
            return self
        frames = sample_frames(chart, self.k, _rng(self.seed, "tanproj", self.k), QQ)
        self.centre_ = annihilator(vstack([fr.matrix for fr in frames]))
        return self

    def transform(self, X):
        check_is_fitted(self, ["ambient_"])
        chart, _ = check_variety(X, seed=self.seed)
        if chart.r != self.ambient_:
            raise ValueError(f"chart lives in P^{chart.r}, projector was fitted in P^{self.ambient_}")
        if self.centre_ is None:
            return chart
        return compose_linear(chart, self.centre_, label=f"{chart.label}|tanproj:{self.k}", smooth=False)
