"""Sparse multivariate polynomials and polynomial parametrizations.

A :class:`ParamMap` is an affine chart ``t -> (phi_0(t), ..., phi_r(t))`` of a
projective variety.  Its tangent frame at ``t`` is the matrix with rows
``phi(t), d phi/dt_1(t), ..., d phi/dt_n(t)``; the row space is the affine
cone over the embedded tangent space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlinalg import QQ, ExactMatrix, PrimeField, rank

Exponent = tuple[int, ...]


class AnalysisError(RuntimeError):
    """Raised when a chart cannot be sampled at a general point."""


class MultiPoly:
    """Polynomial with rational coefficients in ``num_vars`` variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, int | Fraction] | None = None):
        self.num_vars = num_vars
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has wrong length for {num_vars} variables")
            if c:
                clean[tuple(exp)] = c
        self.terms: dict[Exponent, int | Fraction] = clean

    @classmethod
    def const(cls, c, num_vars: int) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def var(cls, i: int, num_vars: int) -> "MultiPoly":
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): c})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return MultiPoly(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, int | Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1, self.num_vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.num_vars)
        return isinstance(other, MultiPoly) and self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"t{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def diff(self, i: int) -> "MultiPoly":
        terms = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                terms[tuple(e)] = c * exp[i]
        return MultiPoly(self.num_vars, terms)

    def evaluate(self, t: Sequence, fld=QQ):
        total = 0
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(t, exp):
                if e:
                    term = term * x**e
            total = total + term
        return fld(total)

    def embed(self, num_vars: int, offset: int) -> "MultiPoly":
        """Same polynomial, variables shifted by ``offset`` in a larger ring."""
        pad_after = num_vars - offset - self.num_vars
        if pad_after < 0:
            raise ValueError("target ring too small")
        head = (0,) * offset
        tail = (0,) * pad_after
        return MultiPoly(num_vars, {head + e + tail: c for e, c in self.terms.items()})


def _compile(coords: Sequence[MultiPoly], fld) -> list[list[tuple[int, tuple[tuple[int, int], ...]]]]:
    out = []
    for poly in coords:
        terms = []
        for exp, c in poly.terms.items():
            support = tuple((v, e) for v, e in enumerate(exp) if e)
            terms.append((fld(c), support))
        out.append(terms)
    return out


@dataclass(frozen=True)
class Jet:
    """Value, first and (optionally) second derivatives of a chart at a point."""

    point: tuple
    grads: tuple[tuple, ...]
    hessian: dict[tuple[int, int], tuple] | None = None


@dataclass(frozen=True, eq=False)
class ParamMap:
    """Polynomial chart of a projective variety of dimension ``n`` in ``P^r``.

    ``smooth`` records whether the underlying variety is known to be smooth; it
    only affects how theorem hypotheses are reported.
    """

    n: int
    r: int
    coords: tuple[MultiPoly, ...]
    label: str = ""
    smooth: bool = True
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.coords) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} coordinates, got {len(self.coords)}")
        if any(c.num_vars != self.n for c in self.coords):
            raise ValueError("all coordinates must be polynomials in n variables")

    def compiled(self, fld):
        key = ("compiled", fld)
        if key not in self._cache:
            self._cache[key] = _compile(self.coords, fld)
        return self._cache[key]

    def max_degree(self) -> int:
        return max((c.degree for c in self.coords), default=0)


def evaluate(X: ParamMap, t: Sequence, fld=QQ) -> tuple:
    """The r+1 homogeneous coordinates of the chart at ``t``."""
    return jet(X, t, fld, order=0).point


def jet(X: ParamMap, t: Sequence, fld=QQ, order: int = 1) -> Jet:
    if len(t) != X.n:
        raise ValueError(f"expected {X.n} parameters, got {len(t)}")
    t = [fld(x) for x in t]
    n = X.n
    deg = max(X.max_degree(), 0)
    is_prime = isinstance(fld, PrimeField)
    p = fld.p if is_prime else None
    pw = []
    for x in t:
        row = [1]
        for _ in range(deg):
            row.append(row[-1] * x % p if is_prime else row[-1] * x)
        pw.append(row)

    values = []
    grads = [[0] * (X.r + 1) for _ in range(n)] if order >= 1 else []
    hess: dict[tuple[int, int], list] = {}
    for ci, terms in enumerate(X.compiled(fld)):
        val = 0
        for c, supp in terms:
            if not supp:
                val += c
                continue
            factors = [pw[v][e] for v, e in supp]
            m = len(factors)
            prefix = [1] * (m + 1)
            for a in range(m):
                prefix[a + 1] = prefix[a] * factors[a]
            val += c * prefix[m]
            if order < 1:
                continue
            suffix = [1] * (m + 1)
            for a in range(m - 1, -1, -1):
                suffix[a] = suffix[a + 1] * factors[a]
            for a, (v, e) in enumerate(supp):
                others = prefix[a] * suffix[a + 1]
                grads[v][ci] += c * e * pw[v][e - 1] * others
                if order < 2:
                    continue
                if e >= 2:
                    key = (v, v)
                    vec = hess.get(key)
                    if vec is None:
                        vec = hess[key] = [0] * (X.r + 1)
                    vec[ci] += c * e * (e - 1) * pw[v][e - 2] * others
                for b in range(a + 1, m):
                    w, f = supp[b]
                    rest = prefix[a] * _prod(factors, a + 1, b) * suffix[b + 1]
                    key = (v, w) if v < w else (w, v)
                    vec = hess.get(key)
                    if vec is None:
                        vec = hess[key] = [0] * (X.r + 1)
                    vec[ci] += c * e * f * pw[v][e - 1] * pw[w][f - 1] * rest
        values.append(val)

    point = tuple(fld(x) for x in values)
    gr = tuple(tuple(fld(x) for x in g) for g in grads)
    hs = None
    if order >= 2:
        hs = {k: tuple(fld(x) for x in v) for k, v in hess.items()}
    return Jet(point, gr, hs)


def _prod(xs, lo, hi):
    out = 1
    for x in xs[lo:hi]:
        out *= x
    return out


def tangent_matrix(X: ParamMap, t: Sequence, fld=QQ) -> ExactMatrix:
    """Rows phi(t), d phi/dt_1(t), ..., d phi/dt_n(t)."""
    j = jet(X, t, fld, order=1)
    return ExactMatrix((j.point,) + j.grads, fld, ncols=X.r + 1)


@dataclass(frozen=True)
class PointSample:
    params: tuple
    point: tuple
    frame: ExactMatrix


def sample_point(
    X: ParamMap,
    rng: random.Random,
    fld=QQ,
    require_immersion: bool = True,
    attempts: int = 10,
) -> PointSample:
    """Draw a general point of the chart, resampling degenerate draws.

    Rational mode uses integers in [-999, 999]; prime mode uses uniform
    residues.  A draw is rejected if the point is zero or (when
    ``require_immersion``) the tangent frame has rank below n+1.
    """
    for _ in range(attempts):
        t = tuple(fld.sample(rng) for _ in range(X.n))
        frame = tangent_matrix(X, t, fld)
        point = frame[0]
        if all(x == 0 for x in point):
            continue
        if require_immersion and rank(frame) < X.n + 1:
            continue
        return PointSample(t, point, frame)
    raise AnalysisError(f"could not sample a general point of {X.label or 'chart'} after {attempts} attempts")


def compose_linear(X: ParamMap, L: ExactMatrix, label: str | None = None, smooth: bool | None = None) -> ParamMap:
    """Apply the linear map ``L`` to the coordinates of ``X``.

    ``L`` must have rational entries (projections are computed exactly so that
    the resulting chart is valid in every scalar mode).
    """
    if L.ncols != X.r + 1:
        raise ValueError(f"linear map has {L.ncols} columns, chart has {X.r + 1} coordinates")
    if isinstance(L.field, PrimeField):
        raise ValueError("compose_linear needs a rational matrix")
    zero = MultiPoly(X.n)
    coords = []
    for row in L:
        acc: dict[Exponent, int | Fraction] = {}
        for c, poly in zip(row, X.coords):
            if c == 0:
                continue
            for e, a in poly.terms.items():
                acc[e] = acc.get(e, 0) + c * a
        coords.append(MultiPoly(X.n, acc) if acc else zero)
    return ParamMap(
        n=X.n,
        r=L.nrows - 1,
        coords=tuple(coords),
        label=label if label is not None else f"{X.label}|linear({L.nrows})",
        smooth=X.smooth if smooth is None else smooth,
    )


def join_map(Xs: Sequence[ParamMap], label: str | None = None) -> ParamMap:
    """Chart of the join: ``phi_0(t_0) + sum_{i>=1} lambda_i phi_i(t_i)``.

    Parameters are ordered t_0, ..., t_k followed by lambda_1, ..., lambda_k.
    For k+1 copies of the same chart this parametrizes the k-secant variety.
    """
    if not Xs:
        raise ValueError("join of an empty list")
    r = Xs[0].r
    if any(X.r != r for X in Xs):
        raise ValueError("all charts must share the ambient space")
    if len(Xs) == 1:
        return Xs[0]
    k = len(Xs) - 1
    total = sum(X.n for X in Xs) + k
    offsets = []
    off = 0
    for X in Xs:
        offsets.append(off)
        off += X.n
    coords = []
    for ci in range(r + 1):
        acc = Xs[0].coords[ci].embed(total, 0)
        for i in range(1, k + 1):
            lam = MultiPoly.var(off + i - 1, total)
            acc = acc + lam * Xs[i].coords[ci].embed(total, offsets[i])
        coords.append(acc)
    return ParamMap(
        n=total,
        r=r,
        coords=tuple(coords),
        label=label or "join(" + ", ".join(X.label for X in Xs) + ")",
        smooth=False,
    )


def generic_rank(X: ParamMap, rng: random.Random, fld=QQ, trials: int = 3) -> int:
    """Max over trials of the tangent-frame rank at a random point."""
    best = 0
    for _ in range(trials):
        s = sample_point(X, rng, fld, require_immersion=False)
        best = max(best, rank(s.frame))
    return best


def coordinate_projection(r: int, keep: Iterable[int]) -> ExactMatrix:
    keep = list(keep)
    return ExactMatrix([[1 if j == i else 0 for j in range(r + 1)] for i in keep], QQ, ncols=r + 1)
