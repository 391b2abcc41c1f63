"""Constructors for the classical variety families and the spec mini-language.

Grammar (family names are case-insensitive)::

    spec     ::= family ("|" modifier)*
    family   ::= "veronese:n,d" | "segre:m1,...,mh" | "grassmann:m,n"
               | "scroll:a1,...,an" | "spinor:k"
               | "hermitian:{R|splitC|splitH|splitO},size"
    modifier ::= "cone:c" | "project:c"
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb, prod

from .algebras import get_algebra
from .exactlinalg import QQ, ExactMatrix, maximal_minors, pfaffian, rank
from .polymap import MultiPoly, ParamMap, compose_linear

FAMILIES = ("veronese", "segre", "grassmann", "scroll", "spinor", "hermitian")
MODIFIERS = ("cone", "project")
_ALGEBRA_NAMES = {"r": "R", "splitc": "splitC", "splith": "splitH", "splito": "splitO"}


class SpecError(ValueError):
    """Malformed or out-of-range variety spec."""

    def __init__(self, message: str, position: int | None = None, expected: str | None = None):
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


@dataclass(frozen=True)
class Modifier:
    kind: str  # "cone" | "project"
    c: int


@dataclass(frozen=True)
class VarietySpec:
    family: str
    params: tuple
    modifiers: tuple[Modifier, ...] = field(default_factory=tuple)

    def __post_init__(self):
        validate(self)

    def __str__(self) -> str:
        return format_spec(self)


def Veronese(n: int, d: int) -> VarietySpec:
    return VarietySpec("veronese", (n, d))


def Segre(*ms: int) -> VarietySpec:
    return VarietySpec("segre", tuple(ms))


def Grassmann(m: int, n: int) -> VarietySpec:
    return VarietySpec("grassmann", (m, n))


def Scroll(*a: int) -> VarietySpec:
    return VarietySpec("scroll", tuple(a))


def Spinor(k: int) -> VarietySpec:
    return VarietySpec("spinor", (k,))


def Hermitian(algebra: str, size: int) -> VarietySpec:
    return VarietySpec("hermitian", (_canonical_algebra(algebra), size))


def with_modifiers(spec: VarietySpec, *mods: Modifier) -> VarietySpec:
    return VarietySpec(spec.family, spec.params, spec.modifiers + tuple(mods))


def _canonical_algebra(name: str) -> str:
    try:
        return _ALGEBRA_NAMES[name.lower()]
    except KeyError:
        raise SpecError(f"unknown algebra {name!r}", expected="R, splitC, splitH or splitO") from None


def validate(spec: VarietySpec) -> None:
    f, p = spec.family, spec.params
    if f == "veronese":
        if len(p) != 2 or p[0] < 1 or p[1] < 1:
            raise SpecError("veronese needs n >= 1 and d >= 1")
    elif f == "segre":
        if len(p) < 2 or p[0] < 1 or list(p) != sorted(p):
            raise SpecError("segre needs at least two factors with 0 < m1 <= ... <= mh")
    elif f == "grassmann":
        if len(p) != 2 or not 0 <= p[0] < p[1]:
            raise SpecError("grassmann needs 0 <= m < n")
    elif f == "scroll":
        if not p or p[0] < 0 or list(p) != sorted(p) or p[-1] <= 0:
            raise SpecError("scroll needs 0 <= a1 <= ... <= an with an > 0")
    elif f == "spinor":
        if len(p) != 1 or p[0] < 1:
            raise SpecError("spinor needs k >= 1")
    elif f == "hermitian":
        if len(p) != 2 or p[0] not in _ALGEBRA_NAMES.values() or p[1] < 3:
            raise SpecError("hermitian needs an algebra in {R, splitC, splitH, splitO} and size >= 3")
        if p[0] == "splitO" and p[1] != 3:
            raise SpecError("hermitian over split octonions exists only for size 3")
    else:
        raise SpecError(f"unknown family {f!r}", expected=", ".join(FAMILIES))
    for mod in spec.modifiers:
        if mod.kind not in MODIFIERS or mod.c < 1:
            raise SpecError(f"bad modifier {mod.kind}:{mod.c}")


# --- mini-language ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z][A-Za-z0-9]*)|(?P<int>\d+)|(?P<punct>[:,|]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpecError(f"unexpected character {text[pos]!r}", position=pos, expected="a name, an integer, ':', ',' or '|'")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None, expected: str | None = None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            got = tok[1] or "end of input"
            raise SpecError(f"unexpected {got!r}", position=tok[2], expected=expected or value or kind)
        self.i += 1
        return tok

    def int_list(self) -> list[int]:
        out = [int(self.take("int", expected="an integer")[1])]
        while self.peek()[0] == "punct" and self.peek()[1] == ",":
            self.i += 1
            out.append(int(self.take("int", expected="an integer")[1]))
        return out

    def parse(self) -> VarietySpec:
        _, word, pos = self.take("word", expected="a family name (" + ", ".join(FAMILIES) + ")")
        family = word.lower()
        if family not in FAMILIES:
            raise SpecError(f"unknown family {word!r}", position=pos, expected=", ".join(FAMILIES))
        self.take("punct", ":", expected="':'")
        if family == "hermitian":
            _, alg, apos = self.take("word", expected="an algebra (R, splitC, splitH, splitO)")
            if alg.lower() not in _ALGEBRA_NAMES:
                raise SpecError(f"unknown algebra {alg!r}", position=apos, expected="R, splitC, splitH or splitO")
            self.take("punct", ",", expected="','")
            size = int(self.take("int", expected="an integer")[1])
            params: tuple = (_ALGEBRA_NAMES[alg.lower()], size)
        else:
            params = tuple(self.int_list())
        mods = []
        while self.peek()[0] == "punct" and self.peek()[1] == "|":
            self.i += 1
            _, mword, mpos = self.take("word", expected="a modifier (cone, project)")
            kind = mword.lower()
            if kind not in MODIFIERS:
                raise SpecError(f"unknown modifier {mword!r}", position=mpos, expected="cone or project")
            self.take("punct", ":", expected="':'")
            mods.append(Modifier(kind, int(self.take("int", expected="an integer")[1])))
        self.take("end", expected="'|' or end of input")
        try:
            return VarietySpec(family, params, tuple(mods))
        except SpecError as exc:
            raise SpecError(str(exc), position=pos) from None


def parse_spec(text: str) -> VarietySpec:
    """Parse the variety mini-language, e.g. ``"scroll:1,1,20|project:2"``."""
    return _Parser(text).parse()


def format_spec(spec: VarietySpec) -> str:
    out = f"{spec.family}:" + ",".join(str(x) for x in spec.params)
    for m in spec.modifiers:
        out += f"|{m.kind}:{m.c}"
    return out


# --- builders ---------------------------------------------------------------


def _vars(n: int) -> list[MultiPoly]:
    return [MultiPoly.var(i, n) for i in range(n)]


def _veronese(n: int, d: int) -> list[MultiPoly]:
    # all monomials of degree <= d in the affine chart x_0 = 1
    coords = []
    for combo in combinations_with_replacement(range(n + 1), d):
        exp = [0] * n
        for i in combo:
            if i > 0:
                exp[i - 1] += 1
        coords.append(MultiPoly.monomial(exp))
    return coords


def _segre(ms: tuple[int, ...]) -> list[MultiPoly]:
    n = sum(ms)
    t = _vars(n)
    factors = []
    off = 0
    for m in ms:
        factors.append([MultiPoly.const(1, n)] + t[off : off + m])
        off += m
    coords = [MultiPoly.const(1, n)]
    for fac in factors:
        coords = [a * b for a in coords for b in fac]
    return coords


def _grassmann(m: int, n: int) -> list[MultiPoly]:
    rows, free = m + 1, n - m
    nv = rows * free
    t = _vars(nv)
    one, zero = MultiPoly.const(1, nv), MultiPoly(nv)
    mat = []
    for i in range(rows):
        mat.append([one if j == i else zero for j in range(rows)] + t[i * free : (i + 1) * free])
    return maximal_minors(mat)


def _scroll(a: tuple[int, ...]) -> list[MultiPoly]:
    # parameters: t, then x_1..x_{n-1}; x_n = 1 on this chart
    nv = len(a)
    t = MultiPoly.var(0, nv)
    xs = _vars(nv)[1:] + [MultiPoly.const(1, nv)]
    coords = []
    for x, ai in zip(xs, a):
        for j in range(ai + 1):
            coords.append(x * t**j)
    return coords


def _spinor(k: int) -> list[MultiPoly]:
    size = k + 1
    nv = comb(size, 2)
    t = _vars(nv)
    zero = MultiPoly(nv)
    skew = [[zero] * size for _ in range(size)]
    idx = 0
    for i in range(size):
        for j in range(i + 1, size):
            skew[i][j] = t[idx]
            skew[j][i] = -t[idx]
            idx += 1
    coords = []
    for even in range(0, size + 1, 2):
        for subset in combinations(range(size), even):
            if not subset:
                coords.append(MultiPoly.const(1, nv))
                continue
            sub = [[skew[i][j] for j in subset] for i in subset]
            coords.append(pfaffian(sub))
    return coords


def _hermitian(alg_name: str, size: int) -> list[MultiPoly]:
    alg = get_algebra(alg_name)
    d = alg.dim
    nv = (size - 1) * d
    t = _vars(nv)
    unit = [MultiPoly.const(c, nv) for c in alg.unit]
    v = [unit] + [t[i * d : (i + 1) * d] for i in range(size - 1)]
    coords = [alg.norm(vi) for vi in v]
    for i in range(size):
        for j in range(i + 1, size):
            coords.extend(alg.mul(v[i], alg.conj(v[j])))
    return coords


def family_dims(spec: VarietySpec) -> tuple[int, int]:
    """(n, r) dictated by the family formulas, before modifiers."""
    f, p = spec.family, spec.params
    if f == "veronese":
        n, d = p
        return n, comb(n + d, d) - 1
    if f == "segre":
        return sum(p), prod(m + 1 for m in p) - 1
    if f == "grassmann":
        m, n = p
        return (m + 1) * (n - m), comb(n + 1, m + 1) - 1
    if f == "scroll":
        return len(p), sum(p) + len(p) - 1
    if f == "spinor":
        (k,) = p
        return comb(k + 1, 2), 2**k - 1
    if f == "hermitian":
        alg, s = p
        d = get_algebra(alg).dim
        return (s - 1) * d, s + comb(s, 2) * d - 1
    raise SpecError(f"unknown family {f!r}")


def expected_dims(spec: VarietySpec) -> tuple[int, int]:
    n, r = family_dims(spec)
    for mod in spec.modifiers:
        if mod.kind == "cone":
            n, r = n + mod.c, r + mod.c
        else:
            r = r - mod.c
    return n, r


def _family_smooth(spec: VarietySpec) -> bool:
    if spec.family == "scroll":
        return spec.params[0] > 0
    return True


def _cone(X: ParamMap, c: int) -> ParamMap:
    nv = X.n + c
    coords = [p.embed(nv, 0) for p in X.coords] + [MultiPoly.var(X.n + i, nv) for i in range(c)]
    return ParamMap(nv, X.r + c, tuple(coords), label=f"{X.label}|cone:{c}", smooth=False)


def random_projection(rows: int, cols: int, rng: random.Random) -> ExactMatrix:
    """Seeded random full-rank integer matrix with entries in [-999, 999]."""
    while True:
        L = ExactMatrix([[rng.randint(-999, 999) for _ in range(cols)] for _ in range(rows)], QQ, ncols=cols)
        if rank(L) == rows:
            return L


def _project(X: ParamMap, c: int, rng: random.Random) -> ParamMap:
    if X.r - c < 1:
        raise SpecError(f"cannot project P^{X.r} down by {c}")
    L = random_projection(X.r + 1 - c, X.r + 1, rng)
    new_r = X.r - c
    # a general projection stays smooth when the target has room for the secant variety
    smooth = X.smooth and new_r >= 2 * X.n + 1
    return compose_linear(X, L, label=f"{X.label}|project:{c}", smooth=smooth)


def build(spec: VarietySpec | str, seed: int = 0) -> ParamMap:
    """Build the polynomial chart of a variety spec.

    ``seed`` only affects ``project`` modifiers; each modifier draws from its
    own stream so that specs sharing a prefix share their projections.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, p = spec.family, spec.params
    if f == "veronese":
        coords = _veronese(*p)
    elif f == "segre":
        coords = _segre(p)
    elif f == "grassmann":
        coords = _grassmann(*p)
    elif f == "scroll":
        coords = _scroll(p)
    elif f == "spinor":
        coords = _spinor(*p)
    else:
        coords = _hermitian(*p)
    n, r = family_dims(spec)
    base = VarietySpec(f, p)
    X = ParamMap(n, r, tuple(coords), label=format_spec(base), smooth=_family_smooth(spec))
    for idx, mod in enumerate(spec.modifiers):
        if mod.kind == "cone":
            X = _cone(X, mod.c)
        else:
            X = _project(X, mod.c, random.Random(f"project:{seed}:{idx}:{mod.c}"))
    return X


def catalog_entries(max_n: int = 16, max_r: int = 30, max_scroll_degree: int = 12) -> list[VarietySpec]:
    """Every catalog member with ``n <= max_n`` and ``r <= max_r``.

    Linear spaces (Veronese with d = 1, G(0, n), spinor k <= 2) are left out,
    Grassmannians are listed once up to duality, scrolls have two or three
    summands with positive a_i and total degree at most ``max_scroll_degree``.
    A few cones over small members are appended.
    """
    out: list[VarietySpec] = []

    def keep(spec: VarietySpec) -> bool:
        n, r = family_dims(spec)
        return n <= max_n and r <= max_r

    for n in range(1, max_n + 1):
        for d in range(2, max_r + 1):
            if comb(n + d, d) - 1 > max_r:
                break
            out.append(Veronese(n, d))
    for h in (2, 3, 4):
        for ms in combinations_with_replacement(range(1, max_n + 1), h):
            spec = Segre(*ms)
            if keep(spec):
                out.append(spec)
    for n in range(3, max_r + 1):
        for m in range(1, (n - 1) // 2 + 1):
            spec = Grassmann(m, n)
            if keep(spec):
                out.append(spec)
    for length in (2, 3):
        for a in combinations_with_replacement(range(1, max_scroll_degree + 1), length):
            if sum(a) <= max_scroll_degree:
                spec = Scroll(*a)
                if keep(spec):
                    out.append(spec)
    for k in range(3, 10):
        if keep(Spinor(k)):
            out.append(Spinor(k))
    for alg in ("R", "splitC", "splitH", "splitO"):
        for size in range(3, 4 if alg == "splitO" else 10):
            spec = Hermitian(alg, size)
            if keep(spec):
                out.append(spec)
    for base in (Veronese(1, 3), Veronese(2, 2), Segre(1, 2), Scroll(1, 2)):
        spec = with_modifiers(base, Modifier("cone", 1))
        if keep(spec):
            out.append(spec)
    return out


CATALOG_TEXT = [
    ("veronese:n,d", "n >= 1, d >= 1", "dim n, ambient C(n+d,d) - 1", "degree-d monomials on the chart x_0 = 1"),
    ("segre:m1,...,mh", "h >= 2, 0 < m1 <= ... <= mh", "dim m1+...+mh, ambient (m1+1)...(mh+1) - 1", "products of chart coordinates"),
    ("grassmann:m,n", "0 <= m < n", "dim (m+1)(n-m), ambient C(n+1,m+1) - 1", "maximal minors of [I | B] (Plucker)"),
    ("scroll:a1,...,an", "0 <= a1 <= ... <= an, an > 0", "dim n, ambient a1+...+an+n-1, degree r-n+1", "x_i t^j, 0 <= j <= a_i, x_n = 1; smooth iff a1 > 0"),
    ("spinor:k", "k >= 1", "dim C(k+1,2), ambient 2^k - 1", "even principal sub-Pfaffians of a (k+1)x(k+1) skew matrix"),
    ("hermitian:A,s", "A in {R, splitC, splitH, splitO}, s >= 3, s = 3 for splitO", "dim (s-1)dim(A), ambient s + C(s,2)dim(A) - 1", "entries of v v* with v = (1, u_1, ..., u_{s-1})"),
    ("|cone:c", "c >= 1", "dim +c, ambient +c", "c fresh parameters and coordinates (vertex P^{c-1})"),
    ("|project:c", "c >= 1", "dim unchanged, ambient -c", "seeded random full-rank linear projection"),
]
