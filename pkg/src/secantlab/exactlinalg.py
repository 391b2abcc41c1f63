"""Exact scalar fields and dense exact matrices.

Two scalar modes are supported.  Rational values are plain Python ``int`` or
``fractions.Fraction`` objects (a ``Fraction`` is always in lowest terms with
a positive denominator).  Prime-field values are Python ints in ``[0, p)``.
There is no floating point anywhere in this module.

Rank over Q uses fraction-free (Bareiss) elimination on an integer copy of the
matrix; rank over F_p uses ordinary Gauss-Jordan elimination.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Any, Iterable, Sequence

# Three primes just below 2**61.
PRIMES = (2305843009213693951, 2305843009213693921, 2305843009213693907)


class RationalField:
    """The field Q, values stored as ``int`` or ``Fraction``."""

    name = "rational"
    characteristic = 0

    def __call__(self, x: Any):
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def sample(self, rng, low: int = -999, high: int = 999) -> int:
        return rng.randint(low, high)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p, values stored as ints in ``[0, p)``."""

    def __init__(self, p: int = PRIMES[0]):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p
        self.characteristic = p

    @property
    def name(self) -> str:
        return f"prime:{self.p}"

    def __call__(self, x: Any) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {type(x).__name__} into F_{self.p}")

    def sample(self, rng, low: int = 0, high: int | None = None) -> int:
        return rng.randrange(self.p)

    def inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int = PRIMES[0]) -> PrimeField:
    return PrimeField(p)


class ExactMatrix:
    """Immutable dense matrix over a single exact field."""

    __slots__ = ("_rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Sequence[Any]], field=QQ, ncols: int | None = None):
        conv = field
        data = tuple(tuple(conv(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, size: int, field=QQ) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], field, ncols=size)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._rows[i][j]
        return self._rows[idx]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return self.nrows

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, self._rows))

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, {self.field!r})"

    def tolist(self) -> list[list[Any]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows), self.field, ncols=self.nrows) if self.nrows else ExactMatrix(
            [[] for _ in range(self.ncols)], self.field, ncols=0
        )

    T = property(transpose)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [() for _ in range(other.ncols)]
        out = [[sum(map(operator.mul, row, col)) for col in cols] for row in self._rows]
        return ExactMatrix(out, self.field, ncols=other.ncols)

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.ncols or self.field != other.field:
            raise ValueError("vstack needs equal column counts and a common field")
        return ExactMatrix(self._rows + other._rows, self.field, ncols=self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self._rows[i][j] for j in cols] for i in rows], self.field, ncols=len(cols))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)


def vstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    return reduce(ExactMatrix.vstack, mats)


def _integer_rows(rows) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        dens = [x.denominator for x in row if isinstance(x, Fraction)]
        if dens:
            m = lcm(*dens)
            out.append([int(x * m) for x in row])
        else:
            out.append(list(row))
    return out


def _ff_gauss_jordan(a: list[list[int]]) -> tuple[list[int], int]:
    """Fraction-free Gauss-Jordan elimination in place on an integer matrix.

    Returns (pivot columns, final pivot).  On exit every pivot entry equals the
    final pivot and pivot columns are zero off the pivot row.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    prev = 1
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        prow = a[row]
        for i in range(nrows):
            if i == row:
                continue
            ri = a[i]
            c = ri[col]
            if c == 0:
                if p != prev:
                    a[i] = [(p * x) // prev for x in ri]
                continue
            a[i] = [(p * x - c * y) // prev for x, y in zip(ri, prow)]
        pivots.append(col)
        prev = p
        row += 1
    return pivots, prev


def _bareiss_rank(a: list[list[int]]) -> int:
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        prow = a[row]
        for i in range(row + 1, nrows):
            ri = a[i]
            c = ri[col]
            if c == 0 and p == prev:
                continue
            a[i] = [(p * x - c * y) // prev for x, y in zip(ri, prow)]
        prev = p
        row += 1
    return row


def _modp_gauss_jordan(a: list[list[int]], p: int) -> list[int]:
    """Reduced row echelon form mod p in place; returns pivot columns."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if a[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        prow = [x * inv % p for x in a[row]]
        a[row] = prow
        for i in range(nrows):
            if i != row:
                c = a[i][col]
                if c:
                    a[i] = [(x - c * y) % p for x, y in zip(a[i], prow)]
        pivots.append(col)
        row += 1
    return pivots


def _modp_rank(a: list[list[int]], p: int) -> int:
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if a[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        prow = [x * inv % p for x in a[row]]
        a[row] = prow
        for i in range(row + 1, nrows):
            c = a[i][col]
            if c:
                a[i] = [(x - c * y) % p for x, y in zip(a[i], prow)]
        row += 1
    return row


def rank(M: ExactMatrix) -> int:
    """Exact rank of ``M`` over its field."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if isinstance(M.field, PrimeField):
        return _modp_rank([list(r) for r in M], M.field.p)
    return _bareiss_rank(_integer_rows(M))


def annihilator(M: ExactMatrix) -> ExactMatrix:
    """Rows spanning the vectors v with ``M @ v == 0``.

    Over Q the basis is returned with integer entries (fraction-free
    back-substitution), which keeps downstream polynomial coefficients integral.
    """
    ncols = M.ncols
    if M.nrows == 0:
        return ExactMatrix.identity(ncols, M.field)
    if isinstance(M.field, PrimeField):
        p = M.field.p
        a = [list(r) for r in M]
        pivots = _modp_gauss_jordan(a, p)
        pivset = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivset:
                continue
            v = [0] * ncols
            v[free] = 1
            for i, pc in enumerate(pivots):
                v[pc] = -a[i][free] % p
            basis.append(v)
        return ExactMatrix(basis, M.field, ncols=ncols)

    a = _integer_rows(M)
    pivots, d = _ff_gauss_jordan(a)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = d
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][free]
        g = reduce(gcd, v, 0)
        if g > 1:
            v = [x // g for x in v]
        basis.append(v)
    return ExactMatrix(basis, M.field, ncols=ncols)


def det(M: ExactMatrix):
    """Determinant by elimination (Bareiss over Q, Gaussian over F_p)."""
    if M.nrows != M.ncols:
        raise ValueError("determinant needs a square matrix")
    n = M.nrows
    if n == 0:
        return M.field(1)
    if isinstance(M.field, PrimeField):
        p = M.field.p
        a = [list(r) for r in M]
        result = 1
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col]), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                result = -result
            result = result * a[col][col] % p
            inv = pow(a[col][col], -1, p)
            for i in range(col + 1, n):
                c = a[i][col] * inv % p
                if c:
                    a[i] = [(x - c * y) % p for x, y in zip(a[i], a[col])]
        return result % p

    scale = Fraction(1)
    a = []
    for row in M:
        dens = [x.denominator for x in row if isinstance(x, Fraction)]
        m = lcm(*dens) if dens else 1
        scale /= m
        a.append([int(x * m) for x in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        for i in range(col + 1, n):
            a[i] = [(p * a[i][j] - a[i][col] * a[col][j]) // prev for j in range(n)]
        prev = p
    return M.field(sign * a[n - 1][n - 1] * scale)


def _entries(M) -> list[list[Any]]:
    return M.tolist() if isinstance(M, ExactMatrix) else [list(r) for r in M]


def pfaffian(M):
    """Pfaffian by recursive expansion along the first row.

    Accepts an :class:`ExactMatrix` or a square list of ring elements
    (ints, Fractions, polynomials).
    """
    a = _entries(M)
    reduce_ = M.field if isinstance(M, ExactMatrix) else (lambda x: x)
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("pfaffian needs a square matrix")
    if size % 2:
        raise ValueError("pfaffian needs an even-sized matrix")
    for i in range(size):
        for j in range(i, size):
            if reduce_(a[i][j] + a[j][i]) != 0:
                raise ValueError("pfaffian needs a skew-symmetric matrix")
    value = _pf(a, tuple(range(size)))
    return M.field(value) if isinstance(M, ExactMatrix) else value


def _pf(a, idx: tuple[int, ...]):
    if not idx:
        return 1
    first, rest = idx[0], idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        entry = a[first][j]
        if entry == 0:
            continue
        sub = rest[:pos] + rest[pos + 1 :]
        term = entry * _pf(a, sub)
        total = total + term if pos % 2 == 0 else total - term
    return total


def _det_expand(a, cols: tuple[int, ...], row: int = 0):
    """Laplace expansion of the minor on rows row.. and the given columns."""
    if row == len(a):
        return 1
    total = 0
    for pos, c in enumerate(cols):
        entry = a[row][c]
        if entry == 0:
            continue
        term = entry * _det_expand(a, cols[:pos] + cols[pos + 1 :], row + 1)
        total = total + term if pos % 2 == 0 else total - term
    return total


def maximal_minors(M) -> list:
    """All rows(M)-sized minors, column subsets in lexicographic order.

    Works over any commutative ring whose elements support ``+ - *``, so it
    serves both scalar matrices and the polynomial Plücker charts.
    """
    a = _entries(M)
    nrows = len(a)
    ncols = M.ncols if isinstance(M, ExactMatrix) else (len(a[0]) if a else 0)
    if nrows > ncols:
        raise ValueError("maximal minors need rows <= cols")
    if isinstance(M, ExactMatrix) and nrows > 4:
        return [det(M.submatrix(range(nrows), cols)) for cols in combinations(range(ncols), nrows)]
    out = [_det_expand(a, cols) for cols in combinations(range(ncols), nrows)]
    if isinstance(M, ExactMatrix):
        return [M.field(x) for x in out]
    return out
