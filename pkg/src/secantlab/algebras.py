"""Split composition algebras over Q as structure-constant tables.

Elements are coordinate vectors; the arithmetic is written so that the
coordinates may be any ring elements (ints, Fractions or polynomials), which is
how the hermitian rank-one charts are assembled symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class CompositionAlgebra:
    name: str
    dim: int
    unit: tuple[int, ...]
    mul: Callable[[Sequence, Sequence], list]
    conj: Callable[[Sequence], list]
    norm: Callable[[Sequence], object]


def _real_mul(x, y):
    return [x[0] * y[0]]


# split-C = Q x Q with componentwise product and swap conjugation.
def _splitc_mul(x, y):
    return [x[0] * y[0], x[1] * y[1]]


# split-H = 2x2 matrices [[a, b], [c, d]] stored as (a, b, c, d);
# conjugation is the adjugate and the norm is the determinant.
def _splith_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h]


def _splith_conj(x):
    a, b, c, d = x
    return [d, -b, -c, a]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


# split-O as Zorn vector matrices [[a, alpha], [beta, b]] stored as
# (a, alpha_1..3, beta_1..3, b).
def _zorn_mul(x, y):
    a, al, be, b = x[0], x[1:4], x[4:7], x[7]
    c, ga, de, d = y[0], y[1:4], y[4:7], y[7]
    top_left = a * c + _dot(al, de)
    cr = _cross(be, de)
    top_right = [a * ga[i] + d * al[i] - cr[i] for i in range(3)]
    cr = _cross(al, ga)
    bottom_left = [c * be[i] + b * de[i] + cr[i] for i in range(3)]
    bottom_right = _dot(be, ga) + b * d
    return [top_left, *top_right, *bottom_left, bottom_right]


def _zorn_conj(x):
    return [x[7], -x[1], -x[2], -x[3], -x[4], -x[5], -x[6], x[0]]


REAL = CompositionAlgebra("R", 1, (1,), _real_mul, lambda x: [x[0]], lambda x: x[0] * x[0])
SPLIT_C = CompositionAlgebra(
    "splitC", 2, (1, 1), _splitc_mul, lambda x: [x[1], x[0]], lambda x: x[0] * x[1]
)
SPLIT_H = CompositionAlgebra(
    "splitH", 4, (1, 0, 0, 1), _splith_mul, _splith_conj, lambda x: x[0] * x[3] - x[1] * x[2]
)
SPLIT_O = CompositionAlgebra(
    "splitO",
    8,
    (1, 0, 0, 0, 0, 0, 0, 1),
    _zorn_mul,
    _zorn_conj,
    lambda x: x[0] * x[7] - _dot(x[1:4], x[4:7]),
)

ALGEBRAS = {a.name.lower(): a for a in (REAL, SPLIT_C, SPLIT_H, SPLIT_O)}


def get_algebra(name: str) -> CompositionAlgebra:
    try:
        return ALGEBRAS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown composition algebra {name!r}; expected one of R, splitC, splitH, splitO") from None
