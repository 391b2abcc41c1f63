import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from secantlab.exactlinalg import (
    GF,
    PRIMES,
    QQ,
    ExactMatrix,
    annihilator,
    det,
    maximal_minors,
    pfaffian,
    rank,
)

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [draw(st.lists(small_ints, min_size=n, max_size=n)) for _ in range(m)]


@st.composite
def low_rank_matrices(draw):
    # product of an m x k and a k x n matrix has rank <= k
    m, n, k = draw(st.integers(2, 6)), draw(st.integers(2, 6)), draw(st.integers(1, 3))
    A = [draw(st.lists(small_ints, min_size=k, max_size=k)) for _ in range(m)]
    B = [draw(st.lists(small_ints, min_size=n, max_size=n)) for _ in range(k)]
    return [[sum(A[i][l] * B[l][j] for l in range(k)) for j in range(n)] for i in range(m)]


def random_skew(size, rng, lo=-20, hi=20):
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            a[i][j] = rng.randint(lo, hi)
            a[j][i] = -a[i][j]
    return a


def test_rank_identity_and_proportional():
    assert rank(ExactMatrix.identity(5)) == 5
    assert rank(ExactMatrix([[1, 2], [2, 4]])) == 1
    assert rank(ExactMatrix([[1, 2], [2, 4]], GF())) == 1
    assert rank(ExactMatrix([], ncols=3)) == 0


def test_rank_with_fractions():
    M = ExactMatrix([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
    assert rank(M) == 1


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rank_matches_sympy(rows):
    assert rank(ExactMatrix(rows)) == sp.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(low_rank_matrices())
def test_rank_low_rank_products(rows):
    expected = sp.Matrix(rows).rank()
    assert rank(ExactMatrix(rows)) == expected
    # the three primes are far larger than any minor here, so they agree exactly
    for p in PRIMES:
        assert rank(ExactMatrix(rows, GF(p))) == expected


@settings(max_examples=40, deadline=None)
@given(int_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation_and_scaling(rows, rnd):
    base = rank(ExactMatrix(rows))
    perm_rows = rows[:]
    rnd.shuffle(perm_rows)
    cols = list(range(len(rows[0])))
    rnd.shuffle(cols)
    factors = [rnd.choice([-3, -1, 2, 5]) for _ in perm_rows]
    scaled = [[c * row[j] for j in cols] for c, row in zip(factors, perm_rows)]
    assert rank(ExactMatrix(scaled)) == base


def test_annihilator_examples():
    N = annihilator(ExactMatrix([[1, 0, 0]]))
    assert rank(N) == 2
    assert all(row[0] == 0 for row in N)
    assert annihilator(ExactMatrix.identity(4)).nrows == 0


@settings(max_examples=60, deadline=None)
@given(int_matrices(), st.sampled_from(["QQ", "GF"]))
def test_annihilator_properties(rows, mode):
    fld = QQ if mode == "QQ" else GF()
    M = ExactMatrix(rows, fld)
    N = annihilator(M)
    assert N.ncols == M.ncols
    assert rank(M) + rank(N) == M.ncols
    if N.nrows:
        assert (M @ N.T).is_zero()
        assert rank(M.vstack(N)) == M.ncols


def test_annihilator_rational_rows_are_integral():
    N = annihilator(ExactMatrix([[2, 3, 5], [1, 1, 1]]))
    assert N.nrows == 1
    assert all(isinstance(x, int) for x in N[0])


def test_det_matches_sympy():
    rng = random.Random(3)
    for size in range(1, 6):
        rows = [[rng.randint(-30, 30) for _ in range(size)] for _ in range(size)]
        expected = sp.Matrix(rows).det()
        assert det(ExactMatrix(rows)) == expected
        assert det(ExactMatrix(rows, GF())) == expected % PRIMES[0]


def test_pfaffian_small_cases():
    a = sp.Symbol("a")
    assert pfaffian([[0, a], [-a, 0]]) == a
    s = {(i, j): sp.Symbol(f"a{i}{j}") for i in range(1, 5) for j in range(i + 1, 5)}
    M = [[0] * 4 for _ in range(4)]
    for (i, j), v in s.items():
        M[i - 1][j - 1], M[j - 1][i - 1] = v, -v
    expected = s[1, 2] * s[3, 4] - s[1, 3] * s[2, 4] + s[1, 4] * s[2, 3]
    assert sp.expand(pfaffian(M) - expected) == 0
    assert pfaffian(ExactMatrix([], ncols=0)) == 1


@pytest.mark.parametrize("seed", range(5))
def test_pfaffian_squared_is_det(seed):
    rng = random.Random(seed)
    for size in (2, 4, 6):
        a = random_skew(size, rng)
        pf = pfaffian(ExactMatrix(a))
        assert pf * pf == det(ExactMatrix(a))
        p = PRIMES[seed % 3]
        pfp = pfaffian(ExactMatrix(a, GF(p)))
        assert pfp * pfp % p == det(ExactMatrix(a, GF(p)))


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ValueError):
        pfaffian(ExactMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]))
    with pytest.raises(ValueError):
        pfaffian(ExactMatrix([[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        pfaffian(ExactMatrix([[0, 1, 2], [-1, 0, 3]]))


def test_maximal_minors_examples():
    assert list(maximal_minors(ExactMatrix([[1, 0, 0, 0], [0, 1, 0, 0]]))) == [1, 0, 0, 0, 0, 0]
    assert list(maximal_minors(ExactMatrix([[4, -2, 7]]))) == [4, -2, 7]


@pytest.mark.parametrize("seed", range(10))
def test_maximal_minors_plucker_relation(seed):
    rng = random.Random(seed)
    M = ExactMatrix([[rng.randint(-50, 50) for _ in range(4)] for _ in range(2)])
    p12, p13, p14, p23, p24, p34 = maximal_minors(M)
    assert p12 * p34 - p13 * p24 + p14 * p23 == 0


def test_maximal_minors_symbolic():
    xs = sp.symbols("x0:6")
    M = [list(xs[:3]), list(xs[3:])]
    minors = maximal_minors(M)
    expected = [sp.Matrix(M).extract([0, 1], list(c)).det() for c in ((0, 1), (0, 2), (1, 2))]
    assert [sp.expand(a - b) for a, b in zip(minors, expected)] == [0, 0, 0]


def test_prime_field_values_are_reduced():
    F = GF(7)
    M = ExactMatrix([[-1, 15], [Fraction(1, 2), 0]], F)
    assert M.tolist() == [[6, 1], [4, 0]]


def test_matrix_is_immutable():
    M = ExactMatrix([[1, 2]])
    with pytest.raises(AttributeError):
        M.nrows = 3
