"""The oracles agree with each other before they are used to judge the engine."""

import pytest

from oracles import (
    generic_formula,
    generic_secant_dim,
    hankel_formula,
    hankel_secant_dim,
    skew_secant_dim,
    symmetric_formula,
    symmetric_secant_dim,
)


@pytest.mark.parametrize("d,k", [(3, 1), (5, 1), (5, 2), (6, 2), (7, 3), (4, 2)])
def test_hankel_formula(d, k):
    assert hankel_secant_dim(d, k) == hankel_formula(d, k)


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_symmetric_formula(m, k):
    assert symmetric_secant_dim(m, k) == symmetric_formula(m, k)


@pytest.mark.parametrize("a,b,k", [(2, 2, 1), (3, 4, 1), (3, 4, 2), (3, 3, 2), (4, 4, 3), (2, 5, 1)])
def test_generic_formula(a, b, k):
    assert generic_secant_dim(a, b, k) == generic_formula(a, b, k)


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (5, 1, 13),  # G(1,5): skew 6x6 of rank <= 4 is the Pfaffian hypersurface
        (4, 1, 9),  # G(1,4): rank <= 4 is everything
        (7, 2, 26),  # G(1,7): rank <= 6 is the Pfaffian hypersurface in P^27
        (9, 3, 43),  # G(1,9): rank <= 8 is the Pfaffian hypersurface in P^44
    ],
)
def test_skew_rank_loci(n, k, expected):
    assert skew_secant_dim(n, k) == expected
