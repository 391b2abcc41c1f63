import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from secantlab import SecantAnalyzer, TangentialProjector, build, parse_spec
from secantlab.terracini import secant_dim, tangential_projection


def test_get_and_set_params():
    est = SecantAnalyzer(kmax=2, seed=7)
    assert est.get_params() == {"kmax": 2, "trials": 3, "seed": 7, "exact": False, "gamma": True}
    est.set_params(exact=True)
    assert est.exact and est.mode == "rational"
    assert clone(est).get_params() == est.get_params()


def test_fit_accepts_string_spec_and_chart():
    a = SecantAnalyzer(kmax=2, seed=7).fit("segre:3,4")
    assert [row.s for row in a.ledger_.rows] == [7, 13, 17]
    assert a.spec_ == "segre:3,4" and a.k0_ == 3
    b = SecantAnalyzer(kmax=2, seed=7).fit(parse_spec("Segre:3,4"))
    c = SecantAnalyzer(kmax=2, seed=7).fit(build("segre:3,4"))
    assert a.ledger_.rows == b.ledger_.rows == c.ledger_.rows


def test_severi_attribute():
    assert SecantAnalyzer(kmax=1).fit("veronese:2,2").severi_ == [1]


@pytest.mark.parametrize("params", [{"kmax": 0}, {"trials": 0}, {"seed": 1.5}, {"kmax": "2"}])
def test_invalid_params_rejected_at_fit(params):
    with pytest.raises(ValueError):
        SecantAnalyzer(**params).fit("veronese:2,2")


def test_bad_input_type():
    with pytest.raises(TypeError):
        SecantAnalyzer().fit(42)


def test_report_requires_fit():
    with pytest.raises(NotFittedError):
        SecantAnalyzer().to_report()


def test_projector_matches_function():
    X = build("segre:3,4")
    Y = TangentialProjector(k=1, seed=5).fit_transform(X)
    Z = tangential_projection(X, 1, seed=5)
    assert Y.coords == Z.coords
    assert secant_dim(Y, 0) == 5


def test_projector_k0_and_validation():
    X = build("veronese:2,2")
    assert TangentialProjector(k=0).fit_transform(X) is X
    with pytest.raises(ValueError):
        TangentialProjector(k=-1).fit(X)
    proj = TangentialProjector(k=1).fit(X)
    with pytest.raises(ValueError):
        proj.transform(build("segre:1,1"))
    with pytest.raises(NotFittedError):
        TangentialProjector().transform(X)
