import numpy as np
import pytest
from sklearn.base import clone

from dudleyvc import DudleyClassVerifier
from dudleyvc import basis as bs
from dudleyvc.exactnum import InvalidInputError
from dudleyvc.setsystem import sauer_bound

from scenarios import CONCYCLIC_AMONG_8, disk_points


def test_params_round_trip():
    est = DudleyClassVerifier(family="monomials", family_params={"k": 2, "d": 2}, exhaustive=True)
    params = est.get_params()
    assert params["family"] == "monomials" and params["exhaustive"] is True
    assert clone(est).get_params() == params


def test_fit_disks():
    est = DudleyClassVerifier().fit(disk_points(10, seed=4))
    assert est.n_cells_ == 176 == est.sauer_bound_
    assert est.vc_dimension_ == 3 and est.is_maximum_ and est.certified_
    assert est.n_features_in_ == 2
    assert est.condition1_.holds and est.condition2_.holds


def test_fit_float_array_is_exact():
    X = np.array([[float(x), float(y)] for x, y in disk_points(8, seed=6)])
    est = DudleyClassVerifier().fit(X)
    assert est.certified_ and est.n_cells_ == sauer_bound(8, 3)


def test_fit_string_coordinates():
    est = DudleyClassVerifier(exhaustive=True).fit([[str(c) for c in p] for p in CONCYCLIC_AMONG_8])
    assert not est.is_maximum_ and est.condition2_.failing_subset == (0, 1, 2, 3)


def test_basis_text():
    text = "dim: 1\nf0: x^3\nf: 1\nf: x\nf: x^2\n"
    est = DudleyClassVerifier(basis=text).fit([[0], [1], [3], [-2], ["1/2"]])
    assert est.basis_.n == 3 and est.is_maximum_
    assert est.n_cells_ == sauer_bound(5, 3)


def test_transform():
    est = DudleyClassVerifier(basis=bs.disks(2)).fit(disk_points(5, seed=0))
    out = est.transform([[1, 2], [0.5, 0]])
    assert out.dtype == float and out.shape == (2, 4)
    np.testing.assert_array_equal(out, [[1, 1, 2, -5], [1, 0.5, 0, -0.25]])


def test_transform_before_fit():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        DudleyClassVerifier().transform([[0, 0]])


@pytest.mark.parametrize(
    "X",
    [[[0, 0], [1, 1]], [[0, 0, 0]] * 5, [[0, float("nan")]] * 5, [[0, 0], [1]] * 3],
)
def test_fit_rejects_bad_input(X):
    with pytest.raises(InvalidInputError):
        DudleyClassVerifier().fit(X)


def test_transform_dimension_mismatch():
    est = DudleyClassVerifier().fit(disk_points(5, seed=0))
    with pytest.raises(InvalidInputError):
        est.transform([[1, 2, 3]])
