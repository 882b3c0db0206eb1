"""scikit-learn style front end for the maximum-class verification."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .basis import eval_row
from .harness import run_verify
from .validation import check_points, resolve_basis


class DudleyClassVerifier(TransformerMixin, BaseEstimator):
    """Decide whether ``pos(f0 - span(f1..fn))`` is maximum on a sample.

    Parameters
    ----------
    basis : FunctionBasis or str, optional
        A basis instance or basis-file text.  Overrides ``family``.
    family : str, default="disks"
        Built-in family name used when ``basis`` is None.
    family_params : dict, optional
        Keyword parameters of the family, e.g. ``{"k": 2}``.
    exhaustive : bool, default=False
        Collect every failing minor and sweep all index subsets (N <= 12)
        for the maximum verdict.
    oracle : bool, default=False
        Cross-check the enumeration against the brute-force oracle.
    epsilon : float, default=1e-9
        Relative zero tolerance for non-polynomial bases.

    Attributes
    ----------
    basis_ : FunctionBasis
    report_ : VerificationReport
    set_system_ : SetSystem
        Traces of the class on the fitted sample.
    n_cells_ : int
    vc_dimension_ : int
    sauer_bound_ : int
    is_maximum_ : bool
    certified_ : bool
        True only for exact (polynomial) evaluation.
    """

    def __init__(self, basis=None, family="disks", family_params=None,
                 exhaustive=False, oracle=False, epsilon=1e-9):
        self.basis = basis
        self.family = family
        self.family_params = family_params
        self.exhaustive = exhaustive
        self.oracle = oracle
        self.epsilon = epsilon

    def fit(self, X, y=None):
        basis = resolve_basis(self.basis, self.family, self.family_params)
        points = check_points(X, basis.k, min_samples=basis.n + 1)
        report = run_verify(
            basis,
            points,
            exhaustive=self.exhaustive,
            oracle=self.oracle,
            epsilon=self.epsilon,
        )
        self.basis_ = basis
        self.report_ = report
        self.n_features_in_ = basis.k
        self.set_system_ = report.set_system
        self.n_cells_ = report.cell_count
        self.vc_dimension_ = report.vc_dimension
        self.sauer_bound_ = report.bound
        self.is_maximum_ = report.is_maximum
        self.certified_ = report.certified
        self.condition1_ = report.condition1
        self.condition2_ = report.condition2
        return self

    def transform(self, X):
        """Rows ``(f1(x), ..., fn(x), f0(x))`` as a float array."""
        check_is_fitted(self, "basis_")
        points = check_points(X, self.basis_.k)
        return np.array([[float(v) for v in eval_row(self.basis_, p)] for p in points], dtype=float)
