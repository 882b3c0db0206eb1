"""Verification pipeline, reports, demo scenarios and repeated random trials."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import basis as bs
from .arrangement import brute_force_arrangement, dualize, enumerate_arrangement
from .floyd import (
    ConditionResult,
    InsufficientSampleError,
    Mode,
    build_design_matrix,
    check_condition1,
    check_condition2,
)
from .sampling import SamplingSpec, sample_points
from .setsystem import MaximumVerdict, SetSystem, is_maximum, sauer_bound, vc_dimension

EXIT_MAXIMUM = 0
EXIT_NOT_MAXIMUM = 1
EXIT_APPROXIMATE = 2
EXIT_ERROR = 3

CERTIFIED = "Certified"
APPROXIMATE_ONLY = "ApproximateOnly"


class OracleMismatchError(RuntimeError):
    pass


@dataclass
class VerificationReport:
    basis: str
    provenance: str
    N: int
    n: int
    k: int
    mode: str
    condition1: ConditionResult
    condition2: ConditionResult
    cell_count: int
    bound: int
    vc_dimension: int
    maximum: MaximumVerdict
    quality: str
    degenerate: tuple = ()
    indeterminate: int = 0
    oracle: str = "not run"
    set_system: SetSystem | None = field(default=None, repr=False)
    timings: dict = field(default_factory=dict, repr=False)

    @property
    def is_maximum(self) -> bool:
        return self.maximum.is_maximum

    @property
    def certified(self) -> bool:
        return self.quality == CERTIFIED

    @property
    def exit_code(self) -> int:
        if not self.certified:
            return EXIT_APPROXIMATE
        return EXIT_MAXIMUM if self.is_maximum else EXIT_NOT_MAXIMUM

    def _condition_fields(self, c: ConditionResult, size: str):
        prefix = f"condition{c.condition}"
        out = [
            (prefix, "holds" if c.holds else "fails"),
            (f"{prefix}_checked", f"{c.checked_count} subsets of size {size}"),
        ]
        if not c.holds:
            out.append((f"{prefix}_witness", _fmt_subset(c.failing_subset)))
            if len(c.failing_subsets) > 1:
                out.append((f"{prefix}_failures", str(len(c.failing_subsets))))
        return out

    def fields(self, timing: bool = False) -> list[tuple[str, str]]:
        out = [
            ("basis", self.basis),
            ("sample", self.provenance),
            ("N", str(self.N)),
            ("n", str(self.n)),
            ("k", str(self.k)),
            ("mode", self.mode),
            ("indices", "0-based"),
        ]
        out += self._condition_fields(self.condition1, "n")
        out += self._condition_fields(self.condition2, "n+1")
        out.append(("condition2_surrogate", "every (n+1)-row minor with the f0 column is nonzero on the sample"))
        out += [
            ("cell_count", str(self.cell_count)),
            ("sauer_bound", str(self.bound)),
            ("vc_dimension", str(self.vc_dimension)),
            ("maximum", str(self.is_maximum).lower()),
            ("maximum_criterion", self.maximum.criterion),
        ]
        if not self.is_maximum and self.maximum.failing_subset is not None:
            out.append(("maximum_failing_subset", _fmt_subset(self.maximum.failing_subset)))
            out.append(("maximum_failing_count", str(self.maximum.failing_count)))
        if self.degenerate:
            out.append(("degenerate_points", _fmt_subset(self.degenerate)))
        if self.indeterminate:
            out.append(("indeterminate_lps", str(self.indeterminate)))
        out.append(("oracle", self.oracle))
        out.append(("verdict", self.quality))
        if self.quality != CERTIFIED:
            out.append(("note", "approximate verdict: float evaluation with tolerance-based zero tests"))
        if timing:
            out += [(f"time_{k}", f"{v:.3f}s") for k, v in self.timings.items()]
        return out

    def to_text(self, timing: bool = False) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.fields(timing))

    def to_dict(self, timing: bool = False) -> dict:
        def cond(c: ConditionResult):
            return {
                "holds": c.holds,
                "failing_subset": list(c.failing_subset) if c.failing_subset else None,
                "failing_subsets": [list(s) for s in c.failing_subsets],
                "checked_count": c.checked_count,
                "quality": c.quality.value,
            }

        out = {
            "basis": self.basis,
            "sample": self.provenance,
            "N": self.N,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "condition1": cond(self.condition1),
            "condition2": cond(self.condition2),
            "cell_count": self.cell_count,
            "sauer_bound": self.bound,
            "vc_dimension": self.vc_dimension,
            "maximum": self.is_maximum,
            "maximum_criterion": self.maximum.criterion,
            "degenerate_points": list(self.degenerate),
            "indeterminate_lps": self.indeterminate,
            "oracle": self.oracle,
            "verdict": self.quality,
        }
        if timing:
            out["timings"] = dict(self.timings)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"


def _fmt_subset(subset) -> str:
    return "(" + ",".join(str(i) for i in subset) + ")"


def run_verify(
    basis: bs.FunctionBasis,
    points: Sequence[Sequence],
    exhaustive: bool = False,
    oracle: bool = False,
    epsilon: float = 1e-9,
    provenance: str = "in-memory",
) -> VerificationReport:
    """Floyd checks, cell enumeration, VC dimension and the maximum verdict.

    Enumeration runs even when a Floyd condition fails; the deficient cell
    count is then the informative output.
    """
    N = len(points)
    if N <= basis.n:
        raise InsufficientSampleError(
            f"need N > n (got N={N}, n={basis.n}): maximality is only claimed for samples larger than the basis"
        )
    timings = {}
    t = time.perf_counter()
    dm = build_design_matrix(basis, points)
    timings["design"] = time.perf_counter() - t

    t = time.perf_counter()
    c1 = check_condition1(dm, exhaustive, epsilon)
    c2 = check_condition2(dm, exhaustive, epsilon)
    timings["floyd"] = time.perf_counter() - t

    exact = dm.mode is Mode.EXACT
    t = time.perf_counter()
    hs = dualize(dm)
    enum = enumerate_arrangement(hs, exact=exact, tol=epsilon)
    timings["enumerate"] = time.perf_counter() - t

    oracle_text = "not run"
    if oracle:
        t = time.perf_counter()
        brute = brute_force_arrangement(hs, exact=exact, tol=epsilon)
        timings["oracle"] = time.perf_counter() - t
        if brute.set_system != enum.set_system:
            raise OracleMismatchError(
                f"incremental enumeration found {len(enum.cells)} cells, brute force {len(brute.cells)}"
            )
        oracle_text = f"brute force agrees ({len(brute.cells)} cells)"

    t = time.perf_counter()
    system = enum.set_system
    vc = vc_dimension(system)
    verdict = is_maximum(system, basis.n, exhaustive)
    timings["combinatorics"] = time.perf_counter() - t

    quality = CERTIFIED if exact and enum.certified else APPROXIMATE_ONLY
    return VerificationReport(
        basis=basis.describe(),
        provenance=provenance,
        N=N,
        n=basis.n,
        k=basis.k,
        mode=dm.mode.value,
        condition1=c1,
        condition2=c2,
        cell_count=len(system),
        bound=sauer_bound(N, basis.n),
        vc_dimension=vc,
        maximum=verdict,
        quality=quality,
        degenerate=enum.degenerate,
        indeterminate=enum.indeterminate,
        oracle=oracle_text,
        set_system=system,
        timings=timings,
    )


def run_sampled(basis: bs.FunctionBasis, spec: SamplingSpec, **options) -> VerificationReport:
    return run_verify(basis, sample_points(spec), provenance=spec.describe(), **options)


DEMO_SEED = 42


def _demo_scenarios():
    third = Fraction(1, 3)
    return {
        "disks": (bs.disks(2), SamplingSpec(N=10, k=2, seed=DEMO_SEED), {}),
        "poly_threshold": (bs.poly_threshold(3), SamplingSpec(N=9, k=2, seed=DEMO_SEED), {}),
        "trig": (
            bs.trig(1),
            SamplingSpec(N=12, k=2, seed=DEMO_SEED, low=(0, -2), high=(6, 2)),
            {},
        ),
        "halfspace_violation": (
            bs.halfspaces(2),
            SamplingSpec(N=6, k=2, seed=DEMO_SEED),
            {"exhaustive": True},
        ),
        "concyclic": (
            bs.disks(2),
            [(1, 0), (0, 1), (-1, 0), (0, -1), (third, Fraction(1, 7)), (2, 5), (-3, Fraction(1, 2)), (Fraction(5, 2), -2)],
            {"exhaustive": True},
        ),
    }


DEMOS = ("disks", "poly_threshold", "trig", "halfspace_violation", "concyclic")


def run_demo(name: str, oracle: bool = False) -> VerificationReport:
    """Fixed seeded scenarios; ``halfspace_violation`` uses f0 = 2x inside span(1, x, y)."""
    scenarios = _demo_scenarios()
    if name not in scenarios:
        raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}")
    basis, sample, options = scenarios[name]
    if isinstance(sample, SamplingSpec):
        return run_sampled(basis, sample, oracle=oracle, **options)
    points = [tuple(Fraction(c) for c in p) for p in sample]
    return run_verify(basis, points, oracle=oracle, provenance=f"fixed {name} fixture", **options)


@dataclass(frozen=True)
class TrialSummary:
    basis: str
    sampling: str
    trials: int
    maximum_count: int
    failing_seeds: tuple
    precision_bits: int
    counts: tuple

    @property
    def fraction(self) -> float:
        return self.maximum_count / self.trials if self.trials else 0.0

    def to_text(self) -> str:
        lines = [
            ("basis", self.basis),
            ("sampling", self.sampling),
            ("trials", str(self.trials)),
            ("maximum", f"{self.maximum_count}/{self.trials}"),
            ("fraction", f"{self.fraction:.4f}"),
            ("precision_bits", str(self.precision_bits)),
            ("failing_seeds", ",".join(map(str, self.failing_seeds)) or "none"),
        ]
        return "".join(f"{k}: {v}\n" for k, v in lines)


def _one_trial(args):
    basis, spec = args
    report = run_sampled(basis, spec)
    return report.is_maximum and report.certified, report.cell_count


def repeated_trials(basis: bs.FunctionBasis, spec: SamplingSpec, trials: int, n_jobs: int = 1) -> TrialSummary:
    """Run ``trials`` verifications with seeds ``spec.seed, spec.seed + 1, ...``.

    For generic continuous sampling every trial should come out maximum;
    a failure is recorded with its seed.
    """
    if not basis.is_exact:
        raise ValueError("probability-1 trials need an exact polynomial basis")
    jobs = [(basis, spec.with_seed((spec.seed + i) % 2**64)) for i in range(trials)]
    if n_jobs == 1:
        results = [_one_trial(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=None if n_jobs < 0 else n_jobs) as pool:
            results = list(pool.map(_one_trial, jobs))
    failing = tuple(s.seed for (_, s), (ok, _) in zip(jobs, results) if not ok)
    return TrialSummary(
        basis=basis.describe(),
        sampling=spec.describe(),
        trials=trials,
        maximum_count=sum(ok for ok, _ in results),
        failing_seeds=failing,
        precision_bits=spec.precision_bits,
        counts=tuple(c for _, c in results),
    )
