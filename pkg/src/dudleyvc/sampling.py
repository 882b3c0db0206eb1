"""Seeded samples on a dyadic grid, plus the points file format.

Generator: ``numpy.random.Generator(PCG64(seed))``.  Uniform boxes draw an
integer ``m`` in ``[0, 2**bits]`` per coordinate and map it to
``low + (high - low) * m / 2**bits``.  Gaussian coordinates are drawn with
``Generator.normal`` and rounded to the nearest multiple of ``2**-bits``.
Coordinates are drawn row by row (point-major).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactnum import InvalidInputError, format_rational, parse_rational

UNIFORM = "uniform"
GAUSSIAN = "gaussian"
MAX_BITS = 62


@dataclass(frozen=True)
class SamplingSpec:
    N: int
    k: int
    seed: int = 0
    distribution: str = UNIFORM
    low: tuple = ()
    high: tuple = ()
    mean: tuple = ()
    sigma: tuple = ()
    precision_bits: int = 53

    def __post_init__(self):
        if self.N < 1 or self.k < 1:
            raise InvalidInputError("N and k must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise InvalidInputError("seed must be a 64-bit unsigned integer")
        if not 1 <= self.precision_bits <= MAX_BITS:
            raise InvalidInputError(f"precision_bits must be in 1..{MAX_BITS}")
        if self.distribution not in (UNIFORM, GAUSSIAN):
            raise InvalidInputError(f"unknown distribution {self.distribution!r}")
        if self.distribution == UNIFORM:
            if any(lo >= hi for lo, hi in zip(self.bounds[0], self.bounds[1])):
                raise InvalidInputError("uniform bounds need low < high")
        elif any(s <= 0 for s in self.gaussian_params[1]):
            raise InvalidInputError("sigma must be positive")

    def _per_coordinate(self, values, default):
        if not values:
            return (Fraction(default),) * self.k
        if len(values) == 1:
            return (Fraction(values[0]),) * self.k
        if len(values) != self.k:
            raise InvalidInputError(f"expected 1 or {self.k} values, got {len(values)}")
        return tuple(Fraction(v) for v in values)

    @property
    def bounds(self):
        return self._per_coordinate(self.low, 0), self._per_coordinate(self.high, 1)

    @property
    def gaussian_params(self):
        return self._per_coordinate(self.mean, 0), self._per_coordinate(self.sigma, 1)

    def with_seed(self, seed: int) -> "SamplingSpec":
        return SamplingSpec(
            self.N, self.k, seed, self.distribution, self.low, self.high,
            self.mean, self.sigma, self.precision_bits,
        )

    def describe(self) -> str:
        if self.distribution == UNIFORM:
            lo, hi = self.bounds
            box = "x".join(f"[{format_rational(a)},{format_rational(b)}]" for a, b in zip(lo, hi))
            params = f"box={box}"
        else:
            mu, sd = self.gaussian_params
            params = "mean=" + ",".join(map(format_rational, mu)) + " sigma=" + ",".join(map(format_rational, sd))
        return f"{self.distribution} N={self.N} k={self.k} seed={self.seed} {params} precision_bits={self.precision_bits}"


def sample_points(spec: SamplingSpec) -> list[tuple]:
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    scale = 1 << spec.precision_bits
    points = []
    if spec.distribution == UNIFORM:
        lo, hi = spec.bounds
        grid = rng.integers(0, scale, size=(spec.N, spec.k), endpoint=True, dtype=np.int64)
        for row in grid:
            points.append(tuple(l + (h - l) * Fraction(int(m), scale) for m, l, h in zip(row, lo, hi)))
    else:
        mu, sd = spec.gaussian_params
        raw = rng.normal(size=(spec.N, spec.k))
        for row in raw:
            coords = []
            for z, m, s in zip(row, mu, sd):
                v = float(m) + float(s) * float(z)
                coords.append(Fraction(round(v * scale), scale))
            points.append(tuple(coords))
    return points


def format_points(points: Sequence[Sequence], k: int | None = None) -> str:
    if k is None:
        k = len(points[0]) if points else 1
    lines = [f"k={k}"]
    for p in points:
        lines.append(",".join(format_rational(c) if isinstance(c, (int, Fraction)) else repr(float(c)) for c in p))
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> tuple[int, list[tuple]]:
    """Read ``k=<k>`` followed by one comma-separated point per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].replace(" ", "").startswith("k="):
        raise InvalidInputError("points file must start with 'k=<k>'")
    try:
        k = int(lines[0].split("=", 1)[1])
    except ValueError as exc:
        raise InvalidInputError(f"bad header {lines[0]!r}") from exc
    points = []
    for lineno, ln in enumerate(lines[1:], start=2):
        coords = tuple(parse_rational(c) for c in ln.split(","))
        if len(coords) != k:
            raise InvalidInputError(f"line {lineno}: expected {k} coordinates, got {len(coords)}")
        points.append(coords)
    return k, points
