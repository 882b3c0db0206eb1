"""Finite set systems as bit vectors: shattering, VC dimension, Sauer bound.

A member is an int of ``N`` bits with point 0 in the most significant
position, so integer order is the lexicographic order of the bitstrings
``"1010..."``.  Restricting to an index set is an AND with its mask;
distinct masked values correspond one-to-one to distinct traces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


def sauer_bound(N: int, d: int) -> int:
    """Sum of C(N, i) for i = 0..d; equals 2**N once d >= N, 0 for d < 0."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return sum(comb(N, i) for i in range(0, min(d, N) + 1))


class SetSystem:
    """Immutable, canonically ordered family of subsets of ``{0, ..., N-1}``."""

    __slots__ = ("ground_size", "members")

    def __init__(self, ground_size: int, members: Iterable[int] = ()):
        members = tuple(sorted(set(members)))
        if ground_size < 0:
            raise ValueError("ground size must be non-negative")
        if members and (members[0] < 0 or members[-1] >> ground_size):
            raise ValueError("member does not fit in the ground set")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):
        raise AttributeError("SetSystem is immutable")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, member):
        return member in set(self.members)

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground_size == other.ground_size and self.members == other.members

    def __hash__(self):
        return hash((self.ground_size, self.members))

    def __repr__(self):
        return f"SetSystem(N={self.ground_size}, count={len(self.members)})"

    def bit(self, index: int) -> int:
        if not 0 <= index < self.ground_size:
            raise IndexError(f"index {index} outside ground set of size {self.ground_size}")
        return 1 << (self.ground_size - 1 - index)

    def mask(self, indices: Iterable[int]) -> int:
        out = 0
        for i in indices:
            out |= self.bit(i)
        return out

    @classmethod
    def from_sets(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        probe = cls(ground_size)
        return cls(ground_size, (probe.mask(s) for s in sets))

    @classmethod
    def power_set(cls, ground_size: int) -> "SetSystem":
        return cls(ground_size, range(1 << ground_size))

    def as_sets(self) -> list[frozenset]:
        N = self.ground_size
        return [frozenset(i for i in range(N) if m >> (N - 1 - i) & 1) for m in self.members]

    def bitstrings(self) -> list[str]:
        return [format(m, f"0{self.ground_size}b") if self.ground_size else "" for m in self.members]

    def trace_count(self, mask: int) -> int:
        """Number of distinct traces on the index set encoded by ``mask``."""
        return len({m & mask for m in self.members})


def restrict(s: SetSystem, subset: Sequence[int]) -> SetSystem:
    """Traces of every member on ``subset``, re-indexed in ascending index order."""
    idx = sorted(set(subset))
    for i in idx:
        s.bit(i)
    N = s.ground_size
    size = len(idx)
    out = set()
    for m in s.members:
        v = 0
        for i in idx:
            v = (v << 1) | (m >> (N - 1 - i) & 1)
        out.add(v)
    return SetSystem(size, out)


def shatters(s: SetSystem, subset: Sequence[int]) -> bool:
    subset = set(subset)
    return s.trace_count(s.mask(subset)) == 1 << len(subset)


def vc_dimension(s: SetSystem) -> int:
    """Largest size of a shattered index set; -1 for the empty system."""
    if not s.members:
        return -1
    N = s.ground_size
    best = 0
    for m in range(1, N + 1):
        if (1 << m) > len(s.members):
            break
        if not any(shatters(s, c) for c in itertools.combinations(range(N), m)):
            break
        best = m
    return best


@dataclass(frozen=True)
class MaximumVerdict:
    is_maximum: bool
    dimension: int
    full_count: int
    bound: int
    exhaustive: bool
    failing_subset: tuple | None = None
    failing_count: int | None = None

    @property
    def criterion(self) -> str:
        return "all subsets" if self.exhaustive else "full-set criterion"


EXHAUSTIVE_LIMIT = 12


def is_maximum(s: SetSystem, d: int, exhaustive: bool = False) -> MaximumVerdict:
    """Compare trace counts with the Sauer bound.

    The full ground set is always checked; ``exhaustive`` additionally sweeps
    every index subset when ``N <= 12``.
    """
    N = s.ground_size
    full = len(s.members)
    bound = sauer_bound(N, d)
    if full != bound:
        return MaximumVerdict(False, d, full, bound, False, tuple(range(N)), full)
    if not (exhaustive and N <= EXHAUSTIVE_LIMIT):
        return MaximumVerdict(True, d, full, bound, False)
    for size in range(N):
        expected = sauer_bound(size, d)
        for subset in itertools.combinations(range(N), size):
            got = s.trace_count(s.mask(subset))
            if got != expected:
                return MaximumVerdict(False, d, full, bound, True, subset, got)
    return MaximumVerdict(True, d, full, bound, True)


def sauer_violations(s: SetSystem, limit: int = EXHAUSTIVE_LIMIT) -> list[tuple]:
    """Index sets whose trace count exceeds ``sauer_bound(|Y|, VC(s))``."""
    if s.ground_size > limit:
        raise ValueError(f"exhaustive sweep refused for N={s.ground_size} > {limit}")
    d = vc_dimension(s)
    bad = []
    for size in range(s.ground_size + 1):
        bound = sauer_bound(size, d)
        for subset in itertools.combinations(range(s.ground_size), size):
            if s.trace_count(s.mask(subset)) > bound:
                bad.append(subset)
    return bad


EMPTY_WORD = "-"  # the lone member of a system on zero points


def format_set_system(s: SetSystem) -> str:
    words = s.bitstrings() if s.ground_size else [EMPTY_WORD] * len(s)
    lines = [f"N={s.ground_size} count={len(s)}"] + words
    return "\n".join(lines) + "\n"


def parse_set_system(text: str) -> SetSystem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty set-system file")
    header = dict(part.split("=", 1) for part in lines[0].split())
    try:
        N = int(header["N"])
        count = int(header["count"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad set-system header {lines[0]!r}") from exc
    members = []
    for ln in lines[1:]:
        if N == 0 and ln == EMPTY_WORD:
            members.append(0)
            continue
        if N == 0 or len(ln) != N or set(ln) - {"0", "1"}:
            raise ValueError(f"bad bitstring {ln!r} for N={N}")
        members.append(int(ln, 2) if N else 0)
    s = SetSystem(N, members)
    if len(s) != count or len(members) != count:
        raise ValueError(f"header count {count} does not match {len(members)} lines")
    return s
