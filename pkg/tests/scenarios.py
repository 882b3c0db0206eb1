"""Fixture samples shared by the unit and acceptance tests."""
import random
from fractions import Fraction as F

from dudleyvc import basis as bs
from dudleyvc.sampling import SamplingSpec, sample_points

# 0-based indices throughout
CONCYCLIC = [(1, 0), (0, 1), (-1, 0), (0, -1)]
CONCYCLIC_AMONG_8 = CONCYCLIC + [(F(1, 3), F(1, 7)), (2, 5), (-3, F(1, 2)), (F(5, 2), -2)]
COLLINEAR = [(0, 0), (1, 1), (2, 2)]
COLLINEAR_AMONG_6 = COLLINEAR + [(F(1, 3), F(1, 7)), (2, 5), (-3, F(1, 2))]
GENERIC_4 = [(0, 0), (1, 0), (0, 1), (F(1, 3), F(1, 7))]


def pts(points):
    return [tuple(F(c) for c in p) for p in points]


def disk_points(N, seed):
    return sample_points(SamplingSpec(N=N, k=2, seed=seed))


def random_exact_scenarios(count=20, seed=2026, max_N=14, max_n=5):
    """Seeded (basis, points, label) triples mixing generic and degenerate samples.

    Degenerate samples come from small-integer grids or duplicated points so
    that some Floyd minors vanish exactly.
    """
    rng = random.Random(seed)
    families = [
        lambda: bs.disks(2),
        lambda: bs.disks(1),
        lambda: bs.poly_threshold(rng.choice([1, 2, 3])),
        lambda: bs.monomials(2, 2),
        lambda: bs.monomials(1, rng.choice([2, 3, 4])),
        lambda: bs.halfspaces(2),
    ]
    out = []
    while len(out) < count:
        basis = rng.choice(families)()
        if basis.n > max_n:
            continue
        N = rng.randint(basis.n + 1, min(max_N, basis.n + 7))
        style = rng.choice(["generic", "generic", "grid", "duplicate"])
        if style == "grid":
            points = [tuple(F(rng.randint(-2, 2)) for _ in range(basis.k)) for _ in range(N)]
        else:
            points = [tuple(F(rng.getrandbits(20), 2**20) for _ in range(basis.k)) for _ in range(N)]
            if style == "duplicate":
                points[-1] = points[0]
        label = f"{basis.name} N={N} {style} #{len(out)}"
        out.append((basis, points, label))
    return out
