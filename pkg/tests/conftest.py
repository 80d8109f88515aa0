import random
from fractions import Fraction

from torblocks.rootdata import FiniteWeight, LieType, build_root_system
from torblocks.spectral import PiFunction
from torblocks.torus import torus_point
from torblocks.weights import AffineWeight

COORD_POOL = [Fraction(v) for v in (1, -1, 2, -2, 3, -3)] + [
    Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3), Fraction(-2, 3)]


def random_dominant_affine(rng: random.Random, t: LieType,
                           max_coeff=2, max_extra=2) -> AffineWeight:
    rs = build_root_system(t)
    fin = FiniteWeight(t, tuple(rng.randint(0, max_coeff)
                                for _ in range(t.rank)))
    level = max(rs.theta_pairing(fin) + rng.randint(0, max_extra), 1)
    delta = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return AffineWeight(t, level, fin, delta)


def random_pi(rng: random.Random, t: LieType, d: int,
              max_points=4) -> PiFunction:
    npts = rng.randint(1, max_points)
    pts = set()
    while len(pts) < npts:
        pts.add(tuple(rng.choice(COORD_POOL) for _ in range(d)))
    entries = tuple((torus_point(*p), random_dominant_affine(rng, t))
                    for p in pts)
    return PiFunction(t, d + 1, entries)
