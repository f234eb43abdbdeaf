"""Seeded smooth plane quintic through 20 random integer points."""

import random
from fractions import Fraction
from functools import lru_cache

import sympy

from weierloci.linear_series.plane_curves import monomials

SEED = 20261015


@lru_cache(maxsize=None)
def random_quintic(seed: int = SEED):
    rng = random.Random(seed)
    pts: set[tuple[int, int]] = set()
    while len(pts) < 20:
        pts.add((rng.randint(-6, 6), rng.randint(-6, 6)))
    pts = sorted(pts)
    mons = monomials(5)
    M = sympy.Matrix([[a**i * b**j for (i, j, _k) in mons] for a, b in pts])
    null = M.nullspace()
    assert len(null) == 1, "points failed to impose independent conditions"
    v = null[0] * sympy.ilcm(*[c.q for c in null[0]])
    f = {m: Fraction(int(c)) for m, c in zip(mons, v) if c}
    return f, [(a, b, 1) for a, b in pts]
