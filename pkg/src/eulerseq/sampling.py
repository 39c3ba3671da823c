"""Seeded generator of small ample divisors used by the cross-check suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .divisor import QDivisorP1
from .kernel import FieldSpec

PLACE_POOL = ("t", "t - 1", "inf")


def random_divisor(rng: random.Random, field: FieldSpec = FieldSpec(0), max_places: int = 3,
                   max_q: int = 4, max_p: int = 5, max_degree: Fraction = Fraction(3)) -> QDivisorP1:
    """Ample divisor supported on distinct places of PLACE_POOL."""
    while True:
        k = rng.randint(1, min(max_places, len(PLACE_POOL)))
        places = rng.sample(PLACE_POOL, k)
        terms = []
        for pl in places:
            while True:
                q = rng.randint(1, max_q)
                p = rng.randint(-max_p, max_p)
                c = Fraction(p, q)
                if c != 0 and c.denominator == q:
                    break
            terms.append((pl, c))
        D = QDivisorP1.build(field, terms)
        if 0 < D.degree <= max_degree:
            return D


def sample_divisors(count: int, seed: int = 20240611, **kw) -> list:
    rng = random.Random(seed)
    return [random_divisor(rng, **kw) for _ in range(count)]
