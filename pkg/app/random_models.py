"""
Seeded random instances for the randomized verification batches.
"""

from __future__ import annotations

import random
from fractions import Fraction

from app.net.network import incident_masks
from app.net.payoffs import CostStructure, NetworkPayoff


def random_payoff(n: int, rng: random.Random, low: int = -5, high: int = 5) -> NetworkPayoff:
    m = n * (n - 1) // 2
    rows = [[rng.randint(low, high) for _ in range(n)] for _ in range(1 << m)]
    return NetworkPayoff.from_rows(n, rows)


def random_costs(n: int, rng: random.Random, low: int = 1, high: int = 3) -> CostStructure:
    return CostStructure(n, [[0 if i == j else rng.randint(low, high) for j in range(n)] for i in range(n)])


def potential_payoff(n: int, rng: random.Random, low: int = -5, high: int = 5) -> NetworkPayoff:
    """
    φ_i(g) = Λ(g) + d_i(g) with a random Λ and a dummy term d_i that only
    depends on the links player i is not part of, so Λ is an exact potential.
    """
    m = n * (n - 1) // 2
    lam = [Fraction(rng.randint(low, high)) for _ in range(1 << m)]
    masks = incident_masks(n)
    dummies = [{} for _ in range(n)]
    rows = []
    for bits in range(1 << m):
        row = []
        for i in range(1, n + 1):
            outside = bits & ~masks[i]
            if outside not in dummies[i - 1]:
                dummies[i - 1][outside] = Fraction(rng.randint(low, high))
            row.append(lam[bits] + dummies[i - 1][outside])
        rows.append(row)
    out = NetworkPayoff.from_rows(n, rows)
    out.source.update({"generator": "potential", "lambda": [str(x) for x in lam]})
    return out


def potential_of(phi: NetworkPayoff) -> list[Fraction] | None:
    raw = phi.source.get("lambda")
    return [Fraction(x) for x in raw] if raw is not None else None
