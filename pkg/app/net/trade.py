from __future__ import annotations

import logging
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Any

from app.config import settings
from app.errors import DomainError
from app.net.network import Network, components
from app.net.payoffs import NetworkPayoff, as_rational, fmt_rational

log = logging.getLogger(__name__)


def rounded_sqrt(x: int, precision: int) -> Fraction:
    """√x as a rational with denominator at most ``precision``; exact for squares."""
    root = math.isqrt(x)
    if root * root == x:
        return Fraction(root)
    with localcontext() as ctx:
        ctx.prec = 50
        approx = Decimal(x).sqrt()
    return Fraction(approx).limit_denominator(precision)


@lru_cache(maxsize=None)
def gross_trade_benefit(k: int, precision: int) -> Fraction:
    """Expected per-member gross gain from trade in a market of k members."""
    if k < 1:
        raise DomainError("market size must be positive")
    total = sum(
        (math.comb(k, r) * rounded_sqrt(r * (k - r), precision) for r in range(1, k)),
        Fraction(0),
    )
    return total / (k * 2**k)


def trade_payoffs(n: int, c: Any, precision: int | None = None) -> NetworkPayoff:
    """
    Markets form along components; the link costs of a component are split
    equally among its members.
    """
    cost = as_rational(c)
    if cost < 0:
        raise DomainError("trade cost must be nonnegative")
    bound = precision or settings().precision

    def payoff(g: Network) -> list[Fraction]:
        out = [Fraction(0)] * n
        links = g.links()
        for comp in components(g):
            k = len(comp)
            inside = sum(1 for i, j in links if i in comp)
            value = gross_trade_benefit(k, bound) - cost * inside / k
            for player in comp:
                out[player - 1] = value
        return out

    log.debug("generating trade payoffs n=%d c=%s precision=%d", n, cost, bound)
    source = {"generator": "trade", "c": fmt_rational(cost), "precision": bound}
    return NetworkPayoff.from_function(n, payoff, source)
