"""
Weak monadic and monadic stability of networks in the two-sided consent
model.

A signal profile is weakly monadic when every player's signals are a best
response against her monadic beliefs; it is monadic when, in addition,
those beliefs are confirmed by what the others actually signal.
"""

from __future__ import annotations

import itertools
import logging
from enum import Enum
from fractions import Fraction
from typing import Iterator

from app.config import settings
from app.errors import CapacityError
from app.net.network import Network, universe
from app.net.payoffs import CostStructure, NetworkPayoff, fmt_rational
from app.consent.profiles import SignalProfile, others
from app.trust.beliefs import BeliefProfile, monadic_beliefs
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)


class Support(str, Enum):
    NON_SUPERFLUOUS = "non-superfluous"
    ANY = "any"


def _require(n: int) -> None:
    cap = settings().max_monadic_players
    if n > cap:
        raise CapacityError(f"monadic stability search is capped at n={cap}, got n={n}")


def supporting_profiles(g: Network) -> Iterator[SignalProfile]:
    """Profiles ℓ with g(ℓ) = g; the non-superfluous one comes first."""
    n = g.n
    idle = [(i, j) for i, j in universe(n) if (i, j) not in g]
    for choice in itertools.product(((0, 0), (1, 0), (0, 1)), repeat=len(idle)):
        rows = [[0] * n for _ in range(n)]
        for i, j in g.links():
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
        for (i, j), (a, b) in zip(idle, choice):
            rows[i - 1][j - 1], rows[j - 1][i - 1] = a, b
        yield SignalProfile.from_matrix(rows)


def believed_payoff(phi: NetworkPayoff, costs: CostStructure, beliefs: BeliefProfile, strategy: int) -> Fraction:
    """π^a of the belief owner playing ``strategy`` against her beliefs."""
    n = beliefs.n
    i = beliefs.owner
    bits = 0
    for k, (a, b) in enumerate(universe(n)):
        if i in (a, b):
            j = b if a == i else a
            pos = others(n, i).index(j)
            if strategy >> pos & 1 and beliefs.matrix[j - 1][i - 1]:
                bits |= 1 << k
        elif beliefs.matrix[a - 1][b - 1] and beliefs.matrix[b - 1][a - 1]:
            bits |= 1 << k
    spent = sum((costs(i, j) for pos, j in enumerate(others(n, i)) if strategy >> pos & 1), Fraction(0))
    return phi.at(bits)[i - 1] - spent


def _best_response_failure(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> Witness | None:
    n = profile.n
    for i in range(1, n + 1):
        beliefs = monadic_beliefs(phi, costs, profile, i)
        own = profile.strategy(i)
        value = believed_payoff(phi, costs, beliefs, own)
        for s in range(1 << (n - 1)):
            if s == own:
                continue
            alt = believed_payoff(phi, costs, beliefs, s)
            if alt > value:
                return Witness("signals are not a best response to monadic beliefs", profile.network().key(), i,
                               data={"profile": str(profile), "beliefs": str(beliefs),
                                     "payoff": fmt_rational(value), "better": fmt_rational(alt)})
    return None


def _confirmation_failure(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> Witness | None:
    n = profile.n
    for i in range(1, n + 1):
        beliefs = monadic_beliefs(phi, costs, profile, i)
        for j in others(n, i):
            if beliefs.matrix[j - 1][i - 1] != profile.entry(j, i):
                return Witness("monadic beliefs are not confirmed", profile.network().key(), i,
                               data={"counterpart": j, "believed": beliefs.matrix[j - 1][i - 1],
                                     "played": profile.entry(j, i), "beliefs": str(beliefs)})
    return None


def is_weak_monadic_profile(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> Verdict:
    w = _best_response_failure(phi, costs, profile)
    return Verdict.holds(profile) if w is None else Verdict.fails(w)


def is_monadic_profile(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> Verdict:
    w = _best_response_failure(phi, costs, profile) or _confirmation_failure(phi, costs, profile)
    return Verdict.holds(profile) if w is None else Verdict.fails(w)


def is_weak_monadic(phi: NetworkPayoff, costs: CostStructure, g: Network) -> Verdict:
    """Some profile supporting g is a best response to its own monadic beliefs."""
    _require(g.n)
    first: Witness | None = None
    for profile in supporting_profiles(g):
        w = _best_response_failure(phi, costs, profile)
        if w is None:
            return Verdict.holds(profile)
        first = first or w
    return Verdict.fails(first)


def is_monadic(phi: NetworkPayoff, costs: CostStructure, g: Network,
               support: Support | str = Support.NON_SUPERFLUOUS) -> Verdict:
    _require(g.n)
    support = Support(support)
    if support is Support.NON_SUPERFLUOUS or costs.strictly_positive:
        return is_monadic_profile(phi, costs, SignalProfile.non_superfluous(g))

    first: Witness | None = None
    for profile in supporting_profiles(g):
        w = _best_response_failure(phi, costs, profile) or _confirmation_failure(phi, costs, profile)
        if w is None:
            if not profile.is_non_superfluous:
                log.debug("%s is monadic only through the superfluous profile %s", g, profile)
            return Verdict.holds(profile)
        first = first or w
    return Verdict.fails(first)


def weak_monadic_networks(phi: NetworkPayoff, costs: CostStructure) -> list[Network]:
    m = phi.n * (phi.n - 1) // 2
    return [g for g in (Network(phi.n, b) for b in range(1 << m)) if is_weak_monadic(phi, costs, g)]


def monadic_networks(phi: NetworkPayoff, costs: CostStructure,
                     support: Support | str = Support.NON_SUPERFLUOUS) -> list[Network]:
    m = phi.n * (phi.n - 1) // 2
    return [g for g in (Network(phi.n, b) for b in range(1 << m)) if is_monadic(phi, costs, g, support)]
