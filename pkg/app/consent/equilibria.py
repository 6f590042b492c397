"""
Networks supported by Nash equilibria of the consent models, computed
either through the network-level characterisation or directly by
enumerating strategy profiles.
"""

from __future__ import annotations

import itertools
import logging
from enum import Enum

from app.config import settings
from app.errors import CapacityError, InvariantError
from app.games.kernel import FiniteGame, deviate, enumerate_nash, profitable_deviation
from app.net.network import Network, incident_masks, iter_submasks, link_bit, universe
from app.net.payoffs import CostStructure, NetworkPayoff
from app.stability.links import sldp_violation
from app.stability.structure import NetworkClass, member_bits
from app.verdict import Verdict, Witness
from app.consent.models import myerson_game, net_payoff_a, one_sided_game, two_sided_game
from app.consent.profiles import (
    DyadProfile,
    SignalProfile,
    non_superfluous_dyads,
    signal_network_bits,
)

log = logging.getLogger(__name__)


class Method(str, Enum):
    CHARACTERIZATION = "characterization"
    DIRECT = "direct"
    BOTH = "both"


def _as_networks(n: int, bits: set[int] | list[int]) -> list[Network]:
    return [Network(n, b) for b in sorted(bits)]


def _require(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapacityError(f"{what} is capped at n={cap}, got n={n}")


def nash_profiles_by_network(game: FiniteGame, network_bits) -> dict[int, list[tuple[int, ...]]]:
    """Group every Nash profile of a signal game by the network it supports."""
    grouped: dict[int, list[tuple[int, ...]]] = {}
    for prof in enumerate_nash(game):
        grouped.setdefault(network_bits(game.n, prof), []).append(prof)
    return grouped


def _resolve(name: str, n: int, method: Method, characterize, direct) -> list[Network]:
    method = Method(method)
    if method is Method.CHARACTERIZATION:
        return _as_networks(n, characterize())
    if method is Method.DIRECT:
        return _as_networks(n, direct())
    left, right = set(characterize()), set(direct())
    if left != right:
        diff = [Network(n, b).key() for b in sorted(left ^ right)]
        raise InvariantError(f"{name}: characterisation and direct enumeration differ on {diff}")
    return _as_networks(n, left)


def m_networks(phi: NetworkPayoff, method: Method | str = Method.CHARACTERIZATION) -> list[Network]:
    """Networks supported by a Nash equilibrium of the costless signalling game."""
    def direct() -> set[int]:
        _require(phi.n, settings().max_profile_players, "signal-profile enumeration")
        return set(nash_profiles_by_network(myerson_game(phi), signal_network_bits))

    return _resolve("m-networks", phi.n, Method(method), lambda: set(member_bits(phi, NetworkClass.SLDP)), direct)


def two_sided_profiles(phi: NetworkPayoff, costs: CostStructure) -> dict[int, list[SignalProfile]]:
    _require(phi.n, settings().max_profile_players, "signal-profile enumeration")
    grouped = nash_profiles_by_network(two_sided_game(phi, costs), signal_network_bits)
    return {bits: [SignalProfile.from_strategies(phi.n, p) for p in profs] for bits, profs in grouped.items()}


def nash_networks_two_sided(phi: NetworkPayoff, costs: CostStructure,
                            method: Method | str = Method.CHARACTERIZATION) -> list[Network]:
    net = net_payoff_a(phi, costs)
    return _resolve("two-sided", phi.n, Method(method),
                    lambda: set(member_bits(net, NetworkClass.SLDP)),
                    lambda: set(two_sided_profiles(phi, costs)))


# ---------------------------
# One-sided model
# ---------------------------

_FORMING = [(li, ri, lj, rj) for li, ri, lj, rj in itertools.product((0, 1), repeat=4) if (li and rj) or (lj and ri)]
_IDLE = [(li, ri, lj, rj) for li, ri, lj, rj in itertools.product((0, 1), repeat=4) if not ((li and rj) or (lj and ri))]


def _dyad_candidates(g: Network):
    """Every dyad profile whose resulting network is g, as packed strategies."""
    n = g.n
    pairs = universe(n)
    shift = n - 1
    options = [_FORMING if g.bits >> k & 1 else _IDLE for k in range(len(pairs))]
    for combo in itertools.product(*options):
        strategies = [0] * n
        for (i, j), (li, ri, lj, rj) in zip(pairs, combo):
            pos_j, pos_i = j - 2, i - 1
            strategies[i - 1] |= li << pos_j | ri << (pos_j + shift)
            strategies[j - 1] |= lj << pos_i | rj << (pos_i + shift)
        yield tuple(strategies)


def one_sided_support(phi: NetworkPayoff, gamma: CostStructure) -> dict[int, DyadProfile]:
    """
    For each network supported by some Nash equilibrium of the one-sided
    game, one supporting profile (a non-superfluous one whenever it exists).
    Deviations are checked against all of a player's initiate/respond
    strategies.
    """
    n = phi.n
    _require(n, settings().max_one_sided_players, "dyad-profile enumeration")
    game = one_sided_game(phi, gamma)
    support: dict[int, DyadProfile] = {}
    m = n * (n - 1) // 2
    for bits in range(1 << m):
        g = Network(n, bits)
        found = None
        for prof in non_superfluous_dyads(g):
            if profitable_deviation(game, prof.strategies()) is None:
                found = prof
                break
        if found is None:
            for strategies in _dyad_candidates(g):
                if profitable_deviation(game, strategies) is None:
                    found = DyadProfile.from_strategies(n, strategies)
                    break
        if found is not None:
            support[bits] = found
    log.debug("one-sided model supports %d of %d networks", len(support), 1 << m)
    return support


def nash_networks_one_sided(phi: NetworkPayoff, gamma: CostStructure) -> list[Network]:
    return _as_networks(phi.n, set(one_sided_support(phi, gamma)))


def non_superfluous_one_sided_support(phi: NetworkPayoff, gamma: CostStructure, g: Network) -> DyadProfile | None:
    game = one_sided_game(phi, gamma)
    for prof in non_superfluous_dyads(g):
        if profitable_deviation(game, prof.strategies()) is None:
            return prof
    return None


# ---------------------------
# Pairwise deviations
# ---------------------------

def _pair_blocked(game: FiniteGame, prof: tuple[int, ...], i: int, j: int) -> bool:
    base = game.payoffs(prof)
    for si in range(game.strategy_counts[i - 1]):
        for sj in range(game.strategy_counts[j - 1]):
            after = game.payoffs(deviate(deviate(prof, i, si), j, sj))
            if after[i - 1] > base[i - 1] and not after[j - 1] < base[j - 1]:
                return True
            if after[j - 1] > base[j - 1] and not after[i - 1] < base[i - 1]:
                return True
    return False


def pairwise_nash_networks(phi: NetworkPayoff) -> list[Network]:
    """Networks supported by a pairwise Nash equilibrium of the signalling game."""
    n = phi.n
    _require(n, settings().max_profile_players, "signal-profile enumeration")
    game = myerson_game(phi)
    found: set[int] = set()
    for prof in enumerate_nash(game):
        bits = signal_network_bits(n, prof)
        if bits in found:
            continue
        if not any(_pair_blocked(game, prof, i, j) for i, j in universe(n)):
            found.add(bits)
    return _as_networks(n, found)


def bilateral_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    """Strong link deletion proofness plus no profitable pair deviation."""
    w = sldp_violation(phi, bits)
    if w is not None:
        return w
    n = phi.n
    here = phi.at(bits)
    masks = incident_masks(n)
    for i, j in universe(n):
        added = (0, link_bit(i, j, n) & ~bits)
        for hat in set(added):
            for hi in iter_submasks(bits & masks[i], include_empty=True):
                for hj in iter_submasks(bits & masks[j], include_empty=True):
                    there = phi.at((bits | hat) & ~(hi | hj))
                    for a, b in ((i, j), (j, i)):
                        if there[a - 1] > here[a - 1] and not there[b - 1] < here[b - 1]:
                            return Witness("pair deviation benefits one partner without hurting the other",
                                           Network(n, bits).key(), a, (),
                                           {"partner": b, "to": Network(n, (bits | hat) & ~(hi | hj)).key()})
    return None


def bilateral_stable_networks(phi: NetworkPayoff) -> list[Network]:
    m = phi.n * (phi.n - 1) // 2
    return _as_networks(phi.n, [b for b in range(1 << m) if bilateral_violation(phi, b) is None])


def is_bilaterally_stable(phi: NetworkPayoff, g: Network) -> Verdict:
    w = bilateral_violation(phi, g.bits)
    return Verdict.holds() if w is None else Verdict.fails(w)
