"""
Correlation devices: a commonly known lottery over full strategy profiles
whose draw tells every player which strategy to play.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

from app.errors import DeviceError, DomainError
from app.games.kernel import FiniteGame, Profile, deviate
from app.net.payoffs import as_rational, fmt_rational, fmt_vector
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrelationDevice:
    support: tuple[tuple[Profile, Fraction], ...]

    @classmethod
    def from_mapping(cls, probs: Mapping[Profile, Any]) -> "CorrelationDevice":
        return cls.from_pairs(probs.items())

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Profile, Any]]) -> "CorrelationDevice":
        merged: dict[Profile, Fraction] = {}
        for profile, prob in pairs:
            try:
                p = as_rational(prob)
            except DomainError as e:
                raise DeviceError(str(e)) from e
            if p <= 0:
                raise DeviceError(f"probability of {tuple(profile)} must be positive, got {fmt_rational(p)}")
            key = tuple(profile)
            merged[key] = merged.get(key, Fraction(0)) + p
        if not merged:
            raise DeviceError("a correlation device needs at least one profile")
        total = sum(merged.values(), Fraction(0))
        if total != 1:
            raise DeviceError(f"probabilities sum to {fmt_rational(total)}, not 1")
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def point_mass(cls, profile: Profile) -> "CorrelationDevice":
        return cls(((tuple(profile), Fraction(1)),))

    def check(self, game: FiniteGame) -> None:
        for profile, _p in self.support:
            game.check_profile(profile)

    def marginal(self, i: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for profile, p in self.support:
            out[profile[i - 1]] = out.get(profile[i - 1], Fraction(0)) + p
        return out


def expected_payoffs(device: CorrelationDevice, game: FiniteGame) -> tuple[Fraction, ...]:
    device.check(game)
    totals = [Fraction(0)] * game.n
    for profile, p in device.support:
        for k, u in enumerate(game.payoffs(profile)):
            totals[k] += p * u
    return tuple(totals)


def is_correlated_equilibrium(device: CorrelationDevice, game: FiniteGame) -> Verdict:
    """Obeying each private recommendation is a best reply given what it reveals about the others."""
    device.check(game)
    for i in range(1, game.n + 1):
        for told, weight in sorted(device.marginal(i).items()):
            states = [(profile, p) for profile, p in device.support if profile[i - 1] == told]
            obey = sum((p * game.payoff(i, profile) for profile, p in states), Fraction(0))
            for t in range(game.strategy_counts[i - 1]):
                if t == told:
                    continue
                value = sum((p * game.payoff(i, deviate(profile, i, t)) for profile, p in states), Fraction(0))
                if value > obey:
                    return Verdict.fails(Witness(
                        "a recommendation is better ignored", player=i,
                        data={"told": game.label(i, told), "deviation": game.label(i, t),
                              "obey": fmt_rational(obey / weight), "deviate": fmt_rational(value / weight)},
                    ))
    return Verdict.holds(expected_payoffs(device, game))


def is_ex_ante_self_enforcing(device: CorrelationDevice, game: FiniteGame) -> Verdict:
    """No fixed strategy, played whatever the device says, beats obeying on average."""
    expected = expected_payoffs(device, game)
    for i in range(1, game.n + 1):
        for t in range(game.strategy_counts[i - 1]):
            value = sum((p * game.payoff(i, deviate(profile, i, t)) for profile, p in device.support), Fraction(0))
            if value > expected[i - 1]:
                return Verdict.fails(Witness(
                    "a fixed strategy beats following the device", player=i,
                    data={"deviation": game.label(i, t), "obey": fmt_rational(expected[i - 1]),
                          "deviate": fmt_rational(value), "expected": fmt_vector(expected)},
                ))
    log.debug("device passes the ex-ante check in %r", game)
    return Verdict.holds(expected)


def deviation_values(device: CorrelationDevice, game: FiniteGame, i: int) -> dict[str, Fraction]:
    """Ex-ante value of every fixed strategy of player i against the device."""
    device.check(game)
    return {
        game.label(i, t): sum((p * game.payoff(i, deviate(profile, i, t)) for profile, p in device.support),
                              Fraction(0))
        for t in range(game.strategy_counts[i - 1])
    }
