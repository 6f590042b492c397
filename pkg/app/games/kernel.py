"""
Finite strategic-form games in pure strategies.

Strategies are indices 0..k_i-1, profiles are tuples of indices, players are
numbered from 1. The payoff oracle is called at most once per profile; its
results are memoised so repeated best-response scans over the same game
stay cheap.
"""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import Any, Callable, Iterator, Mapping, Sequence

from app.config import settings
from app.errors import CapacityError, DomainError
from app.net.payoffs import as_rational, fmt_vector
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)

Profile = tuple[int, ...]
Vector = tuple[Fraction, ...]


class FiniteGame:
    def __init__(
        self,
        strategy_counts: Sequence[int],
        payoff: Callable[[Profile], Sequence[Fraction]],
        labels: Sequence[Sequence[str]] | None = None,
        name: str = "",
    ):
        counts = tuple(int(k) for k in strategy_counts)
        if not counts:
            raise DomainError("a game needs at least one player")
        if any(k < 1 for k in counts):
            raise DomainError(f"strategy counts must be positive: {counts}")
        if labels is not None:
            if len(labels) != len(counts) or any(len(ls) != k for ls, k in zip(labels, counts)):
                raise DomainError("strategy labels do not match strategy counts")
        self.n = len(counts)
        self.strategy_counts = counts
        self.labels = tuple(tuple(ls) for ls in labels) if labels is not None else None
        self.name = name
        self._oracle = payoff
        self._cache: dict[Profile, Vector] = {}

    @classmethod
    def from_table(
        cls,
        labels: Sequence[Sequence[str]],
        table: Mapping[Sequence[str], Sequence[Any]],
        name: str = "",
    ) -> "FiniteGame":
        """Build from labelled strategies and a complete payoff table."""
        index = [{label: s for s, label in enumerate(ls)} for ls in labels]
        values: dict[Profile, Vector] = {}
        for key, vec in table.items():
            if len(key) != len(labels):
                raise DomainError(f"profile {key!r} has the wrong length")
            try:
                prof = tuple(index[i][label] for i, label in enumerate(key))
            except KeyError as e:
                raise DomainError(f"unknown strategy label {e.args[0]!r} in {key!r}") from e
            if len(vec) != len(labels):
                raise DomainError(f"payoff vector for {key!r} has the wrong length")
            values[prof] = tuple(as_rational(x) for x in vec)

        counts = [len(ls) for ls in labels]
        expected = math.prod(counts)
        if len(values) != expected:
            raise DomainError(f"payoff table lists {len(values)} of {expected} profiles")
        return cls(counts, values.__getitem__, labels, name)

    @property
    def profile_count(self) -> int:
        return math.prod(self.strategy_counts)

    def profiles(self) -> Iterator[Profile]:
        return itertools.product(*(range(k) for k in self.strategy_counts))

    def check_profile(self, profile: Sequence[int]) -> Profile:
        prof = tuple(profile)
        if len(prof) != self.n or any(not 0 <= s < k for s, k in zip(prof, self.strategy_counts)):
            raise DomainError(f"invalid profile {prof} for strategy counts {self.strategy_counts}")
        return prof

    def payoffs(self, profile: Profile) -> Vector:
        cached = self._cache.get(profile)
        if cached is None:
            cached = tuple(self._oracle(profile))
            if len(cached) != self.n:
                raise DomainError(f"oracle returned {len(cached)} payoffs for {self.n} players")
            self._cache[profile] = cached
        return cached

    def payoff(self, i: int, profile: Profile) -> Fraction:
        return self.payoffs(profile)[i - 1]

    def label(self, i: int, s: int) -> str:
        if self.labels is None:
            return str(s)
        return self.labels[i - 1][s]

    def profile_label(self, profile: Profile) -> str:
        return "(" + ",".join(self.label(i + 1, s) for i, s in enumerate(profile)) + ")"

    def __repr__(self) -> str:
        return f"FiniteGame({self.name or 'anonymous'}, strategies={self.strategy_counts})"


def deviate(profile: Profile, i: int, s: int) -> Profile:
    return profile[: i - 1] + (s,) + profile[i:]


def best_responses(game: FiniteGame, i: int, profile: Sequence[int]) -> frozenset[int]:
    prof = game.check_profile(profile)
    values = [game.payoff(i, deviate(prof, i, s)) for s in range(game.strategy_counts[i - 1])]
    top = max(values)
    return frozenset(s for s, v in enumerate(values) if v == top)


def profitable_deviation(game: FiniteGame, profile: Profile) -> tuple[int, int, Fraction, Fraction] | None:
    """First (player, strategy, current, better) that breaks a Nash profile."""
    current = game.payoffs(profile)
    for i in range(1, game.n + 1):
        base = current[i - 1]
        own = profile[i - 1]
        for s in range(game.strategy_counts[i - 1]):
            if s == own:
                continue
            value = game.payoff(i, deviate(profile, i, s))
            if value > base:
                return i, s, base, value
    return None


def is_nash(game: FiniteGame, profile: Sequence[int]) -> Verdict:
    prof = game.check_profile(profile)
    found = profitable_deviation(game, prof)
    if found is None:
        return Verdict.holds(prof)
    i, s, base, value = found
    return Verdict.fails(Witness(
        "profitable unilateral deviation",
        player=i,
        data={"profile": game.profile_label(prof), "deviation": game.label(i, s),
              "payoff": str(base), "deviation_payoff": str(value)},
    ))


def _require_profiles(game: FiniteGame) -> None:
    cap = settings().max_profiles
    if game.profile_count > cap:
        raise CapacityError(f"{game.profile_count} profiles exceed the cap of {cap}")


def enumerate_nash(game: FiniteGame) -> list[Profile]:
    _require_profiles(game)
    log.debug("scanning %d profiles of %r for pure Nash equilibria", game.profile_count, game)
    return [p for p in game.profiles() if profitable_deviation(game, p) is None]


def is_strong_equilibrium(game: FiniteGame, profile: Sequence[int]) -> Verdict:
    """No coalition has a joint deviation that leaves any member strictly better off."""
    prof = game.check_profile(profile)
    work = math.prod(k + 1 for k in game.strategy_counts)
    if work > settings().max_coalition_work:
        raise CapacityError(f"coalition deviation space ~{work} exceeds the cap")

    base = game.payoffs(prof)
    players = range(1, game.n + 1)
    for size in range(1, game.n + 1):
        for coalition in itertools.combinations(players, size):
            choices = [range(game.strategy_counts[i - 1]) for i in coalition]
            for joint in itertools.product(*choices):
                dev = list(prof)
                for i, s in zip(coalition, joint):
                    dev[i - 1] = s
                after = game.payoffs(tuple(dev))
                for i in coalition:
                    if after[i - 1] > base[i - 1]:
                        return Verdict.fails(Witness(
                            "coalition deviation with a strict gain",
                            player=i,
                            data={"coalition": list(coalition),
                                  "deviation": game.profile_label(tuple(dev)),
                                  "payoffs": fmt_vector(base),
                                  "deviation_payoffs": fmt_vector(after)},
                        ))
    return Verdict.holds(prof)
