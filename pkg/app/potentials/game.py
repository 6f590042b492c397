from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from app.config import settings
from app.errors import CapacityError
from app.games.kernel import FiniteGame, Profile, deviate
from app.net.payoffs import fmt_rational
from app.potentials.constraints import OrderConstraints, solve
from app.potentials.network import PotentialKind
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GamePotential:
    """P over strategy profiles, with P = 0 at the profile where everybody plays strategy 0."""

    kind: PotentialKind
    values: dict[Profile, Fraction]

    def __call__(self, profile: Profile) -> Fraction:
        return self.values[tuple(profile)]

    def table(self, game: FiniteGame) -> dict[str, str]:
        return {game.profile_label(p): fmt_rational(v) for p, v in self.values.items()}


def _require(game: FiniteGame) -> None:
    cap = settings().max_profiles
    if game.profile_count > cap:
        raise CapacityError(f"{game.profile_count} profiles exceed the cap of {cap}")


def _unilateral_edges(game: FiniteGame):
    """(profile, deviating player, deviation profile) with the deviation strategy above the current one."""
    for prof in game.profiles():
        for i in range(1, game.n + 1):
            for s in range(prof[i - 1] + 1, game.strategy_counts[i - 1]):
                yield prof, i, deviate(prof, i, s)


def exact_game_potential(game: FiniteGame) -> Verdict:
    _require(game)
    values: dict[Profile, Fraction] = {}
    for prof in game.profiles():
        moved = next((i for i, s in enumerate(prof, start=1) if s), None)
        if moved is None:
            values[prof] = Fraction(0)
            continue
        prev = deviate(prof, moved, 0)
        values[prof] = values[prev] + game.payoff(moved, prof) - game.payoff(moved, prev)

    for prof, i, dev in _unilateral_edges(game):
        gain = game.payoff(i, dev) - game.payoff(i, prof)
        if gain != values[dev] - values[prof]:
            return Verdict.fails(Witness(
                "unilateral payoff changes do not integrate to a potential", player=i,
                data={"profile": game.profile_label(prof), "deviation": game.profile_label(dev),
                      "gain": fmt_rational(gain)},
            ))
    return Verdict.holds(GamePotential(PotentialKind.EXACT, values))


def ordinal_game_potential(game: FiniteGame) -> Verdict:
    """Each unilateral deviation fixes the sign of the potential change both ways, ties included."""
    _require(game)
    constraints = OrderConstraints(list(game.profiles()))
    for prof, i, dev in _unilateral_edges(game):
        gain = game.payoff(i, dev) - game.payoff(i, prof)
        constraints.add(prof, dev, (gain > 0) - (gain < 0))

    solution = solve(constraints)
    if not solution.ok:
        return Verdict.fails(Witness(solution.reason, data={
            "profiles": [game.profile_label(p) for p in solution.conflict]}))
    origin = solution.levels[(0,) * game.n]
    values = {p: Fraction(v - origin) for p, v in solution.levels.items()}
    log.debug("ordinal potential found for %r", game)
    return Verdict.holds(GamePotential(PotentialKind.ORDINAL, values))
