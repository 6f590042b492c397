"""
Existence results that follow from potentials, checked against the
brute-force stability sets.
"""

from __future__ import annotations

import logging

from app.config import settings
from app.net.network import Network
from app.net.payoffs import CostStructure, NetworkPayoff
from app.stability.structure import NetworkClass, is_discerning_on, member_bits
from app.consent.models import myerson_game, two_sided_game
from app.potentials.game import exact_game_potential, ordinal_game_potential
from app.potentials.network import exact_network_potential, ordinal_network_potential
from app.trust.monadic import Support, monadic_networks
from app.verdict import VerificationReport

log = logging.getLogger(__name__)


def _implies(report: VerificationReport, name: str, premise: bool, conclusion: bool, detail: str = "",
             asserted: bool = True) -> None:
    report.add(name, not premise or conclusion, f"premise: {premise}; conclusion: {conclusion}. {detail}".strip(),
               asserted=asserted)


def existence_report(phi: NetworkPayoff, costs: CostStructure | None = None) -> VerificationReport:
    n = phi.n
    costs = costs if costs is not None else CostStructure.zeros(n)
    report = VerificationReport("potentials-existence", n)

    exact = bool(exact_network_potential(phi))
    ordinal = bool(ordinal_network_potential(phi))
    report.add("network-exact-potential", exact, asserted=False)
    report.add("network-ordinal-potential", ordinal, asserted=False)
    _implies(report, "exact-implies-ordinal", exact, ordinal)

    ps = set(member_bits(phi, NetworkClass.PS))
    sps = set(member_bits(phi, NetworkClass.SPS))
    strict = set(member_bits(phi, NetworkClass.SPS_STRICT))
    _implies(report, "ordinal-implies-ps-nonempty", ordinal, bool(ps))
    _implies(report, "ordinal-implies-sps-equals-strict", ordinal, sps == strict,
             "fails whenever a missing link leaves both endpoints indifferent", asserted=False)
    discerning = bool(is_discerning_on(phi, [Network(n, b) for b in sorted(sps)]))
    _implies(report, "ordinal-and-discerning-implies-sps-equals-strict", ordinal and discerning, sps == strict)

    if n > settings().max_profile_players:
        report.add("strategy-level-checks", True, f"skipped: n={n} above the profile cap", asserted=False)
        return report

    game = myerson_game(phi)
    game_exact = bool(exact_game_potential(game))
    game_ordinal = bool(ordinal_game_potential(game))
    report.add("myerson-ordinal-potential", game_ordinal, asserted=False)
    report.add("network-exact-iff-myerson-exact", exact == game_exact,
               f"network: {exact}; myerson: {game_exact}")
    _implies(report, "myerson-ordinal-implies-strict-nonempty", game_ordinal, bool(strict))
    _implies(report, "myerson-ordinal-implies-network-ordinal", game_ordinal, ordinal)

    consent_ordinal = bool(ordinal_game_potential(two_sided_game(phi, costs)))
    report.add("two-sided-ordinal-potential", consent_ordinal, asserted=False)
    if n <= settings().max_monadic_players:
        mode = Support.NON_SUPERFLUOUS if costs.strictly_positive else Support.ANY
        monadic = monadic_networks(phi, costs, mode)
        # recorded only: n=2, phi(g^N)=(2,2), c12=1, c21=3 has an ordinal potential and no monadic network
        _implies(report, "two-sided-ordinal-implies-monadic-nonempty", consent_ordinal, bool(monadic),
                 f"support: {mode.value}", asserted=False)
    log.info("existence report for n=%d: %d checks", n, len(report.checks))
    return report
