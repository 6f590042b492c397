"""
Verifiers for the consent models: each one computes the supported sets
through strategy-space enumeration and compares them with the network-level
classes they are claimed to equal or contain.
"""

from __future__ import annotations

import logging

from app.net.network import Network
from app.net.payoffs import CostStructure, NetworkPayoff
from app.stability.structure import NetworkClass, is_link_monotone, member_bits
from app.consent.equilibria import (
    bilateral_stable_networks,
    nash_profiles_by_network,
    non_superfluous_one_sided_support,
    one_sided_support,
    pairwise_nash_networks,
    two_sided_profiles,
)
from app.consent.models import myerson_game, net_payoff_a, net_payoff_b
from app.consent.profiles import signal_network_bits
from app.verdict import VerificationReport

log = logging.getLogger(__name__)


def _keys(n: int, bits) -> list[str]:
    return [Network(n, b).key() for b in sorted(bits)]


def _bits(networks: list[Network]) -> set[int]:
    return {g.bits for g in networks}


def _subset(report: VerificationReport, name: str, n: int, small: set[int], big: set[int],
            asserted: bool = True) -> None:
    extra = small - big
    report.add(name, not extra, f"{len(small)} of which {len(extra)} outside",
               {"outside": _keys(n, extra)} if extra else None, asserted)
    if extra and asserted:
        log.warning("%s violated on %s", name, _keys(n, extra))


def _same(report: VerificationReport, name: str, n: int, left: set[int], right: set[int]) -> None:
    report.add(name, left == right, f"{len(left)} vs {len(right)} networks",
               {"difference": _keys(n, left ^ right)} if left != right else None)
    if left != right:
        log.warning("%s violated on %s", name, _keys(n, left ^ right))


def _non_superfluous_support(report: VerificationReport, name: str, phi: NetworkPayoff,
                             gamma: CostStructure, networks: set[int]) -> None:
    n = phi.n
    lacking = {b for b in networks if non_superfluous_one_sided_support(phi, gamma, Network(n, b)) is None}
    report.add(name, not lacking, f"{len(networks)} networks checked",
               {"networks": _keys(n, lacking)} if lacking else None)
    if lacking:
        log.warning("%s violated on %s", name, _keys(n, lacking))


def verify_m_networks(phi: NetworkPayoff) -> VerificationReport:
    """Costless model: Nash-supported networks are the SLDP class; g^0 always among them."""
    n = phi.n
    report = VerificationReport("m-networks", n)
    sldp = set(member_bits(phi, NetworkClass.SLDP))
    direct = set(nash_profiles_by_network(myerson_game(phi), signal_network_bits))

    _same(report, "nash-supported-equals-sldp", n, direct, sldp)
    report.add("empty-network-supported", 0 in direct)
    monotone = is_link_monotone(phi)
    full = set(range(1 << (n * (n - 1) // 2)))
    report.add("link-monotone-supports-all", not monotone or direct == full,
               f"link monotone: {bool(monotone)}")
    _same(report, "pairwise-nash-equals-bilateral", n,
          _bits(pairwise_nash_networks(phi)), _bits(bilateral_stable_networks(phi)))
    return report


def verify_two_sided(phi: NetworkPayoff, costs: CostStructure) -> VerificationReport:
    n = phi.n
    report = VerificationReport("two-sided", n)
    net = net_payoff_a(phi, costs)
    grouped = two_sided_profiles(phi, costs)

    _same(report, "nash-supported-equals-sldp-of-net-payoff", n,
          set(grouped), set(member_bits(net, NetworkClass.SLDP)))
    lacking = {bits for bits, profs in grouped.items() if not any(p.is_non_superfluous for p in profs)}
    report.add("non-superfluous-support-exists", not lacking,
               witness={"networks": _keys(n, lacking)} if lacking else None)

    if costs.strictly_positive:
        redundant = {bits for bits, profs in grouped.items()
                     if len(profs) != 1 or not profs[0].is_non_superfluous}
        report.add("positive-costs-unique-non-superfluous", not redundant,
                   witness={"networks": _keys(n, redundant)} if redundant else None)
    else:
        report.add("positive-costs-unique-non-superfluous", True, "skipped: some cost is zero", asserted=False)
    return report


def check_thm5(phi: NetworkPayoff, gamma: CostStructure) -> VerificationReport:
    """SLDP networks of φ^b are one-sided supported; the converse is only recorded."""
    n = phi.n
    report = VerificationReport("one-sided-inclusion", n)
    supported = set(one_sided_support(phi, gamma))
    sldp_b = set(member_bits(net_payoff_b(phi, gamma), NetworkClass.SLDP))
    _subset(report, "sldp-of-financier-payoff-within-one-sided", n, sldp_b, supported)
    _non_superfluous_support(report, "sldp-of-financier-payoff-has-non-superfluous-support", phi, gamma, sldp_b)
    _subset(report, "one-sided-within-sldp-of-financier-payoff", n, supported, sldp_b, asserted=False)
    return report


def check_thm6(phi: NetworkPayoff, costs: CostStructure) -> VerificationReport:
    """Sunk-cost comparison with γ = c: two-sided supported ⊆ one-sided supported."""
    n = phi.n
    report = VerificationReport("sunk-cost-inclusion", n)
    two = set(member_bits(net_payoff_a(phi, costs), NetworkClass.SLDP))
    one = set(one_sided_support(phi, costs))
    _subset(report, "two-sided-within-one-sided", n, two, one)
    _non_superfluous_support(report, "two-sided-has-non-superfluous-one-sided-support", phi, costs, two)
    _subset(report, "one-sided-within-two-sided", n, one, two, asserted=False)
    return report


def compare_case_a(phi: NetworkPayoff, costs: CostStructure) -> VerificationReport:
    """Initiator bears the whole link cost (γ_ij = c_ij + c_ji); neither inclusion is claimed."""
    n = phi.n
    report = VerificationReport("case-a-comparison", n)
    two = set(member_bits(net_payoff_a(phi, costs), NetworkClass.SLDP))
    one = set(one_sided_support(phi, costs.pair_sums()))
    _subset(report, "two-sided-within-one-sided", n, two, one, asserted=False)
    _subset(report, "one-sided-within-two-sided", n, one, two, asserted=False)
    return report

