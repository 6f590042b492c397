"""
Network classes and the structural predicates on them (convex, discerning,
uniform, link monotone).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable

from app.net.network import Network, incident_masks, iter_submasks, link_label, universe
from app.net.payoffs import NetworkPayoff
from app.stability import links
from app.verdict import Verdict, Witness


class NetworkClass(str, Enum):
    LDP = "ldp"
    SLDP = "sldp"
    LAP = "lap"
    STAR_LAP = "star-lap"
    SLAP = "slap"
    PS = "ps"
    SPS = "sps"
    SPS_STRICT = "sps-strict"
    FULL = "full"


_CHECKS = {
    NetworkClass.LDP: (links.ldp_violation,),
    NetworkClass.SLDP: (links.sldp_violation,),
    NetworkClass.LAP: (links.lap_violation,),
    NetworkClass.STAR_LAP: (links.star_lap_violation,),
    NetworkClass.SLAP: (links.slap_violation,),
    NetworkClass.PS: (links.ldp_violation, links.lap_violation),
    NetworkClass.SPS: (links.sldp_violation, links.lap_violation),
    NetworkClass.SPS_STRICT: (links.sldp_violation, links.slap_violation),
    NetworkClass.FULL: (),
}


def member_bits(phi: NetworkPayoff, cls: NetworkClass | str) -> list[int]:
    checks = _CHECKS[NetworkClass(cls)]
    m = phi.n * (phi.n - 1) // 2
    return [bits for bits in range(1 << m) if all(check(phi, bits) is None for check in checks)]


def members(phi: NetworkPayoff, cls: NetworkClass | str) -> list[Network]:
    return [Network(phi.n, bits) for bits in member_bits(phi, cls)]


def _domain(phi: NetworkPayoff, networks: NetworkClass | str | Iterable[Network]) -> list[int]:
    if isinstance(networks, (NetworkClass, str)):
        return member_bits(phi, networks)
    return [g.bits for g in networks]


def is_convex_on(phi: NetworkPayoff, networks: NetworkClass | str | Iterable[Network] = NetworkClass.LDP) -> Verdict:
    """
    Deletion convexity: whenever the single-link losses of a set h of own
    links sum to something nonnegative, dropping h all at once is no better.
    """
    n = phi.n
    masks = incident_masks(n)
    pairs = universe(n)
    for bits in _domain(phi, networks):
        here = phi.at(bits)
        for p in range(1, n + 1):
            own = bits & masks[p]
            marginal = {k: here[p - 1] - phi.at(bits ^ (1 << k))[p - 1]
                        for k in range(len(pairs)) if own >> k & 1}
            for h in iter_submasks(own):
                if h & (h - 1) == 0:
                    continue
                total = sum((v for k, v in marginal.items() if h >> k & 1), Fraction(0))
                after = phi.at(bits ^ h)[p - 1]
                if total >= 0 and here[p - 1] < after:
                    return Verdict.fails(Witness(
                        "nonnegative summed marginals but dropping the set pays",
                        Network(n, bits).key(), p,
                        tuple(link_label(i, j, n) for k, (i, j) in enumerate(pairs) if h >> k & 1),
                        {"summed_marginals": str(total), "payoff": str(here[p - 1]), "after": str(after)},
                    ))
    return Verdict.holds()


def is_convex_on_ldp(phi: NetworkPayoff) -> Verdict:
    return is_convex_on(phi, NetworkClass.LDP)


def is_discerning_on(phi: NetworkPayoff, networks: NetworkClass | str | Iterable[Network] = NetworkClass.FULL) -> Verdict:
    for bits in _domain(phi, networks):
        for i, j, _bit, gi, gj in links.addition_marginals(phi, bits):
            if gi == 0 and gj == 0:
                return Verdict.fails(Witness("missing link leaves both endpoints indifferent",
                                             Network(phi.n, bits).key(), i, (link_label(i, j, phi.n),)))
    return Verdict.holds()


def is_uniform_on(phi: NetworkPayoff, networks: NetworkClass | str | Iterable[Network] = NetworkClass.FULL) -> Verdict:
    for bits in _domain(phi, networks):
        for i, j, _bit, gi, gj in links.addition_marginals(phi, bits):
            for a, b, ga, gb in ((i, j, gi, gj), (j, i, gj, gi)):
                if ga >= 0 and gb < 0:
                    return Verdict.fails(Witness(
                        "one endpoint weakly gains from a missing link, the other strictly loses",
                        Network(phi.n, bits).key(), a, (link_label(i, j, phi.n),),
                        {"gain": str(ga), "other_gain": str(gb), "other": b},
                    ))
    return Verdict.holds()


def is_link_monotone(phi: NetworkPayoff, strict: bool = False) -> Verdict:
    """No player loses (with ``strict``: every endpoint gains) when one of her missing links is added."""
    m = phi.n * (phi.n - 1) // 2
    for bits in range(1 << m):
        for i, j, _bit, gi, gj in links.addition_marginals(phi, bits):
            for p, gain in ((i, gi), (j, gj)):
                if gain < 0 or (strict and gain == 0):
                    return Verdict.fails(Witness("adding an own link does not raise the payoff" if strict
                                                 else "adding an own link lowers the payoff",
                                                 Network(phi.n, bits).key(), p, (link_label(i, j, phi.n),),
                                                 {"gain": str(gain)}))
    return Verdict.holds()
