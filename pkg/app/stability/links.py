"""
Link deletion and link addition proofness, and the pairwise stability
classes built from them.

Every predicate takes a payoff function and a network and returns a
``Verdict``; the ``*_violation`` helpers work on raw bitmasks and are what
the class scans call.
"""

from __future__ import annotations

from fractions import Fraction

from app.net.network import Network, incident_masks, iter_submasks, link_label, universe
from app.net.payoffs import NetworkPayoff
from app.verdict import Verdict, Witness


def _labels(n: int, mask: int) -> tuple[str, ...]:
    return tuple(link_label(i, j, n) for k, (i, j) in enumerate(universe(n)) if mask >> k & 1)


def _verdict(w: Witness | None) -> Verdict:
    return Verdict.holds() if w is None else Verdict.fails(w)


def ldp_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    n = phi.n
    here = phi.at(bits)
    for k, (i, j) in enumerate(universe(n)):
        bit = 1 << k
        if not bits & bit:
            continue
        there = phi.at(bits ^ bit)
        for p in (i, j):
            if there[p - 1] > here[p - 1]:
                return Witness("severing a link is profitable", Network(n, bits).key(), p,
                               (link_label(i, j, n),),
                               {"payoff": str(here[p - 1]), "after": str(there[p - 1])})
    return None


def sldp_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    n = phi.n
    here = phi.at(bits)
    masks = incident_masks(n)
    for p in range(1, n + 1):
        for h in iter_submasks(bits & masks[p]):
            after = phi.at(bits ^ h)[p - 1]
            if after > here[p - 1]:
                return Witness("severing a set of own links is profitable", Network(n, bits).key(), p,
                               _labels(n, h), {"payoff": str(here[p - 1]), "after": str(after)})
    return None


def addition_marginals(phi: NetworkPayoff, bits: int):
    """Yield (i, j, link bit, gain_i, gain_j) for every missing link."""
    here = phi.at(bits)
    for k, (i, j) in enumerate(universe(phi.n)):
        bit = 1 << k
        if bits & bit:
            continue
        there = phi.at(bits | bit)
        yield i, j, bit, there[i - 1] - here[i - 1], there[j - 1] - here[j - 1]


def _addition_witness(phi: NetworkPayoff, bits: int, reason: str, i: int, j: int,
                      gi: Fraction, gj: Fraction) -> Witness:
    return Witness(reason, Network(phi.n, bits).key(), i, (link_label(i, j, phi.n),),
                   {"gain_i": str(gi), "gain_j": str(gj)})


def lap_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    for i, j, _bit, gi, gj in addition_marginals(phi, bits):
        if (gi > 0 and not gj < 0) or (gj > 0 and not gi < 0):
            return _addition_witness(phi, bits, "a missing link is mutually acceptable", i, j, gi, gj)
    return None


def star_lap_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    for i, j, _bit, gi, gj in addition_marginals(phi, bits):
        if (gi >= 0 and not gj < 0) or (gj >= 0 and not gi < 0):
            return _addition_witness(phi, bits, "a missing link is weakly acceptable to both", i, j, gi, gj)
    return None


def slap_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    for i, j, _bit, gi, gj in addition_marginals(phi, bits):
        if not (gi < 0 and gj < 0):
            return _addition_witness(phi, bits, "a missing link does not hurt both endpoints", i, j, gi, gj)
    return None


def is_ldp(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(ldp_violation(phi, g.bits))


def is_sldp(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(sldp_violation(phi, g.bits))


def is_lap(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(lap_violation(phi, g.bits))


def is_star_lap(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(star_lap_violation(phi, g.bits))


def is_slap(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(slap_violation(phi, g.bits))


def is_pairwise_stable(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(ldp_violation(phi, g.bits) or lap_violation(phi, g.bits))


def is_strongly_ps(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(sldp_violation(phi, g.bits) or lap_violation(phi, g.bits))


def is_strictly_ps(phi: NetworkPayoff, g: Network) -> Verdict:
    return _verdict(sldp_violation(phi, g.bits) or slap_violation(phi, g.bits))
