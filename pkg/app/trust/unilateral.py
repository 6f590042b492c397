"""
Unilateral stability in the costless signalling model, evaluated through
its network-level form: an M-network is unilaterally stable when no player
can cut some of her links and propose new ones such that she strictly gains
and none of the newly chosen partners is made worse off.
"""

from __future__ import annotations

from app.net.network import Network, incident_masks, iter_submasks, link_label, universe
from app.net.payoffs import NetworkPayoff, fmt_vector
from app.stability.links import sldp_violation
from app.verdict import Verdict, Witness


def unilateral_violation(phi: NetworkPayoff, bits: int) -> Witness | None:
    w = sldp_violation(phi, bits)
    if w is not None:
        return w
    n = phi.n
    here = phi.at(bits)
    masks = incident_masks(n)
    pairs = universe(n)
    for i in range(1, n + 1):
        own = bits & masks[i]
        free = masks[i] & ~bits
        for plus in iter_submasks(free):
            partners = [b if a == i else a for k, (a, b) in enumerate(pairs) if plus >> k & 1]
            for minus in iter_submasks(own, include_empty=True):
                target = (bits & ~minus) | plus
                there = phi.at(target)
                if there[i - 1] <= here[i - 1]:
                    continue
                if any(there[j - 1] < here[j - 1] for j in partners):
                    continue
                return Witness(
                    "a proposal of new links pays the proposer and no new partner objects",
                    Network(n, bits).key(), i,
                    tuple(link_label(a, b, n) for k, (a, b) in enumerate(pairs) if plus >> k & 1),
                    {"to": Network(n, target).key(), "payoffs": fmt_vector(here),
                     "proposal_payoffs": fmt_vector(there)},
                )
    return None


def is_unilaterally_stable(phi: NetworkPayoff, g: Network) -> Verdict:
    w = unilateral_violation(phi, g.bits)
    return Verdict.holds() if w is None else Verdict.fails(w)


def unilateral_networks(phi: NetworkPayoff) -> list[Network]:
    m = phi.n * (phi.n - 1) // 2
    return [Network(phi.n, b) for b in range(1 << m) if unilateral_violation(phi, b) is None]
