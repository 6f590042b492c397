"""
Exact and ordinal network potentials Λ, normalised so that Λ(g^0) = 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from app.net.network import Network, link_label, universe
from app.net.payoffs import NetworkPayoff, fmt_rational
from app.potentials.constraints import OrderConstraints, solve
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)


class PotentialKind(str, Enum):
    EXACT = "exact"
    ORDINAL = "ordinal"


@dataclass(frozen=True)
class NetworkPotential:
    n: int
    kind: PotentialKind
    values: tuple[Fraction, ...]

    def __call__(self, g: Network) -> Fraction:
        return self.values[g.bits]

    def table(self) -> dict[str, str]:
        return {Network(self.n, bits).key(): fmt_rational(v) for bits, v in enumerate(self.values)}


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _single_link_edges(n: int):
    """(g, g − ij, i, j, k) for every network g and every link ij of g with bit index k."""
    pairs = universe(n)
    for bits in range(1 << len(pairs)):
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                yield bits, bits ^ (1 << k), i, j, k


def exact_network_potential(phi: NetworkPayoff) -> Verdict:
    """Support is the ``NetworkPotential`` when one exists; otherwise the witness names the broken link."""
    n = phi.n
    for bits, below, i, j, _k in _single_link_edges(n):
        di = phi.at(bits)[i - 1] - phi.at(below)[i - 1]
        dj = phi.at(bits)[j - 1] - phi.at(below)[j - 1]
        if di != dj:
            return Verdict.fails(Witness(
                "the two endpoints value the link differently", Network(n, bits).key(), i,
                (link_label(i, j, n),), {"marginal_i": fmt_rational(di), "marginal_j": fmt_rational(dj), "other": j},
            ))

    m = n * (n - 1) // 2
    values = [Fraction(0)] * (1 << m)
    for bits in sorted(range(1, 1 << m), key=int.bit_count):
        k = (bits & -bits).bit_length() - 1
        i, _j = universe(n)[k]
        below = bits ^ (1 << k)
        values[bits] = values[below] + phi.at(bits)[i - 1] - phi.at(below)[i - 1]

    for bits, below, i, j, _k in _single_link_edges(n):
        if phi.at(bits)[i - 1] - phi.at(below)[i - 1] != values[bits] - values[below]:
            return Verdict.fails(Witness(
                "link marginals do not integrate to a potential", Network(n, bits).key(), i,
                (link_label(i, j, n),), {"from": Network(n, below).key()},
            ))
    log.debug("exact network potential found for n=%d", n)
    return Verdict.holds(NetworkPotential(n, PotentialKind.EXACT, tuple(values)))


def ordinal_network_potential(phi: NetworkPayoff) -> Verdict:
    n = phi.n
    m = n * (n - 1) // 2
    constraints = OrderConstraints(list(range(1 << m)))
    for bits, below, i, j, _k in _single_link_edges(n):
        si = _sign(phi.at(bits)[i - 1] - phi.at(below)[i - 1])
        sj = _sign(phi.at(bits)[j - 1] - phi.at(below)[j - 1])
        if si != sj:
            return Verdict.fails(Witness(
                "the endpoints disagree on the sign of the link", Network(n, bits).key(), i,
                (link_label(i, j, n),), {"sign_i": si, "sign_j": sj, "other": j},
            ))
        constraints.add(below, bits, si)

    solution = solve(constraints)
    if not solution.ok:
        return Verdict.fails(Witness(solution.reason, data={
            "networks": [Network(n, b).key() for b in solution.conflict]}))
    base = solution.levels[0]
    values = tuple(Fraction(solution.levels[b] - base) for b in range(1 << m))
    return Verdict.holds(NetworkPotential(n, PotentialKind.ORDINAL, values))
