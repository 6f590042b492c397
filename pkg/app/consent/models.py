"""
The Myerson signalling model and its two costly variants.

- basic:      π^m_i = φ_i(g(ℓ))
- two-sided:  π^a_i = φ_i(g(ℓ)) − Σ_j ℓ_ij c_ij   (every sent signal is paid)
- one-sided:  π^b_i = φ_i(g(l, r)) − Σ_j l_ij γ_ij (only initiations are paid)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from app.errors import DomainError
from app.games.kernel import FiniteGame
from app.net.network import Network, universe
from app.net.payoffs import CostStructure, NetworkPayoff
from app.consent.profiles import (
    DyadProfile,
    SignalProfile,
    dyad_network_bits,
    format_vectors,
    others,
    signal_network_bits,
)

Vector = tuple[Fraction, ...]


class ModelVariant(str, Enum):
    BASIC = "basic"
    TWO_SIDED = "two-sided"
    ONE_SIDED = "one-sided"


def payoff_basic(phi: NetworkPayoff, profile: SignalProfile) -> Vector:
    return phi.at(signal_network_bits(profile.n, profile.strategies()))


def payoff_two_sided(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> Vector:
    base = payoff_basic(phi, profile)
    return tuple(
        base[i - 1] - sum((costs(i, j) for j in others(profile.n, i) if profile.entry(i, j)), Fraction(0))
        for i in range(1, profile.n + 1)
    )


def payoff_one_sided(phi: NetworkPayoff, gamma: CostStructure, profile: DyadProfile) -> Vector:
    n = profile.n
    base = phi.at(dyad_network_bits(n, profile.strategies()))
    return tuple(
        base[i - 1] - sum((gamma(i, j) for j in others(n, i) if profile.initiate[i - 1][j - 1]), Fraction(0))
        for i in range(1, n + 1)
    )


def net_payoff_a(phi: NetworkPayoff, costs: CostStructure) -> NetworkPayoff:
    """φ^a: every player pays for each of her own links."""
    n = phi.n
    pairs = universe(n)

    def row(bits: int, vec: Vector) -> list[Fraction]:
        out = list(vec)
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                out[i - 1] -= costs(i, j)
                out[j - 1] -= costs(j, i)
        return out

    return phi.map_rows(row)


def financier(gamma: CostStructure, i: int, j: int) -> int:
    """The endpoint with the cheaper initiation cost; ties go to the lower index."""
    a, b = gamma(i, j), gamma(j, i)
    if a < b or (a == b and i < j):
        return i
    return j


def financed_by(gamma: CostStructure, g: Network, i: int) -> frozenset[int]:
    """M_i(g): neighbours j whose link with i is paid by i."""
    return frozenset(b if a == i else a for a, b in g.links()
                     if i in (a, b) and financier(gamma, a, b) == i)


def _charged_payoff(phi: NetworkPayoff, gamma: CostStructure, payer: dict[tuple[int, int], int]) -> NetworkPayoff:
    pairs = universe(phi.n)

    def row(bits: int, vec: Vector) -> list[Fraction]:
        out = list(vec)
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                p = payer[(i, j)]
                out[p - 1] -= gamma(p, j if p == i else i)
        return out

    return phi.map_rows(row)


def net_payoff_b(phi: NetworkPayoff, gamma: CostStructure) -> NetworkPayoff:
    """φ^b: each link is charged to its cheaper initiator."""
    payer = {(i, j): financier(gamma, i, j) for i, j in universe(phi.n)}
    return _charged_payoff(phi, gamma, payer)


def net_payoff_marginal_financing(phi: NetworkPayoff, gamma: CostStructure) -> NetworkPayoff:
    """
    Each link is charged to the endpoint whose stand-alone net benefit from
    it, φ_k({ij}) − φ_k(g^0) − γ_k,other, is higher; ties go to the lower index.
    """
    empty = phi.at(0)
    payer = {}
    for k, (i, j) in enumerate(universe(phi.n)):
        alone = phi.at(1 << k)
        gain_i = alone[i - 1] - empty[i - 1] - gamma(i, j)
        gain_j = alone[j - 1] - empty[j - 1] - gamma(j, i)
        payer[(i, j)] = i if gain_i >= gain_j else j
    return _charged_payoff(phi, gamma, payer)


def _signal_labels(n: int) -> list[list[str]]:
    width = n - 1
    return [[format_vectors([tuple(s >> k & 1 for k in range(width))])[1:-1] for s in range(1 << width)]
            for _ in range(n)]


def _dyad_labels(n: int) -> list[list[str]]:
    width = n - 1
    labels = []
    for s in range(1 << (2 * width)):
        l = tuple(s >> k & 1 for k in range(width))
        r = tuple(s >> (k + width) & 1 for k in range(width))
        labels.append(f"l={format_vectors([l])[1:-1]};r={format_vectors([r])[1:-1]}")
    return [labels for _ in range(n)]


def myerson_game(phi: NetworkPayoff) -> FiniteGame:
    n = phi.n
    return FiniteGame([1 << (n - 1)] * n, lambda prof: phi.at(signal_network_bits(n, prof)),
                      _signal_labels(n), "myerson")


def two_sided_game(phi: NetworkPayoff, costs: CostStructure) -> FiniteGame:
    n = phi.n
    spend = [[sum((costs(i, j) for k, j in enumerate(others(n, i)) if s >> k & 1), Fraction(0))
              for s in range(1 << (n - 1))] for i in range(1, n + 1)]

    def payoff(prof: Sequence[int]) -> Vector:
        base = phi.at(signal_network_bits(n, prof))
        return tuple(base[i] - spend[i][prof[i]] for i in range(n))

    return FiniteGame([1 << (n - 1)] * n, payoff, _signal_labels(n), "two-sided")


def one_sided_game(phi: NetworkPayoff, gamma: CostStructure) -> FiniteGame:
    n = phi.n
    width = n - 1
    spend = [[sum((gamma(i, j) for k, j in enumerate(others(n, i)) if s >> k & 1), Fraction(0))
              for s in range(1 << (2 * width))] for i in range(1, n + 1)]

    def payoff(prof: Sequence[int]) -> Vector:
        base = phi.at(dyad_network_bits(n, prof))
        return tuple(base[i] - spend[i][prof[i]] for i in range(n))

    return FiniteGame([1 << (2 * width)] * n, payoff, _dyad_labels(n), "one-sided")


@dataclass(frozen=True)
class ConsentModel:
    phi: NetworkPayoff
    costs: CostStructure | None = None
    variant: ModelVariant = ModelVariant.BASIC

    def __post_init__(self) -> None:
        if self.costs is not None and self.costs.n != self.phi.n:
            raise DomainError("cost matrix and payoff function disagree on the number of players")

    @property
    def n(self) -> int:
        return self.phi.n

    def cost_matrix(self) -> CostStructure:
        return self.costs if self.costs is not None else CostStructure.zeros(self.n)

    def game(self) -> FiniteGame:
        if self.variant is ModelVariant.BASIC:
            return myerson_game(self.phi)
        if self.variant is ModelVariant.TWO_SIDED:
            return two_sided_game(self.phi, self.cost_matrix())
        return one_sided_game(self.phi, self.cost_matrix())

    def payoff(self, profile: SignalProfile | DyadProfile) -> Vector:
        if self.variant is ModelVariant.ONE_SIDED:
            if not isinstance(profile, DyadProfile):
                raise DomainError("the one-sided model is played with dyad profiles")
            return payoff_one_sided(self.phi, self.cost_matrix(), profile)
        if not isinstance(profile, SignalProfile):
            raise DomainError(f"the {self.variant.value} model is played with signal profiles")
        if self.variant is ModelVariant.BASIC:
            return payoff_basic(self.phi, profile)
        return payoff_two_sided(self.phi, self.cost_matrix(), profile)

    def net_payoff(self) -> NetworkPayoff:
        if self.variant is ModelVariant.BASIC:
            return self.phi
        if self.variant is ModelVariant.TWO_SIDED:
            return net_payoff_a(self.phi, self.cost_matrix())
        return net_payoff_b(self.phi, self.cost_matrix())
