"""
Monadic belief systems in the two-sided consent model.

Player i keeps everybody else's signals among themselves as played, and
expects each counterpart j to reciprocate exactly when the link with i is
worth it for j at the margin: an existing link is kept when dropping it
does not pay j (φ_j(g−ij) + c_ji ≤ φ_j(g)), a missing one is formed when
it does not hurt j (φ_j(g+ij) − c_ji ≥ φ_j(g)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from app.errors import DomainError
from app.net.network import link_bit
from app.net.payoffs import CostStructure, NetworkPayoff
from app.consent.profiles import Matrix, SignalProfile, format_vectors, others


@dataclass(frozen=True)
class BeliefProfile:
    """ℓ^{i⋆}: owner i's conjecture about every signal sent by the others. The owner row stays zero."""

    owner: int
    matrix: Matrix

    @property
    def n(self) -> int:
        return len(self.matrix)

    def entry(self, j: int, k: int) -> int:
        if j == self.owner:
            raise DomainError(f"belief profile of player {self.owner} holds no row for its owner")
        return self.matrix[j - 1][k - 1]

    def vectors(self) -> tuple[tuple[int, ...] | None, ...]:
        n = self.n
        return tuple(None if j == self.owner else tuple(self.matrix[j - 1][k - 1] for k in others(n, j))
                     for j in range(1, n + 1))

    def to_dict(self) -> dict[str, Any]:
        return {"owner": self.owner, "matrix": [list(row) for row in self.matrix]}

    def __str__(self) -> str:
        return format_vectors(self.vectors())


def expects_reciprocation(phi: NetworkPayoff, costs: CostStructure, bits: int, i: int, j: int) -> int:
    bit = link_bit(i, j, phi.n)
    here = phi.at(bits)[j - 1]
    if bits & bit:
        return int(phi.at(bits ^ bit)[j - 1] + costs(j, i) <= here)
    return int(phi.at(bits | bit)[j - 1] - costs(j, i) >= here)


def monadic_beliefs(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile, i: int) -> BeliefProfile:
    n = profile.n
    if not 1 <= i <= n:
        raise DomainError(f"player {i} out of range for n={n}")
    bits = profile.network().bits
    rows = [list(r) for r in profile.matrix]
    rows[i - 1] = [0] * n
    for j in others(n, i):
        rows[j - 1][i - 1] = expects_reciprocation(phi, costs, bits, i, j)
    return BeliefProfile(i, tuple(tuple(r) for r in rows))


def belief_system(phi: NetworkPayoff, costs: CostStructure, profile: SignalProfile) -> list[BeliefProfile]:
    return [monadic_beliefs(phi, costs, profile, i) for i in range(1, profile.n + 1)]
