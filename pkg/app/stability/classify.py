"""
Per-network classification: one row per network with a flag for every
requested stability concept, checked against the implications that must
hold between the flags before it is handed out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from app.config import settings
from app.errors import DomainError, InvariantError, PreconditionError
from app.net.network import Network
from app.net.payoffs import CostStructure, NetworkPayoff, fmt_vector
from app.stability import links
from app.stability.coalitions import StrongMode, is_strongly_stable, stability_of_order
from app.consent.equilibria import is_bilaterally_stable, nash_profiles_by_network, one_sided_support
from app.consent.models import myerson_game, net_payoff_a
from app.consent.profiles import signal_network_bits
from app.trust.monadic import is_monadic, is_weak_monadic
from app.trust.unilateral import unilateral_violation

log = logging.getLogger(__name__)


class Concept(str, Enum):
    LDP = "ldp"
    SLDP = "sldp"
    LAP = "lap"
    STAR_LAP = "star-lap"
    SLAP = "slap"
    PS = "ps"
    SPS = "sps"
    SPS_STRICT = "sps-strict"
    STRONG = "strong"
    M_NETWORK = "m-network"
    BILATERAL = "bilateral"
    UNILATERAL = "unilateral"
    TWO_SIDED = "two-sided"
    ONE_SIDED = "one-sided"
    WEAK_MONADIC = "weak-monadic"
    MONADIC = "monadic"


NETWORK_CONCEPTS = (
    Concept.LDP, Concept.SLDP, Concept.LAP, Concept.STAR_LAP, Concept.SLAP,
    Concept.PS, Concept.SPS, Concept.SPS_STRICT, Concept.STRONG,
)
COST_CONCEPTS = (Concept.TWO_SIDED, Concept.ONE_SIDED, Concept.WEAK_MONADIC, Concept.MONADIC)

# (stronger, weaker): a row flagged with the first must carry the second
IMPLICATIONS = (
    (Concept.SLDP, Concept.LDP),
    (Concept.SLAP, Concept.STAR_LAP),
    (Concept.STAR_LAP, Concept.LAP),
    (Concept.SPS_STRICT, Concept.SPS),
    (Concept.SPS, Concept.PS),
    (Concept.SPS, Concept.SLDP),
    (Concept.PS, Concept.LDP),
    (Concept.STRONG, Concept.SPS),
    (Concept.UNILATERAL, Concept.SPS),
    (Concept.BILATERAL, Concept.SLDP),
    (Concept.MONADIC, Concept.WEAK_MONADIC),
)
EQUIVALENCES = ((Concept.M_NETWORK, Concept.SLDP),)


def order_label(r: int) -> str:
    return f"order-{r}"


@dataclass
class StabilityRow:
    network: Network
    payoffs: tuple[Fraction, ...]
    flags: dict[Concept, bool] = field(default_factory=dict)
    orders: dict[int, bool] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "network": self.network.key(),
            "payoffs": fmt_vector(self.payoffs),
            **{c.value: v for c, v in self.flags.items()},
            **{order_label(r): v for r, v in self.orders.items()},
        }


@dataclass
class StabilityReport:
    n: int
    concepts: list[Concept]
    rows: list[StabilityRow]
    orders: list[int] = field(default_factory=list)

    def members(self, concept: Concept | str) -> list[Network]:
        c = Concept(concept)
        return [r.network for r in self.rows if r.flags.get(c)]

    def order_members(self, r: int) -> list[Network]:
        return [row.network for row in self.rows if row.orders.get(r)]

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "concepts": [c.value for c in self.concepts], "orders": list(self.orders),
                "rows": [r.to_dict() for r in self.rows]}


def default_concepts(n: int, has_costs: bool) -> list[Concept]:
    concepts = list(NETWORK_CONCEPTS) + [Concept.M_NETWORK, Concept.BILATERAL, Concept.UNILATERAL]
    if has_costs:
        concepts.append(Concept.TWO_SIDED)
        if n <= settings().max_one_sided_players:
            concepts.append(Concept.ONE_SIDED)
        if n <= settings().max_monadic_players:
            concepts += [Concept.WEAK_MONADIC, Concept.MONADIC]
    return concepts


def _predicates(phi: NetworkPayoff, costs: CostStructure | None,
                concepts: Sequence[Concept]) -> dict[Concept, Callable[[Network], bool]]:
    def ok(check):
        return lambda g: check(phi, g.bits) is None

    preds: dict[Concept, Callable[[Network], bool]] = {
        Concept.LDP: ok(links.ldp_violation),
        Concept.SLDP: ok(links.sldp_violation),
        Concept.LAP: ok(links.lap_violation),
        Concept.STAR_LAP: ok(links.star_lap_violation),
        Concept.SLAP: ok(links.slap_violation),
        Concept.PS: lambda g: bool(links.is_pairwise_stable(phi, g)),
        Concept.SPS: lambda g: bool(links.is_strongly_ps(phi, g)),
        Concept.SPS_STRICT: lambda g: bool(links.is_strictly_ps(phi, g)),
        Concept.STRONG: lambda g: bool(is_strongly_stable(phi, g, StrongMode.JVDN)),
        Concept.BILATERAL: lambda g: bool(is_bilaterally_stable(phi, g)),
        Concept.UNILATERAL: ok(unilateral_violation),
    }
    if Concept.M_NETWORK in concepts:
        if phi.n <= settings().max_profile_players:
            supported_m = set(nash_profiles_by_network(myerson_game(phi), signal_network_bits))
            preds[Concept.M_NETWORK] = lambda g: g.bits in supported_m
        else:
            preds[Concept.M_NETWORK] = ok(links.sldp_violation)
    if costs is not None:
        net = net_payoff_a(phi, costs)
        preds[Concept.TWO_SIDED] = lambda g: links.sldp_violation(net, g.bits) is None
        preds[Concept.WEAK_MONADIC] = lambda g: bool(is_weak_monadic(phi, costs, g))
        preds[Concept.MONADIC] = lambda g: bool(is_monadic(phi, costs, g))
        if Concept.ONE_SIDED in concepts:
            supported = set(one_sided_support(phi, costs))
            preds[Concept.ONE_SIDED] = lambda g: g.bits in supported
    return preds


def check_row(row: StabilityRow) -> None:
    for strong, weak in IMPLICATIONS:
        if row.flags.get(strong) and weak in row.flags and not row.flags[weak]:
            raise InvariantError(f"{row.network} is {strong.value} but not {weak.value}")
    for a, b in EQUIVALENCES:
        if a in row.flags and b in row.flags and row.flags[a] != row.flags[b]:
            raise InvariantError(f"{row.network}: {a.value} and {b.value} disagree")
    for r, holds in row.orders.items():
        if holds and r - 1 in row.orders and not row.orders[r - 1]:
            raise InvariantError(f"{row.network} is {order_label(r)} but not {order_label(r - 1)}")
    # singleton coalitions can only cut their own links
    if 1 in row.orders and Concept.SLDP in row.flags and row.orders[1] != row.flags[Concept.SLDP]:
        raise InvariantError(f"{row.network}: {order_label(1)} and {Concept.SLDP.value} disagree")


def classify(phi: NetworkPayoff, costs: CostStructure | None = None,
             concepts: Iterable[Concept | str] | None = None,
             orders: Iterable[int] = (), order_mode: StrongMode | str = StrongMode.JVDN) -> StabilityReport:
    """
    One row per network. ``orders`` adds a column per coalition size bound r,
    holding the network's stability against coalitions of at most r players.
    """
    n = phi.n
    wanted = [Concept(c) for c in concepts] if concepts is not None else default_concepts(n, costs is not None)
    missing = [c.value for c in wanted if c in COST_CONCEPTS and costs is None]
    if missing:
        raise PreconditionError(f"concepts {', '.join(missing)} need a cost matrix")
    order_list = sorted(set(orders))
    bad = [r for r in order_list if not 1 <= r <= n]
    if bad:
        raise DomainError(f"orders {bad} must lie in 1..{n}")
    order_mode = StrongMode(order_mode)

    preds = _predicates(phi, costs, wanted)
    rows = []
    for bits in range(1 << (n * (n - 1) // 2)):
        g = Network(n, bits)
        row = StabilityRow(g, phi.at(bits), {c: preds[c](g) for c in wanted},
                           {r: bool(stability_of_order(phi, g, r, order_mode)) for r in order_list})
        check_row(row)
        rows.append(row)
    log.debug("classified %d networks on %d concepts and %d orders", len(rows), len(wanted), len(order_list))
    return StabilityReport(n, wanted, rows, order_list)
