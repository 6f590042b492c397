from __future__ import annotations

import itertools
import logging
from enum import Enum
from typing import Iterable

from app.config import settings
from app.errors import CapacityError, DomainError
from app.net.network import Network, coalition_mask, incident_masks, iter_submasks
from app.net.payoffs import NetworkPayoff, fmt_vector
from app.verdict import Verdict, Witness

log = logging.getLogger(__name__)


class StrongMode(str, Enum):
    JVDN = "jvdn"  # blocked when some member gains and nobody in S loses
    DM = "dm"      # blocked only when every member of S strictly gains


def _pools(g: Network, coalition: Iterable[int]) -> tuple[int, int]:
    members = set(coalition)
    if not members:
        raise DomainError("coalition must be nonempty")
    if not members <= set(range(1, g.n + 1)):
        raise DomainError(f"coalition {sorted(members)} out of range for n={g.n}")
    masks = incident_masks(g.n)
    plus = coalition_mask(g.n, members) & ~g.bits
    minus = 0
    for i in members:
        minus |= g.bits & masks[i]
    return plus, minus


def _obtainable_bits(g: Network, coalition: Iterable[int]) -> set[int]:
    plus, minus = _pools(g, coalition)
    return {(g.bits | hp) & ~hm
            for hp in iter_submasks(plus, include_empty=True)
            for hm in iter_submasks(minus, include_empty=True)}


def obtainable(g: Network, coalition: Iterable[int]) -> list[Network]:
    """Networks coalition S can reach from g by adding internal links and cutting incident ones."""
    return [Network(g.n, bits) for bits in sorted(_obtainable_bits(g, coalition))]


def _coalitions(n: int, max_size: int):
    for size in range(1, max_size + 1):
        yield from itertools.combinations(range(1, n + 1), size)


def _check_work(g: Network, max_size: int) -> None:
    work = 0
    for coalition in _coalitions(g.n, max_size):
        plus, minus = _pools(g, coalition)
        work += 1 << (plus.bit_count() + minus.bit_count())
    cap = settings().max_coalition_work
    if work > cap:
        raise CapacityError(f"coalition scan of {g} needs ~{work} evaluations (cap {cap})")


def _blocking(phi: NetworkPayoff, g: Network, max_size: int, mode: StrongMode) -> Witness | None:
    here = phi.at(g.bits)
    for coalition in _coalitions(g.n, max_size):
        for bits in sorted(_obtainable_bits(g, coalition)):
            if bits == g.bits:
                continue
            there = phi.at(bits)
            if mode is StrongMode.DM:
                blocked = all(there[i - 1] > here[i - 1] for i in coalition)
            else:
                blocked = (any(there[i - 1] > here[i - 1] for i in coalition)
                           and not any(there[i - 1] < here[i - 1] for i in coalition))
            if blocked:
                return Witness("coalition deviation blocks the network", g.key(), None, (),
                               {"coalition": list(coalition), "to": Network(g.n, bits).key(),
                                "payoffs": fmt_vector(here), "deviation_payoffs": fmt_vector(there)})
    return None


def is_strongly_stable(phi: NetworkPayoff, g: Network, mode: StrongMode | str = StrongMode.JVDN) -> Verdict:
    mode = StrongMode(mode)
    _check_work(g, g.n)
    w = _blocking(phi, g, g.n, mode)
    return Verdict.holds() if w is None else Verdict.fails(w)


def stability_of_order(phi: NetworkPayoff, g: Network, r: int, mode: StrongMode | str = StrongMode.JVDN) -> Verdict:
    """Strong stability against coalitions of at most r players."""
    if not 1 <= r <= g.n:
        raise DomainError(f"order r={r} must lie in 1..{g.n}")
    mode = StrongMode(mode)
    _check_work(g, r)
    w = _blocking(phi, g, r, mode)
    return Verdict.holds() if w is None else Verdict.fails(w)
