"""
Players, links and networks.

A network on n players is stored as a bitmask over the canonical link
universe: links ij (i < j) are ranked lexicographically, so for n = 3 the
bits are 12 -> 0, 13 -> 1, 23 -> 2. Players are numbered 1..n everywhere in
the public API.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

import networkx as nx

from app.config import settings
from app.errors import CapacityError, DomainError, PreconditionError

log = logging.getLogger(__name__)

Pair = tuple[int, int]


def link_index(i: int, j: int, n: int) -> int:
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"link {i}{j} out of range for n={n}")
    if i == j:
        raise DomainError(f"link {i}{j}: players must differ")
    a, b = (i, j) if i < j else (j, i)
    return (a - 1) * n - (a - 1) * a // 2 + (b - a - 1)


@lru_cache(maxsize=None)
def universe(n: int) -> tuple[Pair, ...]:
    """All links of g^N in canonical order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def incident_masks(n: int) -> tuple[int, ...]:
    """``incident_masks(n)[i]`` is the mask of L_i(g^N); index 0 is unused."""
    masks = [0] * (n + 1)
    for k, (i, j) in enumerate(universe(n)):
        masks[i] |= 1 << k
        masks[j] |= 1 << k
    return tuple(masks)


def link_bit(i: int, j: int, n: int) -> int:
    return 1 << link_index(i, j, n)


def coalition_mask(n: int, coalition: Iterable[int]) -> int:
    """Mask of g^S: links with both endpoints in S."""
    members = set(coalition)
    mask = 0
    for k, (i, j) in enumerate(universe(n)):
        if i in members and j in members:
            mask |= 1 << k
    return mask


def iter_submasks(mask: int, include_empty: bool = False) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask
    if include_empty:
        yield 0


def link_label(i: int, j: int, n: int) -> str:
    a, b = (i, j) if i < j else (j, i)
    return f"{a}{b}" if n <= 9 else f"{a}-{b}"


def parse_link(token: str, n: int) -> Pair:
    text = token.strip()
    if "-" in text:
        left, _, right = text.partition("-")
        try:
            i, j = int(left), int(right)
        except ValueError as e:
            raise DomainError(f"bad link token {token!r}") from e
    elif len(text) == 2 and text.isdigit():
        i, j = int(text[0]), int(text[1])
    else:
        raise DomainError(f"bad link token {token!r} (use '12' or '1-2')")
    link_index(i, j, n)
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class PlayerSet:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"need at least 2 players, got {self.n}")
        cap = settings().max_players
        if self.n > cap:
            raise CapacityError(f"n={self.n} exceeds the player cap {cap} (raise with --max-n)")

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    @property
    def links(self) -> tuple[Pair, ...]:
        return universe(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1


@dataclass(frozen=True, order=True)
class Network:
    n: int
    bits: int

    def __post_init__(self) -> None:
        m = self.n * (self.n - 1) // 2
        if self.bits < 0 or self.bits >> m:
            raise DomainError(f"bitmask {self.bits} outside the link universe of n={self.n}")

    @classmethod
    def empty(cls, n: int) -> "Network":
        return cls(n, 0)

    @classmethod
    def complete(cls, n: int) -> "Network":
        return cls(n, (1 << (n * (n - 1) // 2)) - 1)

    @classmethod
    def from_links(cls, n: int, links: Iterable[Pair]) -> "Network":
        bits = 0
        for i, j in links:
            bits |= link_bit(i, j, n)
        return cls(n, bits)

    @classmethod
    def parse(cls, n: int, key: str) -> "Network":
        """Parse ``"12,13"`` (``""`` is g^0)."""
        text = key.strip().strip("{}")
        if not text:
            return cls(n, 0)
        return cls.from_links(n, (parse_link(tok, n) for tok in text.split(",")))

    def links(self) -> list[Pair]:
        return [pair for k, pair in enumerate(universe(self.n)) if self.bits >> k & 1]

    def key(self) -> str:
        return ",".join(link_label(i, j, self.n) for i, j in self.links())

    def __str__(self) -> str:
        return "{" + self.key() + "}"

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.links())

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        i, j = pair
        return bool(self.bits & link_bit(i, j, self.n))

    def with_bits(self, bits: int) -> "Network":
        return Network(self.n, bits)


LinkSet = Union[Network, Iterable[Pair]]


def _mask(n: int, h: LinkSet) -> int:
    if isinstance(h, Network):
        if h.n != n:
            raise DomainError(f"link set on {h.n} players used with a network on {n}")
        return h.bits
    bits = 0
    for i, j in h:
        bits |= link_bit(i, j, n)
    return bits


def add_links(g: Network, h: LinkSet) -> Network:
    mask = _mask(g.n, h)
    if g.bits & mask:
        overlap = Network(g.n, g.bits & mask)
        raise PreconditionError(f"links {overlap} already present in {g}")
    return Network(g.n, g.bits | mask)


def remove_links(g: Network, h: LinkSet) -> Network:
    mask = _mask(g.n, h)
    if mask & ~g.bits:
        missing = Network(g.n, mask & ~g.bits)
        raise PreconditionError(f"links {missing} are not in {g}")
    return Network(g.n, g.bits & ~mask)


def neighbourhood(g: Network, i: int) -> frozenset[int]:
    if not 1 <= i <= g.n:
        raise DomainError(f"player {i} out of range for n={g.n}")
    return frozenset(b if a == i else a for a, b in g.links() if i in (a, b))


def link_set(g: Network, i: int) -> Network:
    """L_i(g): the links of g that involve player i."""
    if not 1 <= i <= g.n:
        raise DomainError(f"player {i} out of range for n={g.n}")
    return Network(g.n, g.bits & incident_masks(g.n)[i])


def enumerate_networks(n: int) -> list[Network]:
    ps = PlayerSet(n)
    log.debug("enumerating %d networks on %d players", 1 << ps.m, n)
    return [Network(n, bits) for bits in range(1 << ps.m)]


def to_graph(g: Network) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, g.n + 1))
    graph.add_edges_from(g.links())
    return graph


def components(g: Network) -> list[frozenset[int]]:
    parts = (frozenset(c) for c in nx.connected_components(to_graph(g)))
    return sorted(parts, key=min)
