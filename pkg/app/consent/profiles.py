"""
Signal profiles of the Myerson / two-sided game and dyad (initiate,
respond) profiles of the one-sided game.

Each player's own choice row is encoded as one strategy index so profiles
plug straight into ``FiniteGame``: bit k of a signal strategy is the signal
to the k-th other player in ascending order. A dyad strategy packs the
initiation bits low and the response bits high.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from app.errors import DomainError
from app.net.network import Network, link_bit, universe

Matrix = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def others(n: int, i: int) -> tuple[int, ...]:
    return tuple(j for j in range(1, n + 1) if j != i)


def _check_matrix(n: int, rows: Sequence[Sequence[int]]) -> Matrix:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DomainError(f"profile matrix must be {n}x{n}")
    out = []
    for i, row in enumerate(rows):
        cells = []
        for j, x in enumerate(row):
            if i == j:
                cells.append(0)
            elif isinstance(x, int) and x in (0, 1):
                cells.append(int(x))
            else:
                raise DomainError(f"profile entry ({i + 1},{j + 1}) must be 0 or 1, got {x!r}")
        out.append(tuple(cells))
    return tuple(out)


def _from_vectors(vectors: Sequence[Sequence[int]]) -> Matrix:
    n = len(vectors)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        vec = vectors[i - 1]
        if len(vec) != n - 1:
            raise DomainError(f"player {i} needs {n - 1} entries, got {len(vec)}")
        for j, x in zip(others(n, i), vec):
            rows[i - 1][j - 1] = x
    return _check_matrix(n, rows)


def _row_bits(matrix: Matrix, i: int) -> int:
    n = len(matrix)
    return sum(matrix[i - 1][j - 1] << k for k, j in enumerate(others(n, i)))


def _vectors(matrix: Matrix) -> tuple[tuple[int, ...], ...]:
    n = len(matrix)
    return tuple(tuple(matrix[i - 1][j - 1] for j in others(n, i)) for i in range(1, n + 1))


def format_vectors(vectors: Iterable[Sequence[int] | None]) -> str:
    parts = ["-" if v is None else "(" + ",".join(str(x) for x in v) + ")" for v in vectors]
    return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class SignalProfile:
    """ℓ_ij = 1 when player i signals willingness to link with j."""

    matrix: Matrix

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "SignalProfile":
        return cls(_check_matrix(len(rows), rows))

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[int]]) -> "SignalProfile":
        """Per-player vectors over the other players, e.g. ((1,1),(0,0),(0,0))."""
        return cls(_from_vectors(vectors))

    @classmethod
    def from_strategies(cls, n: int, strategies: Sequence[int]) -> "SignalProfile":
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n + 1):
            s = strategies[i - 1]
            for k, j in enumerate(others(n, i)):
                rows[i - 1][j - 1] = s >> k & 1
        return cls(_check_matrix(n, rows))

    @classmethod
    def non_superfluous(cls, g: Network) -> "SignalProfile":
        """Signals exactly along the links of g."""
        rows = [[0] * g.n for _ in range(g.n)]
        for i, j in g.links():
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
        return cls(_check_matrix(g.n, rows))

    def entry(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def strategy(self, i: int) -> int:
        return _row_bits(self.matrix, i)

    def strategies(self) -> tuple[int, ...]:
        return tuple(self.strategy(i) for i in range(1, self.n + 1))

    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return _vectors(self.matrix)

    def with_strategy(self, i: int, s: int) -> "SignalProfile":
        strategies = list(self.strategies())
        strategies[i - 1] = s
        return SignalProfile.from_strategies(self.n, strategies)

    def network(self) -> Network:
        return supported_network(self)

    @property
    def is_non_superfluous(self) -> bool:
        m = self.matrix
        return all(m[i][j] == m[j][i] for i in range(self.n) for j in range(i + 1, self.n))

    def __str__(self) -> str:
        return format_vectors(self.vectors())


def supported_network(profile: SignalProfile) -> Network:
    n = profile.n
    m = profile.matrix
    bits = 0
    for i, j in universe(n):
        if m[i - 1][j - 1] and m[j - 1][i - 1]:
            bits |= link_bit(i, j, n)
    return Network(n, bits)


def signal_network_bits(n: int, strategies: Sequence[int]) -> int:
    """Network bits straight from packed signal strategies."""
    bits = 0
    for k, (i, j) in enumerate(universe(n)):
        # i < j: j sits at position j-2 among i's others, i at position i-1 among j's
        if strategies[i - 1] >> (j - 2) & 1 and strategies[j - 1] >> (i - 1) & 1:
            bits |= 1 << k
    return bits


@dataclass(frozen=True)
class DyadProfile:
    """l_ij = 1: i initiates a link to j; r_ij = 1: i accepts an initiation from j."""

    initiate: Matrix
    respond: Matrix

    @property
    def n(self) -> int:
        return len(self.initiate)

    @classmethod
    def from_matrices(cls, initiate: Sequence[Sequence[int]], respond: Sequence[Sequence[int]]) -> "DyadProfile":
        n = len(initiate)
        return cls(_check_matrix(n, initiate), _check_matrix(n, respond))

    @classmethod
    def from_pairs(cls, n: int, initiations: Iterable[tuple[int, int]] = (),
                   responses: Iterable[tuple[int, int]] = ()) -> "DyadProfile":
        l_rows = [[0] * n for _ in range(n)]
        r_rows = [[0] * n for _ in range(n)]
        for i, j in initiations:
            l_rows[i - 1][j - 1] = 1
        for i, j in responses:
            r_rows[i - 1][j - 1] = 1
        return cls(_check_matrix(n, l_rows), _check_matrix(n, r_rows))

    @classmethod
    def from_strategies(cls, n: int, strategies: Sequence[int]) -> "DyadProfile":
        l_rows = [[0] * n for _ in range(n)]
        r_rows = [[0] * n for _ in range(n)]
        for i in range(1, n + 1):
            s = strategies[i - 1]
            for k, j in enumerate(others(n, i)):
                l_rows[i - 1][j - 1] = s >> k & 1
                r_rows[i - 1][j - 1] = s >> (k + n - 1) & 1
        return cls(_check_matrix(n, l_rows), _check_matrix(n, r_rows))

    def strategy(self, i: int) -> int:
        return _row_bits(self.initiate, i) | _row_bits(self.respond, i) << (self.n - 1)

    def strategies(self) -> tuple[int, ...]:
        return tuple(self.strategy(i) for i in range(1, self.n + 1))

    def network(self) -> Network:
        return one_sided_network(self)

    @property
    def is_non_superfluous(self) -> bool:
        """Every initiation is accepted and every acceptance answers an initiation, once per link."""
        l, r = self.initiate, self.respond
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                if l[i][j] and not (r[j][i] and not l[j][i] and not r[i][j]):
                    return False
                if r[i][j] and not (l[j][i] and not l[i][j] and not r[j][i]):
                    return False
        return True

    def __str__(self) -> str:
        return "l=" + format_vectors(_vectors(self.initiate)) + " r=" + format_vectors(_vectors(self.respond))


def one_sided_network(profile: DyadProfile) -> Network:
    n = profile.n
    l, r = profile.initiate, profile.respond
    bits = 0
    for i, j in universe(n):
        a, b = i - 1, j - 1
        if (l[a][b] and r[b][a]) or (l[b][a] and r[a][b]):
            bits |= link_bit(i, j, n)
    return Network(n, bits)


def dyad_network_bits(n: int, strategies: Sequence[int]) -> int:
    shift = n - 1
    bits = 0
    for k, (i, j) in enumerate(universe(n)):
        pos_j, pos_i = j - 2, i - 1
        si, sj = strategies[i - 1], strategies[j - 1]
        if (si >> pos_j & 1 and sj >> (pos_i + shift) & 1) or (sj >> pos_i & 1 and si >> (pos_j + shift) & 1):
            bits |= 1 << k
    return bits


def non_superfluous_dyads(g: Network) -> list[DyadProfile]:
    """Every way of assigning one initiator to each link of g."""
    pairs = g.links()
    out = []
    for choice in range(1 << len(pairs)):
        initiations, responses = [], []
        for k, (i, j) in enumerate(pairs):
            a, b = (j, i) if choice >> k & 1 else (i, j)
            initiations.append((a, b))
            responses.append((b, a))
        out.append(DyadProfile.from_pairs(g.n, initiations, responses))
    return out
