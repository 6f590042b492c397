from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

from app.errors import DomainError
from app.net.network import Network, PlayerSet

Vector = tuple[Fraction, ...]


def as_rational(value: Any) -> Fraction:
    """Exact rational from an int, a Fraction, or a string like ``"-3/4"``."""
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"not a rational: {value!r}") from e
    if isinstance(value, float):
        raise DomainError(f"float {value!r} is inexact; write it as a string such as \"1/2\"")
    raise DomainError(f"not a rational: {value!r}")


def fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in v) + ")"


class NetworkPayoff:
    """
    Total network payoff function φ on n players.

    Values are stored densely, one vector per bitmask, so lookups in the
    stability scans are plain indexing. ``source`` keeps a description of a
    generator (name and parameters) when the table was produced by one.
    """

    __slots__ = ("n", "_values", "source")

    def __init__(self, n: int, values: Sequence[Vector], source: Mapping[str, Any] | None = None):
        ps = PlayerSet(n)
        if len(values) != 1 << ps.m:
            raise DomainError(f"payoff table for n={n} needs {1 << ps.m} rows, got {len(values)}")
        for row in values:
            if len(row) != n:
                raise DomainError(f"payoff vector {row!r} does not have {n} entries")
        self.n = n
        self._values: tuple[Vector, ...] = tuple(tuple(Fraction(x) for x in row) for row in values)
        self.source = dict(source or {})

    @classmethod
    def zero(cls, n: int) -> "NetworkPayoff":
        m = n * (n - 1) // 2
        zero = tuple(Fraction(0) for _ in range(n))
        return cls(n, [zero] * (1 << m))

    @classmethod
    def from_table(cls, n: int, table: Mapping[Network | int | str, Sequence[Any]]) -> "NetworkPayoff":
        """Unlisted networks get the zero vector."""
        m = n * (n - 1) // 2
        zero = tuple(Fraction(0) for _ in range(n))
        rows: list[Vector] = [zero] * (1 << m)
        for key, vec in table.items():
            if isinstance(key, Network):
                bits = key.bits
            elif isinstance(key, int):
                bits = Network(n, key).bits
            else:
                bits = Network.parse(n, key).bits
            rows[bits] = tuple(as_rational(x) for x in vec)
        return cls(n, rows)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Network], Sequence[Any]],
                      source: Mapping[str, Any] | None = None) -> "NetworkPayoff":
        m = n * (n - 1) // 2
        rows = [tuple(as_rational(x) for x in fn(Network(n, bits))) for bits in range(1 << m)]
        return cls(n, rows, source)

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Sequence[Any]]) -> "NetworkPayoff":
        """Rows in ascending bitmask order, g^0 first."""
        return cls(n, [tuple(as_rational(x) for x in row) for row in rows])

    def __call__(self, g: Network) -> Vector:
        return self._values[g.bits]

    def value(self, g: Network, i: int) -> Fraction:
        return self._values[g.bits][i - 1]

    def at(self, bits: int) -> Vector:
        return self._values[bits]

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._values

    def table(self) -> dict[Network, Vector]:
        return {Network(self.n, bits): row for bits, row in enumerate(self._values)}

    def map_rows(self, fn: Callable[[int, Vector], Sequence[Fraction]]) -> "NetworkPayoff":
        return NetworkPayoff(self.n, [tuple(fn(bits, row)) for bits, row in enumerate(self._values)])

    def shifted(self, constants: Sequence[Any]) -> "NetworkPayoff":
        """Add a per-player constant to every network."""
        add = [as_rational(x) for x in constants]
        return self.map_rows(lambda _bits, row: [x + a for x, a in zip(row, add)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NetworkPayoff):
            return NotImplemented
        return self.n == other.n and self._values == other._values

    def __hash__(self) -> int:
        return hash((self.n, self._values))

    def __repr__(self) -> str:
        name = self.source.get("generator", "table")
        return f"NetworkPayoff(n={self.n}, {name})"


class CostStructure:
    """n×n link-formation costs, nonnegative, zero diagonal. Players are 1-based."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Sequence[Sequence[Any]]):
        if len(entries) != n or any(len(row) != n for row in entries):
            raise DomainError(f"cost matrix must be {n}x{n}")
        rows = tuple(tuple(as_rational(x) for x in row) for row in entries)
        for i in range(n):
            if rows[i][i] != 0:
                raise DomainError(f"cost c({i + 1},{i + 1}) must be 0")
            for j in range(n):
                if rows[i][j] < 0:
                    raise DomainError(f"cost c({i + 1},{j + 1}) is negative")
        self.n = n
        self.entries = rows

    @classmethod
    def zeros(cls, n: int) -> "CostStructure":
        return cls(n, [[0] * n for _ in range(n)])

    @classmethod
    def uniform(cls, n: int, value: Any) -> "CostStructure":
        c = as_rational(value)
        return cls(n, [[0 if i == j else c for j in range(n)] for i in range(n)])

    @classmethod
    def from_pairs(cls, n: int, costs: Mapping[tuple[int, int], Any]) -> "CostStructure":
        """Ordered-pair costs; unlisted pairs cost nothing."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), value in costs.items():
            rows[i - 1][j - 1] = as_rational(value)
        return cls(n, rows)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    @property
    def strictly_positive(self) -> bool:
        return all(self.entries[i][j] > 0 for i in range(self.n) for j in range(self.n) if i != j)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def pair_sums(self) -> "CostStructure":
        """γ_ij = c_ij + c_ji: one initiator bears the whole cost of the link."""
        e = self.entries
        return CostStructure(self.n, [[e[i][j] + e[j][i] for j in range(self.n)] for i in range(self.n)])

    def to_matrix(self) -> list[list[str]]:
        return [[fmt_rational(x) for x in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CostStructure):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"CostStructure({self.to_matrix()})"
