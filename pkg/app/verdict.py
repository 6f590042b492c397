"""
Result objects shared by predicates and theorem verifiers.

- ``Verdict`` is what every predicate returns. It is truthy when the
  predicate holds; when it does not, ``witness`` says where it breaks.
- ``VerificationReport`` collects the checks of one theorem run. A violated
  check is an outcome, not an exception.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    reason: str
    network: str | None = None
    player: int | None = None
    links: tuple[str, ...] = ()
    data: dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"reason": self.reason}
        if self.network is not None:
            out["network"] = self.network
        if self.player is not None:
            out["player"] = self.player
        if self.links:
            out["links"] = list(self.links)
        if self.data:
            out.update(self.data)
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Witness | None = None
    support: Any = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def holds(cls, support: Any = None) -> "Verdict":
        return cls(True, None, support)

    @classmethod
    def fails(cls, witness: Witness) -> "Verdict":
        return cls(False, witness)


@dataclass
class Check:
    name: str
    holds: bool
    detail: str = ""
    witness: dict[str, Any] | None = None
    asserted: bool = True


@dataclass
class VerificationReport:
    theorem: str
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks if c.asserted)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.asserted and not c.holds]

    def add(self, name: str, holds: bool, detail: str = "", witness: dict[str, Any] | None = None,
            asserted: bool = True) -> Check:
        check = Check(name=name, holds=bool(holds), detail=detail, witness=witness, asserted=asserted)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.holds, c.detail, c.witness, c.asserted))

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "ok": self.ok,
            "checks": [asdict(c) for c in self.checks],
        }
