"""
JSON model and game files.

Model file::

    {"name": "...", "n": 3,
     "payoffs": {"": [0, 0, 0], "12": [0, 0, 1], "12,13": ["2", "1", "0"]},
     "costs_two_sided": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
     "costs_one_sided": [[...]]}

Game file::

    {"name": "chicken", "players": [["S", "C"], ["S", "C"]],
     "payoffs": {"S,S": [5, 5], "S,C": [2, 7], ...}}
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from app.errors import DomainError, ModelFileError
from app.games.kernel import FiniteGame
from app.net.network import Network, PlayerSet
from app.net.payoffs import CostStructure, NetworkPayoff, fmt_rational

log = logging.getLogger(__name__)


@dataclass
class ModelFile:
    phi: NetworkPayoff
    costs: CostStructure | None = None
    gamma: CostStructure | None = None
    name: str = ""
    source: dict[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.phi.n

    @property
    def players(self) -> PlayerSet:
        return PlayerSet(self.phi.n)

    def one_sided_costs(self) -> CostStructure | None:
        """Initiation costs: the one-sided block, else the two-sided one."""
        return self.gamma if self.gamma is not None else self.costs


def _reject_floats(value: Any, where: str) -> None:
    if isinstance(value, float):
        raise ModelFileError(f"{where}: float {value!r} is inexact; write it as a string such as \"1/2\"")
    if isinstance(value, list):
        for k, v in enumerate(value):
            _reject_floats(v, f"{where}[{k}]")


def _costs(data: Mapping[str, Any], key: str, n: int) -> CostStructure | None:
    raw = data.get(key)
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise ModelFileError(f"{key} must be an {n}x{n} matrix")
    _reject_floats(raw, key)
    try:
        return CostStructure(n, raw)
    except DomainError as e:
        raise ModelFileError(f"{key}: {e}") from e


def parse_model(data: Mapping[str, Any], name: str = "") -> ModelFile:
    if not isinstance(data, Mapping):
        raise ModelFileError("model file must be a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ModelFileError("model file needs an integer 'n'")
    payoffs = data.get("payoffs", {})
    if not isinstance(payoffs, Mapping):
        raise ModelFileError("'payoffs' must map network keys to payoff vectors")

    table = {}
    for key, vec in payoffs.items():
        if not isinstance(vec, list) or len(vec) != n:
            raise ModelFileError(f"payoff vector for {key!r} must list {n} values")
        _reject_floats(vec, f"payoffs[{key!r}]")
        table[key] = vec
    try:
        phi = NetworkPayoff.from_table(n, table)
    except DomainError as e:
        raise ModelFileError(str(e)) from e

    source = dict(data.get("source") or {})
    phi.source.update(source)
    return ModelFile(phi, _costs(data, "costs_two_sided", n), _costs(data, "costs_one_sided", n),
                     str(data.get("name") or name), source)


def emit_model(model: ModelFile) -> dict[str, Any]:
    """Every network is listed, g^0 first, so the file reads like a payoff table."""
    out: dict[str, Any] = {"name": model.name, "n": model.n}
    if model.source:
        out["source"] = model.source
    out["payoffs"] = {
        Network(model.n, bits).key(): [fmt_rational(x) for x in row]
        for bits, row in enumerate(model.phi.rows)
    }
    if model.costs is not None:
        out["costs_two_sided"] = model.costs.to_matrix()
    if model.gamma is not None:
        out["costs_one_sided"] = model.gamma.to_matrix()
    return out


def _read_json(path: Path | str) -> Any:
    p = Path(path)
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ModelFileError(f"{p}: invalid JSON ({e.msg} at line {e.lineno})") from e


def load_model(path: Path | str) -> ModelFile:
    data = _read_json(path)
    if isinstance(data, Mapping) and "players" in data:
        raise ModelFileError(f"{path} is a game file, not a network model")
    model = parse_model(data, Path(path).stem)
    log.debug("loaded model %s (n=%d)", model.name, model.n)
    return model


def save_model(model: ModelFile, path: Path | str) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(json.dumps(emit_model(model), ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    log.info("model written to %s", p)
    return p


def digest(path: Path | str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def parse_game(data: Mapping[str, Any], name: str = "") -> FiniteGame:
    labels = data.get("players")
    if not isinstance(labels, list) or not labels or not all(isinstance(ls, list) and ls for ls in labels):
        raise ModelFileError("game file needs 'players': a list of strategy label lists")
    payoffs = data.get("payoffs")
    if not isinstance(payoffs, Mapping):
        raise ModelFileError("game file needs 'payoffs' keyed by comma-joined strategy labels")
    table = {}
    for key, vec in payoffs.items():
        if not isinstance(vec, list):
            raise ModelFileError(f"payoff vector for {key!r} must be a list")
        _reject_floats(vec, f"payoffs[{key!r}]")
        table[tuple(part.strip() for part in key.split(","))] = vec
    try:
        return FiniteGame.from_table([[str(s) for s in ls] for ls in labels], table, str(data.get("name") or name))
    except DomainError as e:
        raise ModelFileError(str(e)) from e


def load_game(path: Path | str) -> FiniteGame:
    return parse_game(_read_json(path), Path(path).stem)


def load_any(path: Path | str) -> ModelFile | FiniteGame:
    data = _read_json(path)
    if isinstance(data, Mapping) and "players" in data:
        return parse_game(data, Path(path).stem)
    return parse_model(data, Path(path).stem)
