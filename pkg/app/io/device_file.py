"""
Device files: ``[{"profile": ..., "prob": "p/q"}, ...]``.

Against a game file a profile lists one strategy label per player
(``["S", "C"]``); against a network model it is a signal profile in vector
notation (``[[1, 1], [1, 0], [1, 0]]``).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from app.errors import DeviceError, DomainError
from app.games.kernel import FiniteGame, Profile
from app.consent.profiles import SignalProfile
from app.correlated.devices import CorrelationDevice


def _profile(entry: Any, game: FiniteGame, signals: bool) -> Profile:
    if not isinstance(entry, list) or len(entry) != game.n:
        raise DeviceError(f"profile {entry!r} must list one entry per player ({game.n})")
    try:
        if signals:
            return SignalProfile.from_vectors(entry).strategies()
        index = [{label: s for s, label in enumerate(game.labels[i])} for i in range(game.n)]
        return tuple(index[i][str(label)] for i, label in enumerate(entry))
    except KeyError as e:
        raise DeviceError(f"unknown strategy label {e.args[0]!r} in {entry!r}") from e
    except DomainError as e:
        raise DeviceError(str(e)) from e


def parse_device(data: Sequence[Any], game: FiniteGame, signals: bool = False) -> CorrelationDevice:
    if not isinstance(data, list):
        raise DeviceError("a device file is a list of {\"profile\": ..., \"prob\": \"p/q\"} entries")
    pairs = []
    for k, item in enumerate(data):
        if not isinstance(item, dict) or "profile" not in item or "prob" not in item:
            raise DeviceError(f"entry {k} needs 'profile' and 'prob'")
        if isinstance(item["prob"], float):
            raise DeviceError(f"entry {k}: float probability {item['prob']!r} is inexact")
        pairs.append((_profile(item["profile"], game, signals), item["prob"]))
    device = CorrelationDevice.from_pairs(pairs)
    device.check(game)
    return device


def load_device(path: Path | str, game: FiniteGame, signals: bool = False) -> CorrelationDevice:
    p = Path(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise DeviceError(f"{p}: invalid JSON ({e.msg} at line {e.lineno})") from e
    return parse_device(data, game, signals)
