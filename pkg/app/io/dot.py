"""DOT export: one undirected graph per network, labelled with its stability flags."""

from __future__ import annotations

import logging
from pathlib import Path

import graphviz

from app.net.network import Network
from app.stability.classify import StabilityReport, StabilityRow

log = logging.getLogger(__name__)


def flag_string(row: StabilityRow) -> str:
    on = [c.value for c, v in row.flags.items() if v]
    return " ".join(on) if on else "unstable"


def network_graph(g: Network, label: str = "") -> graphviz.Graph:
    name = "g_" + (g.key().replace(",", "_") or "empty")
    dot = graphviz.Graph(name=name)
    if label:
        dot.attr(label=label)
    for i in range(1, g.n + 1):
        dot.node(str(i))
    for i, j in g.links():
        dot.edge(str(i), str(j))
    return dot


def export_dot(report: StabilityReport, out_dir: Path | str) -> list[Path]:
    """One ``.dot`` file per network, named after its bitmask."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    width = len(str(len(report.rows) - 1))
    for row in report.rows:
        g = row.network
        graph = network_graph(g, flag_string(row))
        path = out / f"g{g.bits:0{width}d}.dot"
        graph.save(filename=path.name, directory=str(out))
        written.append(path)
    log.info("wrote %d DOT files to %s", len(written), out)
    return written
