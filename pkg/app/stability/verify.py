"""
Dual computation of the deletion and addition equivalences: each class is
built by brute force, each structural predicate is evaluated on its own,
and the report records whether the biconditionals agree.
"""

from __future__ import annotations

import logging
from typing import Any

from app.net.network import Network
from app.net.payoffs import NetworkPayoff
from app.stability.structure import (
    NetworkClass,
    is_convex_on,
    is_discerning_on,
    is_uniform_on,
    member_bits,
)
from app.verdict import Verdict, VerificationReport

log = logging.getLogger(__name__)


def _keys(n: int, bits: set[int]) -> list[str]:
    return [Network(n, b).key() for b in sorted(bits)]


def _inclusion(report: VerificationReport, name: str, n: int, small: set[int], big: set[int]) -> None:
    extra = small - big
    report.add(name, not extra, witness={"outside": _keys(n, extra)} if extra else None)


def _biconditional(report: VerificationReport, name: str, n: int, left: set[int], right: set[int],
                   verdicts: list[tuple[str, Verdict]]) -> None:
    equal = left == right
    predicate = all(bool(v) for _, v in verdicts)
    detail = f"sets equal: {equal}; " + ", ".join(f"{label}: {bool(v)}" for label, v in verdicts)
    witness: dict[str, Any] | None = None
    if equal != predicate:
        witness = {"difference": _keys(n, left ^ right)}
        for label, v in verdicts:
            if not v and v.witness is not None:
                witness[label] = v.witness.to_dict()
        log.warning("%s violated: %s", name, detail)
    report.add(name, equal == predicate, detail, witness)


def verify_deletion_equivalence(phi: NetworkPayoff) -> VerificationReport:
    n = phi.n
    report = VerificationReport("deletion-equivalence", n)
    d = set(member_bits(phi, NetworkClass.LDP))
    ds = set(member_bits(phi, NetworkClass.SLDP))
    _inclusion(report, "sldp-within-ldp", n, ds, d)
    report.add("empty-network-sldp", 0 in ds)
    _biconditional(report, "ldp-equals-sldp-iff-convex", n, d, ds,
                   [("convex", is_convex_on(phi, [Network(n, b) for b in sorted(d)]))])
    return report


def verify_addition_equivalences(phi: NetworkPayoff) -> VerificationReport:
    n = phi.n
    report = VerificationReport("addition-equivalence", n)
    a = set(member_bits(phi, NetworkClass.LAP))
    a_star = set(member_bits(phi, NetworkClass.STAR_LAP))
    a_s = set(member_bits(phi, NetworkClass.SLAP))
    full = (1 << (n * (n - 1) // 2)) - 1

    _inclusion(report, "slap-within-star-lap", n, a_s, a_star)
    _inclusion(report, "star-lap-within-lap", n, a_star, a)
    report.add("complete-network-slap", full in a_s)

    on_a = [Network(n, b) for b in sorted(a)]
    on_a_star = [Network(n, b) for b in sorted(a_star)]
    _biconditional(report, "lap-equals-star-lap-iff-discerning", n, a, a_star,
                   [("discerning", is_discerning_on(phi, on_a))])
    _biconditional(report, "star-lap-equals-slap-iff-uniform", n, a_star, a_s,
                   [("uniform", is_uniform_on(phi, on_a_star))])
    _biconditional(report, "lap-equals-slap-iff-discerning-and-uniform", n, a, a_s,
                   [("discerning", is_discerning_on(phi, on_a)), ("uniform", is_uniform_on(phi, on_a))])
    return report


def verify_pairwise_corollaries(phi: NetworkPayoff) -> VerificationReport:
    n = phi.n
    report = VerificationReport("pairwise-corollaries", n)
    p = set(member_bits(phi, NetworkClass.PS))
    p_strong = set(member_bits(phi, NetworkClass.SPS))
    p_strict = set(member_bits(phi, NetworkClass.SPS_STRICT))

    _inclusion(report, "strict-within-strong", n, p_strict, p_strong)
    _inclusion(report, "strong-within-pairwise", n, p_strong, p)

    on_p = [Network(n, b) for b in sorted(p)]
    on_strong = [Network(n, b) for b in sorted(p_strong)]
    _biconditional(report, "ps-equals-sps-iff-convex", n, p, p_strong,
                   [("convex", is_convex_on(phi, on_p))])
    _biconditional(report, "sps-equals-strict-iff-discerning-and-uniform", n, p_strong, p_strict,
                   [("discerning", is_discerning_on(phi, on_strong)), ("uniform", is_uniform_on(phi, on_strong))])
    _biconditional(report, "ps-equals-strict-iff-convex-discerning-uniform", n, p, p_strict,
                   [("convex", is_convex_on(phi, on_p)), ("discerning", is_discerning_on(phi, on_p)),
                    ("uniform", is_uniform_on(phi, on_p))])
    return report
