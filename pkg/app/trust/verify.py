from __future__ import annotations

import logging

from app.errors import PreconditionError
from app.net.network import Network
from app.net.payoffs import CostStructure, NetworkPayoff
from app.stability.structure import NetworkClass, is_link_monotone, member_bits
from app.consent.models import net_payoff_a
from app.trust.monadic import monadic_networks, weak_monadic_networks
from app.trust.unilateral import unilateral_networks
from app.verdict import VerificationReport

log = logging.getLogger(__name__)


def _keys(n: int, bits) -> list[str]:
    return [Network(n, b).key() for b in sorted(bits)]


def verify_monadic_equivalence(phi: NetworkPayoff, costs: CostStructure) -> VerificationReport:
    """
    With every link cost strictly positive, the monadically stable networks
    are the strictly pairwise stable networks of the cost-netted payoffs.
    The report also carries the inclusions around unilateral stability.
    """
    if not costs.strictly_positive:
        raise PreconditionError("monadic equivalence needs c_ij > 0 for every ordered pair i != j")
    n = phi.n
    report = VerificationReport("monadic-equivalence", n)

    monadic = {g.bits for g in monadic_networks(phi, costs)}
    strict = set(member_bits(net_payoff_a(phi, costs), NetworkClass.SPS_STRICT))
    same = monadic == strict
    report.add("monadic-equals-strictly-ps-of-net-payoff", same, f"{len(monadic)} vs {len(strict)} networks",
               None if same else {"difference": _keys(n, monadic ^ strict)})
    if not same:
        log.warning("monadic equivalence violated on %s", _keys(n, monadic ^ strict))

    weak = {g.bits for g in weak_monadic_networks(phi, costs)}
    missing = monadic - weak
    report.add("monadic-within-weak-monadic", not missing,
               witness={"outside": _keys(n, missing)} if missing else None)

    unilateral = {g.bits for g in unilateral_networks(phi)}
    outside = unilateral - set(member_bits(phi, NetworkClass.SPS))
    report.add("unilateral-within-sps", not outside,
               witness={"outside": _keys(n, outside)} if outside else None)

    full = (1 << (n * (n - 1) // 2)) - 1
    only_full = unilateral == {full}
    strictly_monotone = bool(is_link_monotone(phi, strict=True))
    report.add("strictly-link-monotone-unilateral-is-complete", not strictly_monotone or only_full,
               f"strictly link monotone: {strictly_monotone}; unilateral: {_keys(n, unilateral)}")
    # ties in the weak form leave every network stable when phi is constant
    weak_monotone = bool(is_link_monotone(phi))
    report.add("link-monotone-unilateral-is-complete", not weak_monotone or only_full,
               f"link monotone: {weak_monotone}", asserted=False)
    return report
