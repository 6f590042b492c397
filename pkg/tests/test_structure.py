from hypothesis import given, settings, strategies as st

from app.net.network import Network, link_set
from app.net.payoffs import NetworkPayoff
from app.stability.structure import (
    NetworkClass,
    is_convex_on,
    is_discerning_on,
    is_link_monotone,
    is_uniform_on,
)
from app.stability.verify import (
    verify_addition_equivalences,
    verify_deletion_equivalence,
    verify_pairwise_corollaries,
)

rows_3 = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=8, max_size=8)


def degree_payoff(n: int) -> NetworkPayoff:
    return NetworkPayoff.from_function(n, lambda g: [len(link_set(g, i)) for i in range(1, n + 1)])


def test_indifferent_empty_network_is_not_discerning(model):
    v = is_discerning_on(model("fix_a").phi)
    assert not v
    assert v.witness.network == ""
    assert v.witness.links == ("12",)


def test_uniformity_fails_where_star_lap_and_slap_differ(model):
    phi = model("fix_a").phi
    v = is_uniform_on(phi, NetworkClass.STAR_LAP)
    assert not v
    assert v.witness.network == "12"
    assert v.witness.data["other_gain"] == "-1"


def test_convexity_failure_explains_ps_versus_sps(model):
    phi = model("fix_b").phi
    v = is_convex_on(phi, NetworkClass.PS)
    assert not v
    assert v.witness.network == "12,13,23"
    assert v.witness.player == 3


def test_degree_payoff_is_strictly_link_monotone():
    phi = degree_payoff(3)
    assert is_link_monotone(phi, strict=True)
    assert is_convex_on(phi, [Network.complete(3)])


def test_link_monotonicity_failure(model):
    v = is_link_monotone(model("fix_a").phi)
    assert not v
    assert v.witness.network == "12"
    assert v.witness.player == 3
    v = is_link_monotone(NetworkPayoff.zero(3), strict=True)
    assert is_link_monotone(NetworkPayoff.zero(3))
    assert not v and v.witness.network == ""


def test_fixture_reports_hold(model):
    for name in ("fix_a", "fix_b", "fix_c"):
        phi = model(name).phi
        for report in (verify_deletion_equivalence(phi), verify_addition_equivalences(phi),
                       verify_pairwise_corollaries(phi)):
            assert report.ok, (name, report.to_dict())


@settings(max_examples=150)
@given(rows_3)
def test_equivalences_hold_for_any_payoff(rows):
    phi = NetworkPayoff.from_rows(3, rows)
    assert verify_deletion_equivalence(phi).ok
    assert verify_addition_equivalences(phi).ok
    assert verify_pairwise_corollaries(phi).ok
