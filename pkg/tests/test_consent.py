import pytest

from app.config import configure
from app.errors import CapacityError, DomainError
from app.consent.equilibria import (
    Method,
    is_bilaterally_stable,
    m_networks,
    nash_networks_one_sided,
    nash_networks_two_sided,
    non_superfluous_one_sided_support,
    one_sided_support,
    two_sided_profiles,
)
from app.consent.models import (
    ConsentModel,
    ModelVariant,
    net_payoff_a,
    net_payoff_b,
    net_payoff_marginal_financing,
    payoff_two_sided,
)
from app.consent.profiles import DyadProfile, SignalProfile
from app.consent.verify import check_thm5, check_thm6, compare_case_a, verify_m_networks, verify_two_sided
from app.net.network import Network
from app.stability.links import ldp_violation


def test_signal_profile_encodings(net):
    p = SignalProfile.from_vectors(((1, 1), (0, 0), (0, 0)))
    assert p.strategies() == (3, 0, 0)
    assert p.network() == net(3, "")
    assert not p.is_non_superfluous
    assert str(p) == "((1,1), (0,0), (0,0))"
    assert SignalProfile.from_strategies(3, (3, 0, 0)) == p

    full = SignalProfile.non_superfluous(Network.complete(3))
    assert full.vectors() == ((1, 1), (1, 1), (1, 1))
    assert full.is_non_superfluous
    assert full.network() == Network.complete(3)
    with pytest.raises(DomainError):
        SignalProfile.from_vectors(((1, 2), (0, 0), (0, 0)))


def test_dyad_profiles(net):
    p = DyadProfile.from_pairs(3, initiations=[(2, 1)], responses=[(1, 2)])
    assert p.network() == net(3, "12")
    assert p.is_non_superfluous
    assert DyadProfile.from_strategies(3, p.strategies()) == p
    lonely = DyadProfile.from_pairs(3, initiations=[(2, 1)])
    assert lonely.network() == net(3, "")
    assert not lonely.is_non_superfluous


def test_costless_model_supports_the_sldp_class(model, keys):
    phi = model("fix_f").phi
    expected = ["", "12", "13", "23", "13,23"]
    assert keys(m_networks(phi)) == expected
    assert keys(m_networks(phi, Method.DIRECT)) == expected
    assert keys(m_networks(phi, "both")) == expected
    assert verify_m_networks(phi).ok


def test_bilateral_stability_verdicts(model, net):
    phi = model("fix_f").phi
    assert is_bilaterally_stable(phi, net(3, "12"))
    verdict = is_bilaterally_stable(phi, net(3, ""))
    assert not verdict
    assert verdict.witness.player == 1
    assert verdict.witness.data == {"partner": 2, "to": "12"}


def test_two_sided_net_payoff(model, net):
    m = model("fix_d")
    phi_a = net_payoff_a(m.phi, m.costs)
    assert phi_a(Network.complete(3)) == (1, 3, 4)
    empty_offer = SignalProfile.from_vectors(((1, 1), (0, 0), (0, 0)))
    assert payoff_two_sided(m.phi, m.costs, empty_offer)[0] == -2


def test_two_sided_supported_networks(model, keys):
    m = model("fix_d")
    expected = ["", "12,23", "13,23", "12,13,23"]
    assert keys(nash_networks_two_sided(m.phi, m.costs)) == expected
    assert keys(nash_networks_two_sided(m.phi, m.costs, Method.BOTH)) == expected
    report = verify_two_sided(m.phi, m.costs)
    assert report.ok, report.to_dict()


def test_free_signals_allow_superfluous_support(model, keys):
    m = model("superfluous")
    assert keys(nash_networks_two_sided(m.phi, m.costs, Method.BOTH)) == ["", "12"]
    grouped = two_sided_profiles(m.phi, m.costs)
    assert [p.strategies() for p in grouped[0]] == [(0, 0), (1, 0)]
    report = verify_two_sided(m.phi, m.costs)
    assert report.ok
    assert not next(c for c in report.checks if c.name == "positive-costs-unique-non-superfluous").asserted


def test_cheaper_initiator_finances_the_link(model, net):
    m = model("simplo")
    assert net_payoff_b(m.phi, m.gamma)(net(2, "12")) == (-3, 10)
    support = one_sided_support(m.phi, m.gamma)
    assert sorted(support) == [0, 1]
    assert support[1].initiate[1][0] == 1
    assert support[1].initiate[0][1] == 0


def test_one_sided_inclusion_is_strict(model):
    m = model("simplo")
    report = check_thm5(m.phi, m.gamma)
    assert report.ok
    converse = next(c for c in report.checks if not c.asserted)
    assert not converse.holds
    assert converse.witness == {"outside": ["12"]}


def test_support_may_need_two_initiators(model):
    m = model("two_step")
    support = one_sided_support(m.phi, m.gamma)
    both = support[0b011]
    assert both.initiate[1][0] == 1 and both.initiate[2][0] == 1
    assert both.is_non_superfluous

    marginal = net_payoff_marginal_financing(m.phi, m.gamma)
    assert marginal.at(0b011)[0] == -3
    w = ldp_violation(marginal, 0b011)
    assert w.player == 1
    assert w.data["after"] == "1"


def test_financed_networks_have_non_superfluous_support(model, net):
    m = model("two_step")
    report = check_thm5(m.phi, m.gamma)
    assert report.ok
    check = next(c for c in report.checks if c.name == "sldp-of-financier-payoff-has-non-superfluous-support")
    assert check.holds and check.asserted
    assert check.detail == "3 networks checked"

    prof = non_superfluous_one_sided_support(m.phi, m.gamma, net(3, "12,13"))
    assert prof.is_non_superfluous
    assert prof.initiate[1][0] == 1 and prof.initiate[2][0] == 1
    assert non_superfluous_one_sided_support(m.phi, m.gamma, net(3, "23")) is None


def test_sunk_costs_widen_the_supported_set(model, keys):
    m = model("case_b")
    assert keys(nash_networks_two_sided(m.phi, m.costs)) == [""]
    assert keys(nash_networks_one_sided(m.phi, m.costs)) == ["", "12"]
    report = check_thm6(m.phi, m.costs)
    assert report.ok
    assert [c.holds for c in report.checks] == [True, True, False]
    assert report.checks[1].name == "two-sided-has-non-superfluous-one-sided-support"


def test_initiator_paying_everything_can_shrink_the_set(model, keys):
    m = model("case_a")
    assert keys(nash_networks_two_sided(m.phi, m.costs)) == ["", "12"]
    assert keys(nash_networks_one_sided(m.phi, m.costs.pair_sums())) == [""]
    report = compare_case_a(m.phi, m.costs)
    assert report.ok
    assert report.failures == []
    assert not all(c.holds for c in report.checks)


def test_consent_model_dispatches_on_variant(model):
    m = model("fix_d")
    basic = ConsentModel(m.phi)
    assert basic.game().name == "myerson"
    two = ConsentModel(m.phi, m.costs, ModelVariant.TWO_SIDED)
    profile = SignalProfile.non_superfluous(Network.complete(3))
    assert two.payoff(profile) == (1, 3, 4)
    assert two.net_payoff() == net_payoff_a(m.phi, m.costs)
    with pytest.raises(DomainError):
        ConsentModel(m.phi, m.costs, ModelVariant.ONE_SIDED).payoff(profile)


def test_profile_enumeration_is_capped(model):
    configure(max_profile_players=2)
    with pytest.raises(CapacityError):
        m_networks(model("fix_f").phi, Method.DIRECT)
