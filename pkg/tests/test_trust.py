import pytest

from app.config import configure
from app.errors import CapacityError, DomainError, PreconditionError
from app.consent.profiles import SignalProfile
from app.net.network import Network
from app.stability.links import is_ldp
from app.stability.structure import NetworkClass, members
from app.trust.beliefs import belief_system, monadic_beliefs
from app.trust.monadic import Support, is_monadic, is_weak_monadic, monadic_networks
from app.trust.unilateral import is_unilaterally_stable, unilateral_networks
from app.trust.verify import verify_monadic_equivalence


@pytest.fixture
def fix_d(model):
    m = model("fix_d")
    return m.phi, m.costs


def test_beliefs_of_a_lonely_offer(fix_d):
    phi, costs = fix_d
    offer = SignalProfile.from_vectors(((1, 1), (0, 0), (0, 0)))
    beliefs = monadic_beliefs(phi, costs, offer, 1)
    assert str(beliefs) == "(-, (1,0), (1,0))"
    with pytest.raises(DomainError):
        beliefs.entry(1, 2)
    assert beliefs.entry(2, 1) == 1


def test_beliefs_on_supported_networks(fix_d, net):
    phi, costs = fix_d
    ring = SignalProfile.non_superfluous(net(3, "13,23"))
    assert str(monadic_beliefs(phi, costs, ring, 2)) == "((1,1), -, (1,1))"
    full = SignalProfile.non_superfluous(Network.complete(3))
    assert str(monadic_beliefs(phi, costs, full, 1)) == "(-, (1,1), (1,1))"
    assert [b.owner for b in belief_system(phi, costs, full)] == [1, 2, 3]


def test_monadic_networks_are_strictly_pairwise_stable_after_costs(fix_d, keys):
    phi, costs = fix_d
    assert keys(monadic_networks(phi, costs)) == ["12,13,23"]
    report = verify_monadic_equivalence(phi, costs)
    assert report.ok, report.to_dict()


def test_weak_monadic_support_can_be_superfluous(fix_d, net):
    phi, costs = fix_d
    v = is_weak_monadic(phi, costs, net(3, ""))
    assert v
    assert v.support.vectors() == ((1, 1), (0, 0), (0, 0))

    v = is_weak_monadic(phi, costs, net(3, "13,23"))
    assert v
    assert v.support.vectors() == ((0, 1), (1, 1), (1, 1))
    assert not is_monadic(phi, costs, net(3, "13,23"))


def test_path_is_neither_weak_monadic_nor_monadic(fix_d, net):
    phi, costs = fix_d
    g = net(3, "12,23")
    assert not is_weak_monadic(phi, costs, g)
    v = is_monadic(phi, costs, g)
    assert not v
    assert v.witness.network == "12,23"


def test_free_signals_admit_superfluous_monadic_support(model, keys):
    m = model("fix_e")
    assert keys(monadic_networks(m.phi, m.costs)) == ["12"]
    assert keys(monadic_networks(m.phi, m.costs, Support.ANY)) == ["12", "13,23"]
    with pytest.raises(PreconditionError):
        verify_monadic_equivalence(m.phi, m.costs)


def test_unilateral_stability(model, net, keys):
    phi = model("fix_c").phi
    assert keys(unilateral_networks(phi)) == ["12,13,23"]
    sps = keys(members(phi, NetworkClass.SPS))
    assert "" in sps
    assert "12" in keys(members(phi, NetworkClass.SPS_STRICT))

    v = is_unilaterally_stable(phi, net(3, ""))
    assert not v
    assert v.witness.player == 3
    assert v.witness.links == ("13", "23")
    assert not is_unilaterally_stable(phi, net(3, "12"))


def test_unilateral_stability_needs_deletion_proofness(model, keys):
    phi = model("fix_e").phi
    assert keys(unilateral_networks(phi)) == ["13,23"]
    v = is_ldp(phi, Network.complete(3))
    assert not v and v.witness.player == 2
    assert not is_unilaterally_stable(phi, Network.complete(3))


def test_monadic_search_is_capped(fix_d, net):
    phi, costs = fix_d
    configure(max_monadic_players=2)
    with pytest.raises(CapacityError):
        is_monadic(phi, costs, net(3, ""))
