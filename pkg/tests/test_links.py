from app.net.network import Network
from app.stability.links import (
    is_lap,
    is_ldp,
    is_pairwise_stable,
    is_slap,
    is_sldp,
    is_star_lap,
    is_strictly_ps,
    is_strongly_ps,
    ldp_violation,
)
from app.stability.structure import NetworkClass, member_bits, members


def test_addition_classes_separate(model, net, keys):
    phi = model("fix_a").phi
    empty, one, full = net(3, ""), net(3, "12"), Network.complete(3)

    assert is_lap(phi, empty) and not is_star_lap(phi, empty)
    assert is_star_lap(phi, one) and not is_slap(phi, one)
    assert is_slap(phi, full)

    assert keys(members(phi, NetworkClass.LAP)) == ["", "12", "12,13,23"]
    assert keys(members(phi, NetworkClass.STAR_LAP)) == ["12", "12,13,23"]
    assert keys(members(phi, NetworkClass.SLAP)) == ["12,13,23"]


def test_lap_witness_names_the_link(model, net):
    v = is_lap(model("fix_a").phi, net(3, "13"))
    assert not v
    assert v.witness.network == "13"
    assert v.witness.links == ("12",)
    assert v.witness.data == {"gain_i": "2", "gain_j": "1"}


def test_pairwise_classes(model, keys):
    phi = model("fix_b").phi
    assert keys(members(phi, NetworkClass.PS)) == ["", "12", "12,13,23"]
    assert keys(members(phi, NetworkClass.SPS)) == ["", "12"]
    assert keys(members(phi, NetworkClass.SPS_STRICT)) == ["12"]


def test_complete_network_is_pairwise_but_not_strongly_stable(model):
    phi = model("fix_b").phi
    full = Network.complete(3)
    assert is_ldp(phi, full)
    assert is_pairwise_stable(phi, full)

    v = is_sldp(phi, full)
    assert not v
    assert v.witness.player == 3
    assert v.witness.links == ("13", "23")
    assert v.witness.data == {"payoff": "3", "after": "5"}
    assert not is_strongly_ps(phi, full)


def test_strict_class_needs_every_addition_to_hurt(model, net):
    phi = model("fix_b").phi
    assert is_strictly_ps(phi, net(3, "12"))
    v = is_strictly_ps(phi, net(3, ""))
    assert not v and v.witness.links == ("12",)


def test_ldp_violation_on_raw_bits(model):
    phi = model("fix_b").phi
    w = ldp_violation(phi, 0b011)
    assert w.player == 1
    assert w.links == ("12",)
    assert ldp_violation(phi, 0) is None


def test_sldp_is_contained_in_ldp(model):
    for name in ("fix_a", "fix_b", "fix_c"):
        phi = model(name).phi
        assert set(member_bits(phi, "sldp")) <= set(member_bits(phi, "ldp"))
        assert 0 in member_bits(phi, "sldp")
