import pytest

from app.config import configure
from app.errors import DomainError, InvariantError, PreconditionError
from app.net.network import Network
from app.stability.classify import Concept, StabilityRow, check_row, classify, default_concepts


def test_rows_carry_payoffs_and_flags(model, keys):
    report = classify(model("fix_b").phi)
    assert len(report.rows) == 8
    assert report.rows[1].to_dict()["payoffs"] == "(0, 0, 5)"
    assert keys(report.members("ps")) == ["", "12", "12,13,23"]
    assert keys(report.members(Concept.SPS_STRICT)) == ["12"]
    assert report.members("m-network") == report.members("sldp")
    assert Concept.TWO_SIDED not in report.concepts


def test_cost_concepts(model, keys):
    m = model("fix_d")
    report = classify(m.phi, m.costs)
    assert keys(report.members("two-sided")) == ["", "12,23", "13,23", "12,13,23"]
    assert keys(report.members("monadic")) == ["12,13,23"]
    weak = keys(report.members("weak-monadic"))
    assert "" in weak and "13,23" in weak and "12,23" not in weak
    assert report.to_dict()["rows"][7]["monadic"] is True


def test_cost_concepts_need_costs(model):
    with pytest.raises(PreconditionError):
        classify(model("fix_a").phi, concepts=["ps", "monadic"])


def test_default_concepts_follow_the_caps():
    assert Concept.ONE_SIDED in default_concepts(3, has_costs=True)
    configure(max_one_sided_players=2, max_monadic_players=2)
    concepts = default_concepts(3, has_costs=True)
    assert Concept.ONE_SIDED not in concepts
    assert Concept.MONADIC not in concepts
    assert Concept.TWO_SIDED in concepts


def test_contradictory_rows_are_rejected():
    row = StabilityRow(Network(3, 0), (0, 0, 0), {Concept.SPS: True, Concept.PS: False})
    with pytest.raises(InvariantError):
        check_row(row)
    row = StabilityRow(Network(3, 0), (0, 0, 0), {Concept.M_NETWORK: True, Concept.SLDP: False})
    with pytest.raises(InvariantError):
        check_row(row)
    check_row(StabilityRow(Network(3, 0), (0, 0, 0), {Concept.SPS: True}))


def test_order_columns_bracket_sldp_and_strong_stability(model):
    report = classify(model("fix_b").phi, concepts=["sldp", "strong"], orders=[3, 1, 2])
    assert report.orders == [1, 2, 3]
    assert report.order_members(1) == report.members("sldp")
    assert report.order_members(3) == report.members("strong")
    assert set(report.order_members(2)) <= set(report.order_members(1))
    row = report.to_dict()["rows"][0]
    assert row["order-1"] == row["sldp"]
    assert report.to_dict()["orders"] == [1, 2, 3]

    with pytest.raises(DomainError):
        classify(model("fix_b").phi, concepts=["ps"], orders=[4])


def test_order_columns_must_be_nested():
    g = Network(3, 0)
    with pytest.raises(InvariantError):
        check_row(StabilityRow(g, (0, 0, 0), {}, {1: False, 2: True}))
    with pytest.raises(InvariantError):
        check_row(StabilityRow(g, (0, 0, 0), {Concept.SLDP: False}, {1: True}))
    check_row(StabilityRow(g, (0, 0, 0), {Concept.SLDP: True}, {1: True, 2: False}))


def test_trade_classification_has_strongly_stable_paths(keys):
    from app.net.trade import trade_payoffs

    report = classify(trade_payoffs(3, "13/25"), concepts=["ps", "strong", "unilateral"])
    assert keys(report.members("strong")) == ["12,13", "12,23", "13,23"]
