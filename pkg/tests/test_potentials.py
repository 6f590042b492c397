import random

from hypothesis import given, settings, strategies as st

from app.games.kernel import FiniteGame
from app.net.network import link_set
from app.net.payoffs import NetworkPayoff
from app.potentials.constraints import OrderConstraints, solve
from app.potentials.existence import existence_report
from app.potentials.game import exact_game_potential, ordinal_game_potential
from app.potentials.network import PotentialKind, exact_network_potential, ordinal_network_potential
from app.random_models import potential_of, potential_payoff

rows_3 = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=8, max_size=8)

PENNIES = FiniteGame.from_table(
    [["H", "T"], ["H", "T"]],
    {("H", "H"): [1, -1], ("H", "T"): [-1, 1], ("T", "H"): [-1, 1], ("T", "T"): [1, -1]},
    "pennies",
)


def test_chain_constraints_get_increasing_levels():
    c = OrderConstraints(["a", "b", "c", "d"])
    c.add("a", "b", 1)
    c.add("c", "b", -1)
    c.add("c", "d", 0)
    solution = solve(c)
    assert solution.ok
    assert solution.levels == {"a": 0, "b": 1, "c": 2, "d": 2}


def test_inconsistent_constraints():
    c = OrderConstraints([1, 2, 3])
    c.add(1, 2, 1)
    c.add(2, 3, 1)
    c.add(3, 1, 1)
    assert solve(c).reason == "strict improvements run in a cycle"

    c = OrderConstraints([1, 2])
    c.add(1, 2, 0)
    c.add(1, 2, 1)
    solution = solve(c)
    assert not solution.ok
    assert solution.conflict == [1, 2]


def test_endpoints_valuing_a_link_differently(model):
    phi = model("fix_b").phi
    v = exact_network_potential(phi)
    assert not v
    assert v.witness.network == "12,13"
    assert v.witness.player == 1
    assert v.witness.links == ("12",)
    assert not ordinal_network_potential(phi)


def test_degree_payoff_potential_counts_links():
    phi = NetworkPayoff.from_function(3, lambda g: [len(link_set(g, i)) for i in (1, 2, 3)])
    v = exact_network_potential(phi)
    assert v
    assert v.support.kind is PotentialKind.EXACT
    assert list(v.support.values) == [0, 1, 1, 2, 1, 2, 2, 3]
    assert v.support.table()["12,13"] == "2"
    assert list(ordinal_network_potential(phi).support.values) == [0, 1, 1, 2, 1, 2, 2, 3]


def test_chicken_is_an_exact_potential_game(chicken):
    v = exact_game_potential(chicken)
    assert v
    assert v.support.values == {(0, 0): 0, (0, 1): 2, (1, 0): 2, (1, 1): 0}
    assert v.support.table(chicken)["(S,C)"] == "2"
    assert ordinal_game_potential(chicken)


def test_matching_pennies_has_no_potential():
    assert not exact_game_potential(PENNIES)
    v = ordinal_game_potential(PENNIES)
    assert not v
    assert v.witness.reason == "strict improvements run in a cycle"


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_generated_potential_is_recovered(seed):
    phi = potential_payoff(3, random.Random(seed))
    lam = potential_of(phi)
    v = exact_network_potential(phi)
    assert v
    assert list(v.support.values) == [x - lam[0] for x in lam]
    assert existence_report(phi).ok


def test_fixture_existence_reports(model):
    for name in ("fix_a", "fix_b", "fix_d", "fix_f"):
        m = model(name)
        report = existence_report(m.phi, m.costs)
        assert report.ok, (name, report.to_dict())


@settings(max_examples=30)
@given(rows_3)
def test_existence_results_hold_for_any_payoff(rows):
    assert existence_report(NetworkPayoff.from_rows(3, rows)).ok
