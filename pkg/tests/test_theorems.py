from dataclasses import replace

import pytest

from app.config import settings
from app.consent.equilibria import nash_profiles_by_network
from app.consent.models import two_sided_game
from app.consent.profiles import SignalProfile, signal_network_bits
from app.errors import DomainError
from app.theorems import THEOREMS, _run_one, random_instance, run_random_batch, run_theorem

CHEAP = ["deletion-equivalence", "addition-equivalence", "pairwise-corollaries", "m-networks",
         "two-sided", "sunk-cost-inclusion", "case-a-comparison", "monadic-equivalence"]


def test_unknown_theorem(model):
    with pytest.raises(DomainError):
        run_theorem("no-such-theorem", model("fix_a"))
    with pytest.raises(DomainError):
        run_random_batch("no-such-theorem", 1, 3)


@pytest.mark.parametrize("theorem", ["deletion-equivalence", "addition-equivalence", "pairwise-corollaries",
                                     "m-networks", "potentials-existence"])
def test_fixture_runs(model, theorem):
    report = run_theorem(theorem, model("fix_f"))
    assert report.theorem == theorem
    assert report.ok


def test_random_instances_are_reproducible():
    a = random_instance("two-sided", 3, seed=7, index=2)
    b = random_instance("two-sided", 3, seed=7, index=2)
    assert a.phi == b.phi and a.costs == b.costs
    assert a.costs.strictly_positive
    assert random_instance("m-networks", 3, 7, 2).costs is None
    assert random_instance("potentials-existence", 3, 7, 0).phi.source["generator"] == "potential"


@pytest.mark.parametrize("theorem", CHEAP)
def test_small_random_batches(theorem):
    reports = run_random_batch(theorem, 10, 3, seed=11)
    assert len(reports) == 10
    assert all(r.ok for r in reports), [r.to_dict() for r in reports if not r.ok][:1]


def test_positive_costs_leave_one_non_superfluous_profile_per_network():
    for index in range(6):
        m = random_instance("two-sided", 3, seed=13, index=index)
        assert m.costs.strictly_positive
        grouped = nash_profiles_by_network(two_sided_game(m.phi, m.costs), signal_network_bits)
        assert 0 in grouped
        for bits, profiles in grouped.items():
            assert len(profiles) == 1
            profile = SignalProfile.from_strategies(3, profiles[0])
            assert profile.is_non_superfluous
            assert profile.network().bits == bits


def test_worker_adopts_the_submitted_settings():
    submitted = replace(settings(), max_coalition_work=123456, seed=9)
    report = _run_one(("pairwise-corollaries", 3, 0, 0, submitted))
    assert report.theorem == "pairwise-corollaries"
    assert settings() == submitted


def test_every_theorem_is_registered():
    assert set(CHEAP) < set(THEOREMS)
    assert {"one-sided-inclusion", "case-a-comparison", "potentials-existence"} <= set(THEOREMS)


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["deletion-equivalence", "addition-equivalence", "pairwise-corollaries",
                                     "m-networks", "two-sided", "monadic-equivalence", "potentials-existence"])
def test_large_batches_at_three_players(theorem):
    assert all(r.ok for r in run_random_batch(theorem, 200, 3, seed=2024))


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["one-sided-inclusion", "sunk-cost-inclusion", "case-a-comparison"])
def test_one_sided_batches(theorem):
    assert all(r.ok for r in run_random_batch(theorem, 200, 3, seed=5))


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["deletion-equivalence", "addition-equivalence", "pairwise-corollaries"])
def test_batches_at_four_players(theorem):
    assert all(r.ok for r in run_random_batch(theorem, 50, 4, seed=3))


@pytest.mark.slow
def test_worker_pool_keeps_instance_order():
    serial = run_random_batch("pairwise-corollaries", 6, 3, seed=9, jobs=1)
    pooled = run_random_batch("pairwise-corollaries", 6, 3, seed=9, jobs=2)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in pooled]
