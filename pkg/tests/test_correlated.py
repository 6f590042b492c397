from fractions import Fraction

import pytest

from app.consent.models import myerson_game
from app.correlated.devices import (
    CorrelationDevice,
    deviation_values,
    expected_payoffs,
    is_correlated_equilibrium,
    is_ex_ante_self_enforcing,
)
from app.errors import DeviceError
from app.games.kernel import enumerate_nash
from app.io.device_file import load_device, parse_device
from app.io.model_file import load_game


@pytest.fixture
def device(chicken, fixture_path):
    return lambda name: load_device(fixture_path(f"{name}.json"), chicken)


def test_traffic_light_device(chicken, device):
    light = device("chicken_device_1")
    assert expected_payoffs(light, chicken) == (Fraction(9, 2), Fraction(9, 2))
    assert is_correlated_equilibrium(light, chicken)
    assert is_ex_ante_self_enforcing(light, chicken)


def test_device_with_a_common_red_light(chicken, device):
    lottery = device("chicken_device_2")
    assert expected_payoffs(lottery, chicken) == (Fraction(19, 4), Fraction(19, 4))

    v = is_correlated_equilibrium(lottery, chicken)
    assert not v
    assert v.witness.player == 1
    assert v.witness.data == {"told": "S", "deviation": "C", "obey": "4", "deviate": "14/3"}

    v = is_ex_ante_self_enforcing(lottery, chicken)
    assert not v
    assert v.witness.data["deviation"] == "C"
    assert v.witness.data["deviate"] == "21/4"
    assert deviation_values(lottery, chicken, 1) == {"S": Fraction(17, 4), "C": Fraction(21, 4)}


def test_point_mass_off_equilibrium(chicken, device):
    assert not is_correlated_equilibrium(device("chicken_all_red"), chicken)
    assert is_correlated_equilibrium(CorrelationDevice.point_mass((0, 1)), chicken)


def test_ex_ante_enforcement_is_weaker_on_signal_games(model, fixture_path):
    game = myerson_game(model("fix_f").phi)
    lottery = load_device(fixture_path("fix_f_device.json"), game, signals=True)
    assert expected_payoffs(lottery, game) == (Fraction(11, 3), Fraction(19, 6), Fraction(37, 12))
    assert deviation_values(lottery, game, 2)["(1,0)"] == Fraction(8, 3)
    assert is_ex_ante_self_enforcing(lottery, game)

    v = is_correlated_equilibrium(lottery, game)
    assert not v
    assert v.witness.player == 2
    assert v.witness.data == {"told": "(1,1)", "deviation": "(1,0)", "obey": "2", "deviate": "8"}


def test_reduced_two_stage_game(fixture_path):
    game = load_game(fixture_path("two_stage_game.json"))
    assert enumerate_nash(game) == [(1, 0), (1, 1)]


def test_devices_are_validated(chicken):
    with pytest.raises(DeviceError):
        parse_device([{"profile": ["S", "S"], "prob": "1/2"}], chicken)
    with pytest.raises(DeviceError):
        parse_device([{"profile": ["S", "S"], "prob": 1.0}], chicken)
    with pytest.raises(DeviceError):
        parse_device([{"profile": ["S", "X"], "prob": 1}], chicken)
    with pytest.raises(DeviceError):
        parse_device([{"profile": ["S"], "prob": 1}], chicken)
    with pytest.raises(DeviceError):
        CorrelationDevice.from_pairs([((0, 0), "3/2"), ((1, 1), "-1/2")])
    with pytest.raises(DeviceError):
        parse_device({"profile": ["S", "S"]}, chicken)


def test_repeated_profiles_are_merged():
    d = CorrelationDevice.from_pairs([((0, 1), "1/4"), ((0, 1), "1/4"), ((1, 0), "1/2")])
    assert d.support == (((0, 1), Fraction(1, 2)), ((1, 0), Fraction(1, 2)))
    assert d.marginal(1) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
