import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from deltawells import (
    PhysicalConstants,
    energy_from_kappa,
    equidistant_system,
    kappa_from_energy,
    load_system,
    validate_system,
)
from deltawells.errors import (
    DeltaWellsError,
    DuplicateCenter,
    EmptySystem,
    NonNegativeEnergy,
    NonPositiveConstant,
    NonPositiveKappa,
    NonPositiveStrength,
)
from deltawells.model import system_from_dict


def test_single_center_is_valid():
    s = validate_system([0], [2], PhysicalConstants(1.0, 0.5))
    assert s.n == 1
    assert s.couplings[0] == 1.0


def test_centers_are_sorted_with_their_strengths():
    s = validate_system([1, 0], [3, 2])
    assert s.centers.tolist() == [0.0, 1.0]
    assert s.strengths.tolist() == [2.0, 3.0]


@pytest.mark.parametrize(
    "centers,strengths,err",
    [
        ([], [], EmptySystem),
        ([0], [-1], NonPositiveStrength),
        ([0, 1], [1, 0], NonPositiveStrength),
        ([0, 0], [1, 1], DuplicateCenter),
        ([0, 1, 1 + 1e-14], [1, 1, 1], DuplicateCenter),
        ([0, 1], [1], DeltaWellsError),
        ([0, np.nan], [1, 1], DeltaWellsError),
    ],
)
def test_rejections(centers, strengths, err):
    with pytest.raises(err):
        validate_system(centers, strengths)


@pytest.mark.parametrize("hbar,mass", [(0, 1), (1, -0.5), (np.inf, 1)])
def test_bad_constants(hbar, mass):
    with pytest.raises(NonPositiveConstant):
        PhysicalConstants(hbar, mass)


def test_arrays_are_read_only():
    s = validate_system([0, 1], [1, 1])
    with pytest.raises(ValueError):
        s.centers[0] = 5.0


def test_without_drops_one_center():
    s = validate_system([0, 1, 2], [1, 2, 3]).without(1)
    assert s.centers.tolist() == [0.0, 2.0]
    assert s.strengths.tolist() == [1.0, 3.0]


@pytest.mark.parametrize("energy,kappa", [(-1.0, 1.0), (-4.0, 2.0)])
def test_kappa_energy_defaults(energy, kappa):
    assert kappa_from_energy(energy) == pytest.approx(kappa, abs=1e-15)
    assert energy_from_kappa(kappa) == pytest.approx(energy, abs=1e-15)


def test_single_center_root_is_unit_kappa():
    c = PhysicalConstants()
    e = -c.mass * 2.0**2 / (2 * c.hbar**2)
    assert kappa_from_energy(e, c) == pytest.approx(c.mass * 2.0 / c.hbar**2, abs=1e-15)


def test_energy_and_kappa_signs():
    with pytest.raises(NonNegativeEnergy):
        kappa_from_energy(0.0)
    with pytest.raises(NonPositiveKappa):
        energy_from_kappa(-1.0)


@given(
    st.floats(-1e6, -1e-6),
    st.floats(0.1, 10),
    st.floats(0.1, 10),
)
def test_energy_round_trip(e, hbar, mass):
    c = PhysicalConstants(hbar, mass)
    assert energy_from_kappa(kappa_from_energy(e, c), c) == pytest.approx(e, rel=1e-14)


def test_equidistant_system():
    s = equidistant_system(4, 1.5, 2.0)
    assert np.allclose(np.diff(s.centers), 1.5)
    assert s.strengths.tolist() == [2.0] * 4


def test_dict_round_trip(tmp_path):
    s = validate_system([0, 2.5], [1.2, 0.7], PhysicalConstants(1.3, 0.8))
    path = tmp_path / "s.json"
    path.write_text(json.dumps(s.to_dict()))
    t = load_system(path)
    assert t.centers.tolist() == s.centers.tolist()
    assert t.strengths.tolist() == s.strengths.tolist()
    assert t.constants == s.constants


def test_dict_defaults_and_missing_fields():
    s = system_from_dict({"centers": [0], "strengths": [2]})
    assert (s.constants.hbar, s.constants.mass) == (1.0, 0.5)
    with pytest.raises(DeltaWellsError, match="strengths"):
        system_from_dict({"centers": [0]})
    with pytest.raises(DeltaWellsError, match="centers"):
        system_from_dict({"centers": 3, "strengths": [1]})
