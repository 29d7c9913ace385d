import pytest

from ljcert.analysis.lattice import coordination_shells, fcc_energy_per_particle, fcc_unit_norms, optimize_fcc_scale
from ljcert.constants.bounds import FCC_LOWER_BOUND
from ljcert.utils.errors import DomainError


def test_coordination_shells() -> None:
    shells = coordination_shells(3.0)
    assert shells[0] == (1.0, 12)
    assert shells[1] == (pytest.approx(2**0.5), 6)
    assert shells[2] == (pytest.approx(3**0.5), 24)


def test_unit_norms_are_sorted_and_bounded() -> None:
    norms = fcc_unit_norms(4.0)
    assert norms[0] == pytest.approx(1.0)
    assert norms[-1] <= 4.0 + 1e-12
    assert all(a <= b for a, b in zip(norms, norms[1:]))


def test_energy_at_unit_scale() -> None:
    result = fcc_energy_per_particle(1.0)
    assert result.corrected_energy == pytest.approx(-8.388, abs=2e-3)
    assert result.per_particle_energy > result.corrected_energy
    assert result.density == pytest.approx(2**0.5)


def test_optimal_scale_reaches_lower_bound() -> None:
    result = optimize_fcc_scale()
    assert result.scale == pytest.approx(0.97123, abs=1e-4)
    assert result.corrected_energy == pytest.approx(-8.6101, abs=1e-3)
    assert result.stability_lower_bound == float(FCC_LOWER_BOUND)


def test_tail_shrinks_with_cutoff() -> None:
    short = fcc_energy_per_particle(0.97, 6 * 0.97)
    long = fcc_energy_per_particle(0.97, 15 * 0.97)
    assert long.tail_bound < short.tail_bound
    assert long.corrected_energy == pytest.approx(short.corrected_energy, abs=5e-3)


def test_small_cutoff_rejected() -> None:
    with pytest.raises(DomainError):
        fcc_energy_per_particle(1.0, 2.0)
    with pytest.raises(DomainError):
        fcc_energy_per_particle(0.0)


def test_corrected_energy_is_unimodal_in_scale() -> None:
    scales = [0.90 + 0.01 * k for k in range(21)]
    energies = [fcc_energy_per_particle(s).corrected_energy for s in scales]
    best = min(range(len(scales)), key=energies.__getitem__)
    assert 0.95 < scales[best] < 1.0
    assert all(a > b for a, b in zip(energies[:best], energies[1 : best + 1]))
    assert all(a < b for a, b in zip(energies[best:], energies[best + 1 :]))


def test_optimal_scale_with_fixed_radius() -> None:
    result = optimize_fcc_scale(radius=12.0)
    assert result.cutoff == 12.0
    assert 0.95 < result.scale < 1.0
    assert result.corrected_energy == pytest.approx(-8.61, abs=5e-3)
