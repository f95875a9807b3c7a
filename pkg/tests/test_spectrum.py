"""Spectral model: zeta sums, spectral dimension, residues."""

import math

import pytest

from qspec.errors import DomainError, EstimationError
from qspec.qpoly import QPoint
from qspec.spectrum import (
    SpectrumModel,
    TowerSpec,
    default_model,
    model_from_config,
    model_to_config,
    residue_limit,
    spectral_dimension_estimate,
    tower_log_terms,
    toy_model,
    toy_weight,
    toy_zeta_closed_form,
    zeta,
)


# -- model construction ---------------------------------------------------


def test_default_model_has_2l_towers():
    for ell in (1, 2, 3, 4):
        model = default_model(ell, 0, 0.5)
        assert len(model.towers) == 2 * ell
        degrees = sorted(t.k for t in model.towers)
        expected = sorted([0, ell] + [k for k in range(1, ell) for _ in (0, 1)])
        assert degrees == expected
        for tower in model.towers:
            assert all(c >= 0 for c in tower.family.base)


def test_interior_tower_bases_rank3():
    model = default_model(3, 0, 0.5)
    bases = [t.family.base for t in model.towers]
    assert bases[0] == (0, 0, 0)          # degree 0
    assert (0, 1, 0) in bases             # interior bump
    assert bases[-1] == (0, 0, 0)         # top degree


def test_model_config_roundtrip():
    model = default_model(3, 2, 0.35, c_left=1, eig_offset=2)
    clone = model_from_config(model_to_config(model))
    assert clone == model


def test_config_validation():
    with pytest.raises(DomainError):
        model_from_config({"q": 0.5})  # no rank
    with pytest.raises(DomainError):
        model_from_config({"ell": 2, "towers": [{"k": 0}]})  # wrong tower count
    with pytest.raises(DomainError):
        model_from_config({"ell": 2, "q": 1.5})


def test_tower_validation():
    fam_kwargs = dict(base=(0, 0), direction=(1, 1))
    from qspec.qdim import HighestWeightFamily

    fam = HighestWeightFamily(**fam_kwargs)
    with pytest.raises(DomainError):
        TowerSpec(k=0, family=fam, eig_model="mystery")
    with pytest.raises(DomainError):
        TowerSpec(k=0, family=fam, eig_offset=0, m_start=0)
    with pytest.raises(DomainError):
        SpectrumModel(ell=2, N=0, q=QPoint(0.5), towers=())
    with pytest.raises(DomainError):
        SpectrumModel(ell=2, N=0, q=QPoint(0.5), towers=(TowerSpec(k=5, family=fam),))


def test_eigenvalues_grow_like_inverse_powers():
    model = default_model(2, 0, 0.5)
    tower = model.towers[0]
    for m in (1, 5, 20):
        log_lam = tower.log_eigenvalue(0.5, m)
        # [m + 1] at q = 1/2 sits between q^-m and q^-(m+1)
        assert m * math.log(2) < log_lam < (m + 1) * math.log(2)


# -- zeta ------------------------------------------------------------------


def test_zeta_converges_above_abscissa():
    model = default_model(2, 0, 0.5)
    res = zeta(model, 5.0, weight="qdim")
    assert res.converged
    assert res.value > 0
    assert res.tail_estimate < 1e-9
    assert all(r < 1 for r in res.per_tower_ratio)


def test_zeta_decreasing_in_s():
    model = default_model(2, 0, 0.5)
    values = [zeta(model, s, weight="qdim").value for s in (4.5, 5.0, 6.0, 8.0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_zeta_flags_divergence_below_abscissa():
    model = default_model(2, 0, 0.5)
    for s in (3.9, 4.0, 2.0):
        res = zeta(model, s, weight="qdim", max_terms=5000)
        assert not res.converged
        assert any(r >= 1.0 - 1e-9 for r in res.per_tower_ratio)


def test_zeta_weight_symmetry_between_inverse_branches():
    for ell, q in [(2, 0.5), (3, 0.4)]:
        model = default_model(ell, 0, q)
        s = 2 * ell + 1.0
        za = zeta(model, s, weight="qdim")
        zb = zeta(model, s, weight="qdim-inverse")
        assert za.converged and zb.converged
        assert math.isclose(za.value, zb.value, rel_tol=1e-10)


def test_per_term_symmetry_between_inverse_branches():
    model = default_model(2, 0, 0.5)
    tower = model.towers[1]
    direct = tower_log_terms(model, tower, 5.0, "qdim", "shifted")
    flipped = tower_log_terms(model, tower, 5.0, "qdim-inverse", "shifted")
    for _ in range(40):
        (_, a), (_, b) = next(direct), next(flipped)
        assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)


def test_zeta_pure_vs_shifted_kernel_ordering():
    model = default_model(2, 0, 0.5)
    s = 5.0
    pure = zeta(model, s, weight="qdim", kernel="pure")
    shifted = zeta(model, s, weight="qdim", kernel="shifted")
    # lam^2 + 1 > lam^2 so the shifted kernel is strictly smaller termwise
    assert shifted.value < pure.value
    assert shifted.converged and pure.converged


def test_zeta_tail_estimate_brackets_refinement():
    model = default_model(2, 0, 0.5)
    coarse = zeta(model, 4.7, weight="qdim", tol=1e-6)
    fine = zeta(model, 4.7, weight="qdim", tol=1e-13)
    assert abs(coarse.value - fine.value) <= 10 * max(coarse.tail_estimate, 1e-13)
    assert coarse.terms_used < fine.terms_used


def test_zeta_classical_weight_converges_near_zero():
    model = default_model(2, 0, 0.5)
    res = zeta(model, 0.1, weight="classical", tol=1e-8)
    assert res.converged
    assert res.value > 0


def test_zeta_count_weight():
    model = default_model(2, 0, 0.5)
    res = zeta(model, 1.0, weight="count")
    assert res.converged
    # 4 towers of sum_m q^(s(m+1)) modulo the qnumber correction
    assert res.value > 0


def test_zeta_argument_validation():
    model = default_model(2, 0, 0.5)
    with pytest.raises(DomainError):
        zeta(model, -1.0)
    with pytest.raises(DomainError):
        zeta(model, 5.0, tol=0.0)
    with pytest.raises(DomainError):
        zeta(model, 5.0, max_terms=3)
    with pytest.raises(DomainError):
        zeta(model, 5.0, weight="mystery")
    with pytest.raises(DomainError):
        zeta(model, 5.0, kernel="mystery")


# -- spectral dimension ----------------------------------------------------


def test_spectral_dimension_hits_2l():
    for ell in (1, 2, 3):
        model = default_model(ell, 0, 0.5)
        est = spectral_dimension_estimate(model, weight="qdim")
        assert abs(est - 2 * ell) < 1e-3


def test_spectral_dimension_inverse_weight_same():
    model = default_model(2, 0, 0.5)
    a = spectral_dimension_estimate(model, weight="qdim")
    b = spectral_dimension_estimate(model, weight="qdim-inverse")
    assert abs(a - b) < 1e-9


def test_spectral_dimension_probe_invariance():
    model = default_model(2, 0, 0.5)
    estimates = [
        spectral_dimension_estimate(model, weight="qdim", probe_s=s0)
        for s0 in (1.0, 2.5, 5.0)
    ]
    auto = spectral_dimension_estimate(model, weight="qdim")
    for est in estimates:
        assert abs(est - auto) < 1e-6


def test_spectral_dimension_offset_invariance():
    base = spectral_dimension_estimate(default_model(2, 0, 0.5), weight="qdim")
    shifted = spectral_dimension_estimate(
        default_model(2, 0, 0.5, eig_offset=3, m_start=2), weight="qdim"
    )
    assert abs(base - shifted) < 1e-4
    assert abs(shifted - 4.0) < 1e-3


def test_spectral_dimension_classical_weight_is_zero():
    model = default_model(2, 0, 0.5)
    est = spectral_dimension_estimate(model, weight="classical")
    assert abs(est) < 0.05


def test_spectral_dimension_estimation_error_diagnostics():
    model = default_model(2, 0, 0.95)
    with pytest.raises(EstimationError) as err:
        spectral_dimension_estimate(model, weight="qdim", max_terms=10)
    assert "tower_k" in err.value.diagnostics


def test_spectral_dimension_probe_validation():
    model = default_model(2, 0, 0.5)
    with pytest.raises(DomainError):
        spectral_dimension_estimate(model, probe_s=-1.0)


# -- toy tower -------------------------------------------------------------


def test_toy_zeta_matches_closed_form():
    ell, q = 2, 0.5
    model = toy_model(ell, q)
    w = toy_weight(ell, q)
    for gap in (0.05, 0.17, 0.5, 1.0, 2.0, 3.0):
        s = 2 * ell + gap
        res = zeta(model, s, weight=w, kernel="pure", tol=1e-13)
        assert res.converged
        ref = toy_zeta_closed_form(ell, q, s)
        assert math.isclose(res.value, ref, rel_tol=1e-12)


def test_toy_closed_form_validates_domain():
    with pytest.raises(DomainError):
        toy_zeta_closed_form(2, 0.5, 4.0)
    with pytest.raises(DomainError):
        toy_zeta_closed_form(2, 0.5, 3.0)


def test_toy_residue_matches_log_inverse_q():
    for q in (0.3, 0.5, 0.8):
        rr = residue_limit(
            toy_model(2, q), 4, weight=toy_weight(2, q), kernel="pure", tol=1e-13
        )
        assert abs(rr.value - 1.0 / math.log(1.0 / q)) < 1e-8


# -- residues ---------------------------------------------------------------


def test_residue_positive_and_stable():
    model = default_model(2, 0, 0.5)
    rr = residue_limit(model, 4, weight="qdim")
    assert rr.value > 0
    d = rr.richardson_diagonal
    assert abs(d[-1] - d[-2]) / abs(d[-1]) < 1e-4


def test_residue_kernel_independent():
    model = default_model(2, 0, 0.5)
    shifted = residue_limit(model, 4, weight="qdim", kernel="shifted")
    pure = residue_limit(model, 4, weight="qdim", kernel="pure")
    assert math.isclose(shifted.value, pure.value, rel_tol=1e-5)


def test_residue_requires_halving_epsilons():
    model = default_model(2, 0, 0.5)
    with pytest.raises(DomainError):
        residue_limit(model, 4, epsilons=(0.2, 0.15, 0.1))
    with pytest.raises(DomainError):
        residue_limit(model, 4, epsilons=(0.2,))


def test_residue_propagates_divergence():
    model = default_model(2, 0, 0.5)
    with pytest.raises(EstimationError):
        residue_limit(model, 3.0, weight="qdim", max_terms=2000)


def test_classical_weight_scaled_values_grow_at_zero():
    """eps * zeta(eps) for the plain-dimension weight has no finite limit:
    the scaled values grow by roughly 2^(2l - 1) per halving."""
    model = default_model(2, 0, 0.5)
    rr = residue_limit(model, 0.0 + 1e-12, weight="classical", tol=1e-8)
    vals = rr.scaled_values
    assert all(b > 4 * a for a, b in zip(vals, vals[1:]))
