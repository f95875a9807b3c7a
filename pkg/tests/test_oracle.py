"""Weight multiplicity oracles: pattern enumeration vs recursive method."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qspec.errors import DomainError, ResourceLimitError
from qspec.oracle import (
    DEFAULT_PATTERN_CAP,
    WeightMultiplicityTable,
    char_at_k2rho,
    dominant_representative,
    gt_patterns,
    multiplicities_freudenthal,
    multiplicities_gt,
    pattern_weight,
    resolve_pattern_cap,
    to_partition,
    weyl_orbit,
)
from qspec.qdim import classical_dim, quantum_dim

dominant = st.integers(1, 3).flatmap(
    lambda ell: st.tuples(*([st.integers(0, 2)] * ell))
)


def test_to_partition():
    assert to_partition(2, (1, 1)) == (2, 1, 0)
    assert to_partition(3, (1, 0, 1)) == (2, 1, 1, 0)
    assert to_partition(2, (0, 0)) == (0, 0, 0)


def test_pattern_count_is_classical_dimension():
    for ell, lam in [(1, (3,)), (2, (1, 1)), (2, (2, 0)), (3, (1, 0, 1))]:
        count = sum(1 for _ in gt_patterns(ell, lam))
        assert count == classical_dim(ell, lam)


def test_maximal_pattern_carries_highest_weight():
    """The pattern repeating the top row prefixes must weigh the highest weight."""
    for ell, lam in [(1, (2,)), (2, (1, 1)), (2, (2, 1)), (3, (1, 0, 1))]:
        top = to_partition(ell, lam)
        maximal = tuple(top[: ell + 1 - k] for k in range(ell + 1))
        assert pattern_weight(maximal) == lam


def test_rank_one_weights_are_ladder():
    table = multiplicities_gt(1, (3,))
    assert table.entries == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}


def test_adjoint_multiplicities():
    su3 = multiplicities_gt(2, (1, 1))
    assert su3.multiplicity((0, 0)) == 2
    assert su3.total() == 8
    su4 = multiplicities_gt(3, (1, 0, 1))
    assert su4.multiplicity((0, 0, 0)) == 3
    assert su4.total() == 15


@given(dominant)
@settings(max_examples=40, deadline=None)
def test_methods_agree(lam):
    ell = len(lam)
    assert multiplicities_gt(ell, lam) == multiplicities_freudenthal(ell, lam)


def test_methods_agree_on_lattice():
    for ell in (1, 2):
        for lam in itertools.product(range(3), repeat=ell):
            gt = multiplicities_gt(ell, lam)
            fr = multiplicities_freudenthal(ell, lam)
            assert gt == fr, f"mismatch at rank {ell} weight {lam}"
            assert gt.total() == classical_dim(ell, lam)


def test_weights_symmetric_under_longest_reflection():
    """mu -> -reversed(mu) permutes the weight set of one module."""
    table = multiplicities_gt(2, (2, 1))
    for mu, mult in table.entries.items():
        flipped = tuple(-c for c in reversed(mu))
        assert table.multiplicity(flipped) == mult


def test_dual_module_weights_are_reversed():
    table = multiplicities_gt(2, (2, 1))
    dual = multiplicities_gt(2, (1, 2))
    for mu, mult in table.entries.items():
        assert dual.multiplicity(tuple(reversed(mu))) == mult


def test_char_at_k2rho_equals_quantum_dim():
    for ell, lam in [(1, (4,)), (2, (1, 1)), (2, (2, 1)), (3, (1, 1, 1))]:
        assert char_at_k2rho(ell, lam, sign=1) == quantum_dim(ell, lam).exact
        assert char_at_k2rho(ell, lam, sign=-1) == quantum_dim(ell, lam).exact


def test_char_sign_validation():
    with pytest.raises(DomainError):
        char_at_k2rho(2, (1, 0), sign=2)


def test_dominant_representative():
    assert dominant_representative((1, 1)) == (1, 1)
    assert dominant_representative((-1, 2)) == (1, 1)
    assert dominant_representative((2, -1)) == (1, 1)
    assert dominant_representative((0, 0)) == (0, 0)


def test_weyl_orbit_sizes():
    assert len(weyl_orbit((0, 0))) == 1
    assert len(weyl_orbit((1, 1))) == 6
    assert len(weyl_orbit((1, 0))) == 3


def test_orbit_members_share_representative():
    for member in weyl_orbit((2, 1)):
        assert dominant_representative(member) == (2, 1)


def test_table_json_roundtrip():
    table = multiplicities_gt(2, (1, 1))
    clone = WeightMultiplicityTable.from_json_dict(table.to_json_dict())
    assert clone == table


def test_pattern_cap_enforced():
    with pytest.raises(ResourceLimitError):
        multiplicities_gt(2, (1, 1), cap=5)
    # cap generous enough passes
    assert multiplicities_gt(2, (1, 1), cap=8).total() == 8


def test_pattern_cap_from_environment(monkeypatch):
    monkeypatch.setenv("QSPEC_MAX_PATTERNS", "5")
    assert resolve_pattern_cap(None) == 5
    with pytest.raises(ResourceLimitError):
        multiplicities_gt(2, (1, 1))
    monkeypatch.delenv("QSPEC_MAX_PATTERNS")
    assert resolve_pattern_cap(None) == DEFAULT_PATTERN_CAP
    assert resolve_pattern_cap(77) == 77


def test_invalid_environment_cap(monkeypatch):
    monkeypatch.setenv("QSPEC_MAX_PATTERNS", "not-a-number")
    with pytest.raises(DomainError):
        resolve_pattern_cap(None)


def test_freudenthal_rejects_non_dominant():
    with pytest.raises(DomainError):
        multiplicities_freudenthal(2, (-1, 0))
