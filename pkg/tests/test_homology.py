import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import regular_algebra
from hopfcyc.cyclic.homology import (
    GradedComplex,
    connes_B,
    connes_complex,
    cyclic_bar_construction,
    cyclic_from_cyclic_module,
    hochschild_b,
    mixed_complex,
    tot_and_homology,
)
from hopfcyc.cyclic.hopf_cyclic import build_T, cyclic_structure, hopf_bialgebra


def test_ground_field(ground):
    X = cyclic_bar_construction(regular_algebra(ground), 7)
    result = cyclic_from_cyclic_module(X)
    assert result.reliable == 6
    assert [result.dims[n] for n in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert [result.hochschild[n] for n in range(7)] == [1, 0, 0, 0, 0, 0, 0]
    assert set(result.paths) == {"bicomplex", "mixed", "connes"}
    assert result.paths_agree


def test_group_algebra_of_order_two(kc2):
    X = cyclic_bar_construction(regular_algebra(kc2), 3)
    result = cyclic_from_cyclic_module(X)
    assert [result.dims[n] for n in range(3)] == [2, 0, 2]
    assert result.paths_agree
    assert len(result.table().rows()) == 3


def test_degree_zero_is_the_commutator_quotient(sweedler):
    X = cyclic_bar_construction(regular_algebra(sweedler), 2)
    result = cyclic_from_cyclic_module(X)
    # [x, g] = -2gx and [gx, g] = -2x span the commutators
    assert result.dims[0] == 2
    assert result.hochschild[0] == 2
    assert result.paths_agree


def test_mixed_complex_identities(kc3):
    mixed = mixed_complex(cyclic_bar_construction(regular_algebra(kc3), 3))
    assert mixed.identities() == {
        "b∘b = 0": True,
        "B∘B = 0": True,
        "b∘B + B∘b = 0": True,
    }
    assert mixed.bicomplex().anticommutes()
    assert mixed.total().squares_to_zero()


def test_prime_field_skips_the_quotient_complex(f2c2):
    X = cyclic_bar_construction(regular_algebra(f2c2), 3)
    result = cyclic_from_cyclic_module(X)
    assert set(result.paths) == {"bicomplex", "mixed"}
    assert result.paths_agree
    with pytest.raises(ValueError):
        connes_complex(X)


def test_homology_of_the_upgraded_T(kc2_defs):
    A = kc2_defs.get("A", "algebra")
    T = build_T(A, kc2_defs.get("A_k", "stable"), 3)
    upgrade = cyclic_structure(T, hopf_bialgebra(A))
    result = cyclic_from_cyclic_module(upgrade.structure)
    assert result.dims[0] == 2
    assert result.paths_agree


def test_graded_complex_homology(QQ_field):
    K = QQ_field.domain
    d1 = el.from_entries({(0, 0): K.one, (0, 1): K.one}, (1, 2), K)
    d2 = el.from_entries({(0, 0): K.one, (1, 0): -K.one}, (2, 1), K)
    complex_ = GradedComplex(K, (1, 2, 1), {1: d1, 2: d2})
    assert complex_.squares_to_zero()
    assert complex_.homology() == {0: 0, 1: 0}


def test_hochschild_differential(kc2):
    a = regular_algebra(kc2)
    assert el.is_zero(hochschild_b(a, 1) * hochschild_b(a, 2))
    with pytest.raises(ValueError):
        hochschild_b(a, 0)


def test_too_few_degrees(ground):
    X = cyclic_bar_construction(regular_algebra(ground), 0)
    with pytest.raises(ValueError):
        cyclic_from_cyclic_module(X)


def test_total_complex_homology(QQ_field, ground):
    K = QQ_field.domain
    one = el.identity(1, K)
    broken = GradedComplex(K, (1, 1, 1), {1: one, 2: one})
    assert not broken.squares_to_zero()
    mixed = mixed_complex(cyclic_bar_construction(regular_algebra(ground), 2))
    assert tot_and_homology(mixed, 2) == {0: 1, 1: 0}


def test_connes_operator_squares_to_zero(kc3):
    X = cyclic_bar_construction(regular_algebra(kc3), 3)
    for n in range(2):
        assert el.is_zero(connes_B(X, n + 1) * connes_B(X, n))
