import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.comod import ColinearMap, regular, trivial, validate_comodule
from hopfcyc.algebra.hopf_core import IntegralData, cofrobenius_data
from hopfcyc.algebra.stable_cat import (
    cofree_desuspension,
    cofree_suspension,
    desuspend,
    desuspension_of_suspension_comparison,
    is_stable_equivalence,
    mapping_cocylinder,
    mapping_cylinder,
    stable_hom,
    stably_trivial,
    suspend,
    suspension_comparison,
    triangle,
)


@pytest.fixture
def k(f2c2_dual):
    return trivial(f2c2_dual)


@pytest.fixture
def free(f2c2_dual):
    return regular(f2c2_dual, name="free")


def test_stable_endomorphisms_of_the_ground_field(k):
    space = stable_hom(k, k)
    assert space.ambient_dim == 1
    assert space.trivial_dim == 0
    assert space.quotient_dim == 1
    assert not space.is_trivial(k.identity())


def test_maps_out_of_an_injective_are_stably_trivial(k, free):
    space = stable_hom(free, k)
    assert space.ambient_dim == 1
    assert space.quotient_dim == 0
    for g in space.trivial_maps():
        assert stably_trivial(ColinearMap(free, k, g))


def _colinear(defs, name):
    named = defs.get(name, "map")
    return ColinearMap(
        defs.get(named.source, "comodule"), defs.get(named.target, "comodule"), named.matrix
    )


def test_augmentation_is_not_a_stable_equivalence(f2c2_defs):
    f = _colinear(f2c2_defs, "augment")
    assert f.is_colinear()
    assert not is_stable_equivalence(f)


def test_identity_is_a_stable_equivalence(k):
    result = is_stable_equivalence(ColinearMap(k, k, k.identity()))
    assert result.equivalence
    assert el.is_identity(result.inverse)


def test_every_map_is_an_equivalence_when_comodules_are_injective(kc2):
    k = trivial(kc2)
    zero = ColinearMap(k, regular(kc2), el.zeros(2, 1, kc2.K))
    assert is_stable_equivalence(zero)
    assert stable_hom(regular(kc2), regular(kc2)).quotient_dim == 0


def test_suspension_sequences_are_exact(k, free):
    for M in (k, free):
        up = suspend(M)
        down = desuspend(M)
        assert up.is_exact() and down.is_exact()
        assert validate_comodule(up.object).ok
        assert validate_comodule(down.object).ok
        assert el.is_identity(down.projection * down.section)
    assert suspend(k).object.dim == 1
    assert desuspend(k).object.dim == 1


def test_unit_into_double_shift_is_an_equivalence(k):
    unit = desuspension_of_suspension_comparison(k)
    assert unit.is_colinear()
    assert is_stable_equivalence(unit)
    twice = suspend(k).object
    unit = desuspension_of_suspension_comparison(twice)
    assert is_stable_equivalence(unit)


def test_suspension_matches_the_cofree_shift(k, f2c2_defs):
    for M in (k, f2c2_defs.get("free", "comodule")):
        comparison = suspension_comparison(M)
        assert comparison.is_colinear()
        assert el.rank(comparison.matrix) == comparison.source.dim
        assert comparison.target.dim == cofree_suspension(M).object.dim


def test_cofree_desuspension_is_exact(k):
    shift = cofree_desuspension(k)
    assert shift.is_exact()
    assert validate_comodule(shift.object).ok
    assert shift.object.dim == desuspend(k).object.dim


def test_element_with_vanishing_integral_is_rejected(kc2):
    data = cofrobenius_data(kc2)
    bad = IntegralData(
        left=data.left,
        right=data.right,
        x_index=1,
        x=kc2.basis_vector("g"),
        is_cofrobenius=True,
    )
    with pytest.raises(ValueError):
        desuspend(trivial(kc2), bad)
    with pytest.raises(ValueError):
        mapping_cocylinder(ColinearMap(trivial(kc2), trivial(kc2), trivial(kc2).identity()), bad)
    # the suspension uses only the unit of H
    assert suspend(trivial(kc2)).object.dim == 1


def test_cylinder_and_cocylinder(f2c2_defs):
    f = _colinear(f2c2_defs, "augment")
    cylinder = mapping_cylinder(f)
    assert cylinder.is_exact()
    assert cylinder.is_split()
    assert validate_comodule(cylinder.object).ok
    cocylinder = mapping_cocylinder(f)
    assert cocylinder.is_exact()
    assert cocylinder.is_split()
    assert validate_comodule(cocylinder.object).ok


def test_triangle_composites_are_stably_trivial(k, free):
    f = ColinearMap(k, k, k.identity())
    assert all(triangle(f).check().values())
    g = ColinearMap(free, k, stable_hom(free, k).ambient[0])
    assert all(triangle(g).check().values())
