import gc
import weakref
from dataclasses import replace

import pytest

from hopfcyc import library
from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.comod import (
    ColinearMap,
    coinvariants,
    frobenius_generator,
    hom_colinear,
    hstar_equivariant_maps,
    hstar_module_view,
    is_injective,
    quotient_comodule,
    regular,
    subcomodule,
    tensor_diagonal,
    trivial,
    untwist_iso,
    validate_comodule,
)
from hopfcyc.algebra.hopf_core import group_algebra


def test_untwist_is_a_colinear_isomorphism(kc3, rng):
    for i in range(50):
        M = library.random_comodule(kc3, 3, rng, name=f"M{i}")
        assert validate_comodule(M).ok
        forward, backward = untwist_iso(M)
        assert forward.is_colinear()
        assert backward.is_colinear()
        assert el.is_identity((forward @ backward).matrix)
        assert el.is_identity((backward @ forward).matrix)


def test_untwist_over_a_non_commutative_hopf_algebra(sweedler):
    M = tensor_diagonal(regular(sweedler), regular(sweedler))
    assert validate_comodule(M).ok
    forward, backward = untwist_iso(M)
    assert forward.is_colinear()
    assert el.is_identity(forward.matrix * backward.matrix)


def test_bad_coaction_names_counitality(kc2):
    k = trivial(kc2)
    broken = replace(k, coaction=el.scale(k.coaction, kc2.K.convert(2)))
    report = validate_comodule(broken)
    assert report.failures == ["coassociativity", "counitality"]


def test_colinear_maps_from_trivial_into_regular(kc2):
    maps = hom_colinear(trivial(kc2), regular(kc2))
    assert len(maps) == 1
    # lands in k·e
    assert el.entry(maps[0], 1, 0) == 0
    assert el.entry(maps[0], 0, 0) != 0


def test_equivariant_maps_agree_with_colinear_maps(kc2_defs):
    m = kc2_defs.get("m", "comodule")
    reg = kc2_defs.get("reg", "comodule")
    colinear = el.hstack(*[el.vectorize(f) for f in hom_colinear(m, reg)])
    equivariant = el.hstack(*[el.vectorize(f) for f in hstar_equivariant_maps(m, reg)])
    assert el.same_span(colinear, equivariant)


def test_colinear_map_rejects_wrong_shape(kc2):
    with pytest.raises(ValueError):
        ColinearMap(trivial(kc2), regular(kc2), el.identity(2, kc2.K))


def test_group_algebra_comodules_are_injective(kc2, f2c2, rng):
    assert is_injective(trivial(f2c2))
    for _ in range(10):
        M = library.random_comodule(kc2, 4, rng)
        result = is_injective(M)
        assert result.injective
        assert el.is_identity(result.retraction * M.coaction)


def test_trivial_comodule_over_dual_group_algebra_in_char_two(f2c2_dual):
    assert not is_injective(trivial(f2c2_dual))
    assert is_injective(regular(f2c2_dual))


def test_frobenius_generator_exists_for_bundled_algebras(bundled_hopf_algebras):
    for name, h in bundled_hopf_algebras.items():
        assert frobenius_generator(h) is not None, name


def test_frobenius_generator_is_cached_per_live_algebra(QQ_field):
    h = group_algebra(3, QQ_field)
    assert frobenius_generator(h) is frobenius_generator(h)
    alive = weakref.ref(h)
    del h
    gc.collect()
    assert alive() is None


def test_coinvariants_and_subcomodules(kc2):
    reg = regular(kc2)
    fixed = coinvariants(reg)
    assert fixed.shape == (2, 1)
    sub, split = subcomodule(reg, fixed, labels=["e"])
    assert validate_comodule(sub).ok
    assert el.is_identity(split.retraction * fixed)
    quotient, _ = quotient_comodule(reg, fixed)
    assert quotient.dim == 1
    assert validate_comodule(quotient).ok


def test_non_invariant_subspace_is_rejected(f2c2_dual):
    reg = regular(f2c2_dual)
    incl = el.from_entries({(0, 0): f2c2_dual.K.one}, (2, 1), f2c2_dual.K)
    with pytest.raises(ValueError):
        subcomodule(reg, incl)


def test_counit_acts_as_the_identity(kc2, sweedler):
    for h in (kc2, sweedler):
        M = regular(h)
        assert el.is_identity(hstar_module_view(M, h.counit))
