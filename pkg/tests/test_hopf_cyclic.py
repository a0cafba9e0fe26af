from dataclasses import replace

import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import regular_amodule
from hopfcyc.algebra.hopf_core import StructureError
from hopfcyc.cyclic.cyclic_cat import check_identities, cyclic_identities, identity_defect
from hopfcyc.cyclic.hopf_cyclic import (
    DEGREE_LIMIT,
    build_T,
    characteristic_map,
    coapproximation,
    coapproximation_oracle,
    coefficients,
    coinvariant_part,
    cyclic_structure,
    hopf_bialgebra,
    hopf_module_vanishing_check,
    regular_pair,
    trivial_pair,
    validate_stable_pair,
    verify_pseudo_para_cyclic,
)
from hopfcyc.library import load


@pytest.fixture(scope="module")
def A(kc2_defs):
    return kc2_defs.get("A", "algebra")


def _para_defects(T, n):
    return [
        identity_defect(identity, T)
        for identity in cyclic_identities(n, T.max_degree, families=["para"])
    ]


def test_bundled_pairs_are_stable(kc2_defs, sweedler_defs):
    for defs, name in [(kc2_defs, "A_k"), (kc2_defs, "A_coeff"), (sweedler_defs, "S_coeff")]:
        pair = defs.get(name, "stable")
        assert pair.is_stable()
        assert validate_stable_pair(pair).ok


def test_T_dimensions_and_colinearity(A, kc2_defs):
    pair = kc2_defs.get("A_coeff", "stable")
    T = build_T(A, pair, 3)
    assert T.dims == (4, 8, 16, 32)
    assert not T.colinearity_failures
    assert [row["dim"] for row in T.table().rows()] == [4, 8, 16, 32]


def test_T_is_pseudo_para_cyclic(kc2_defs, sweedler_defs):
    for defs, algebra, pair in [
        (kc2_defs, "A", "A_k"),
        (kc2_defs, "A", "A_coeff"),
        (sweedler_defs, "S", "S_coeff"),
    ]:
        T = build_T(defs.get(algebra, "algebra"), defs.get(pair, "stable"), 2)
        assert verify_pseudo_para_cyclic(T).pseudo_para, pair


def test_last_face_defect_depends_on_the_coaction(sweedler_defs):
    S = sweedler_defs.get("S", "algebra")
    T_coeff = build_T(S, sweedler_defs.get("S_coeff", "stable"), 2)
    report = verify_pseudo_para_cyclic(T_coeff)
    assert not report.para
    assert any(not el.is_zero(D) for D in _para_defects(T_coeff, 1))

    T_k = build_T(S, sweedler_defs.get("S_k", "stable"), 2)
    assert verify_pseudo_para_cyclic(T_k).para
    assert all(el.is_zero(D) for n in range(3) for D in _para_defects(T_k, n))


def test_upgrade_of_a_trivial_coaction_pair(A, kc2_defs):
    pair = kc2_defs.get("A_k", "stable")
    assert pair.has_trivial_coaction()
    T = build_T(A, pair, 3)
    upgrade = cyclic_structure(T, hopf_bialgebra(A))
    assert upgrade.ok, upgrade.reason
    assert all(upgrade.certificates.values())
    assert check_identities(upgrade.structure).ok
    for n in range(4):
        t = upgrade.structure.operators.cyclic[n]
        assert el.is_identity(t * upgrade.structure.operators.cyclic_inverse[n])


def test_upgrade_over_a_prime_field(f2c2_defs):
    A = f2c2_defs.get("A", "algebra")
    T = build_T(A, f2c2_defs.get("A_k", "stable"), 2)
    upgrade = cyclic_structure(T, hopf_bialgebra(A))
    assert upgrade.ok, upgrade.reason
    assert upgrade.certificates == {
        "stability": True,
        "inverse": True,
        "inverse_colinear": True,
        "order": True,
        "identities": True,
    }


def test_parallel_assembly_gives_the_same_operators(sweedler_defs):
    S = sweedler_defs.get("S", "algebra")
    pair = sweedler_defs.get("S_coeff", "stable")
    serial = build_T(S, pair, 2, jobs=1)
    parallel = build_T(S, pair, 2, jobs=4)
    assert parallel.dims == serial.dims
    for n in range(3):
        assert el.equal(parallel.operators.cyclic[n], serial.operators.cyclic[n])
        assert el.equal(parallel.comodules[n].coaction, serial.comodules[n].coaction)
    assert serial.operators.faces.keys() == parallel.operators.faces.keys()
    for key, matrix in serial.operators.faces.items():
        assert el.equal(parallel.operators.faces[key], matrix), key
    assert serial.operators.degeneracies.keys() == parallel.operators.degeneracies.keys()
    for key, matrix in serial.operators.degeneracies.items():
        assert el.equal(parallel.operators.degeneracies[key], matrix), key


def test_non_stable_pair_is_refused(fixture_path):
    defs = load(fixture_path("nonstable_pair.alg"))
    A = defs.get("A", "algebra")
    pair = defs.get("A_reg", "stable")
    assert not pair.is_stable()
    assert "stability" in validate_stable_pair(pair).failures
    T = build_T(A, pair, 2)
    upgrade = cyclic_structure(T, hopf_bialgebra(A))
    assert not upgrade.ok
    assert upgrade.reason.startswith("stability violated")
    assert upgrade.certificates["inverse"]
    assert not upgrade.certificates["order"]


def test_T_rejects_mismatched_inputs(A, kc2_defs, sweedler_defs):
    with pytest.raises(ValueError):
        build_T(A, sweedler_defs.get("S_k", "stable"), 2)
    with pytest.raises(ValueError):
        build_T(A, kc2_defs.get("A_k", "stable"), DEGREE_LIMIT + 1)
    broken = replace(regular_pair(A), action=None)
    with pytest.raises(StructureError):
        build_T(A, broken, 1)


def test_coapproximation_matches_the_oracle(A, kc2_defs):
    T = build_T(A, kc2_defs.get("A_coeff", "stable"), 2)
    Q = coapproximation(T)
    oracle = coapproximation_oracle(T)
    for n in range(3):
        assert el.same_span(Q.inclusions[n], oracle[n]), n
        assert Q.dims[n] < T.dims[n]
    assert Q.dims == (2, 4, 8)
    assert Q.structure.provisional == (2,)
    assert check_identities(Q.structure).ok
    again = coapproximation(Q.structure)
    assert again.dims == Q.dims
    assert len(Q.table(T).rows()) == 3


def test_coapproximation_of_a_cyclic_T_is_everything(A, kc2_defs):
    T = build_T(A, trivial_pair(A), 2)
    Q = coapproximation(T)
    assert Q.dims == T.dims
    assert Q.sweeps == 1


def test_coinvariant_part_is_cyclic(A, kc2_defs):
    T = build_T(A, coefficients(A), 2)
    Q = coapproximation(T)
    part, bases = coinvariant_part(Q.structure)
    assert check_identities(part).ok
    assert all(bases[n].shape[1] == part.dims[n] for n in range(3))


def test_characteristic_map(A):
    charmap = characteristic_map(hopf_bialgebra(A), 2)
    assert charmap.commutes
    assert charmap.colinear
    assert charmap.coinvariant_commutes
    # the unit k → A is injective, so is every component
    for n, component in charmap.components.items():
        assert el.rank(component) == component.shape[1]


def test_hopf_module_vanishing(kc2_defs, A):
    for name in ("hm", "hfree"):
        check = hopf_module_vanishing_check(kc2_defs.get(name, "module"), 2)
        assert check.applicable
        assert check.holds
    check = hopf_module_vanishing_check(regular_amodule(A), 2)
    assert not check.applicable
    assert not check.holds
