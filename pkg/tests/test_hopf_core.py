from dataclasses import replace

import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.hopf_core import (
    AXIOMS,
    StructureError,
    cofrobenius_data,
    dual_hopf,
    group_algebra,
    integral_space,
    left_integral_holds,
    require_valid,
    right_integral_holds,
    validate_hopf,
)


def test_bundled_hopf_algebras_are_valid(bundled_hopf_algebras):
    for name, h in bundled_hopf_algebras.items():
        report = validate_hopf(h)
        assert report.ok, (name, report.failures, report.shape_errors)


def test_axiom_names_are_the_eight_identities():
    assert len(AXIOMS) == 8
    assert "counitality" in AXIOMS
    assert "antipode_right" in AXIOMS


def test_corrupted_counit_is_named(kc2):
    broken = replace(kc2, counit=el.from_entries({(0, 0): kc2.K.one}, (1, 2), kc2.K))
    report = validate_hopf(broken)
    assert not report.ok
    assert "counitality" in report.failures
    with pytest.raises(StructureError) as error:
        require_valid(broken)
    assert "counitality" in str(error.value)


def test_corrupted_antipode_is_named(kc3):
    broken = replace(kc3, antipode=kc3.identity())
    report = validate_hopf(broken)
    assert report.failures == ["antipode_left", "antipode_right"]


def _table(h, entries, shape):
    return el.from_entries({key: h.K.convert(v) for key, v in entries.items()}, shape, h.K)


def _nonassociative(h):
    # kC3 with g·g = e instead of g2
    d = h.dim
    entries = {((i + j) % d, d * i + j): 1 for i in range(d) for j in range(d)}
    del entries[(2, 4)]
    entries[(0, 4)] = 1
    return replace(h, mult=_table(h, entries, (d, d * d)))


CORRUPTIONS = {
    "associativity": ("kc3", _nonassociative),
    "unitality": ("kc2", lambda h: replace(h, unit=h.basis_vector("g"))),
    # Δ(g) = g⊗g + e⊗e
    "coassociativity": (
        "kc2",
        lambda h: replace(h, comult=_table(h, {(0, 0): 1, (3, 1): 1, (0, 1): 1}, (4, 2))),
    ),
    "counitality": ("kc2", lambda h: replace(h, counit=_table(h, {(0, 0): 1, (0, 1): -1}, (1, 2)))),
    # Δ(g) = 0
    "comultiplication_multiplicative": (
        "kc2",
        lambda h: replace(h, comult=_table(h, {(0, 0): 1}, (4, 2))),
    ),
    "counit_multiplicative": ("kc2", lambda h: replace(h, counit=_table(h, {(0, 0): 1}, (1, 2)))),
    "antipode_left": ("kc3", lambda h: replace(h, antipode=h.identity())),
    "antipode_right": ("kc3", lambda h: replace(h, antipode=h.identity())),
}


def test_every_axiom_has_a_corruption():
    assert set(CORRUPTIONS) == set(AXIOMS)


@pytest.mark.parametrize("axiom", AXIOMS)
def test_corrupted_table_names_its_axiom(request, axiom):
    hopf_name, corrupt = CORRUPTIONS[axiom]
    h = request.getfixturevalue(hopf_name)
    report = validate_hopf(corrupt(h))
    assert not report.shape_errors
    assert axiom in report.failures, report.failures


def test_shape_errors_are_reported_separately(kc2):
    broken = replace(kc2, unit=el.zeros(3, 1, kc2.K))
    report = validate_hopf(broken)
    assert report.shape_errors
    assert not report.failures


def test_integral_space_is_one_dimensional(bundled_hopf_algebras):
    for name, h in bundled_hopf_algebras.items():
        basis = integral_space(h)
        assert len(basis) == 1, name
        assert left_integral_holds(h, basis[0])


def test_group_algebra_integral_is_delta_e(kc2):
    (row,) = integral_space(kc2)
    # δ_e, up to scaling
    assert el.entry(row, 0, 1) == 0
    assert el.entry(row, 0, 0) != 0


def test_right_integral_identity(bundled_hopf_algebras):
    for name, h in bundled_hopf_algebras.items():
        data = cofrobenius_data(h)
        assert data.is_cofrobenius
        assert right_integral_holds(h, data.right), name
        assert data.right_at_x


def test_sweedler_integrals_differ(sweedler):
    data = cofrobenius_data(sweedler)
    # the left integral is not a right integral on a non-unimodular dual
    assert not right_integral_holds(sweedler, data.left)
    assert right_integral_holds(sweedler, data.right)


def test_dual_of_dual_has_the_same_tables(kc3):
    double = dual_hopf(dual_hopf(kc3))
    for table in ("mult", "unit", "comult", "counit", "antipode"):
        assert el.equal(getattr(double, table), getattr(kc3, table))


def test_group_algebra_properties(QQ_field):
    h = group_algebra(4, QQ_field)
    assert h.space.labels == ("e", "g", "g2", "g3")
    assert h.is_commutative()
    assert h.is_cocommutative()
    assert validate_hopf(h).ok
