import pytest

from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.amod import regular_algebra
from hopfcyc.cyclic.cyclic_cat import (
    TAGS,
    check_identities,
    compose,
    cyclic,
    cyclic_identities,
    degeneracy,
    equivalent,
    evaluate,
    face,
    normalize,
    paracyclic_from_t,
    parse_word,
    random_word,
    word,
)
from hopfcyc.cyclic.homology import cyclic_bar_construction


@pytest.fixture(scope="module")
def bar(kc2):
    X = cyclic_bar_construction(regular_algebra(kc2), 3)
    return X.operators.with_inverse()


@pytest.fixture(scope="module")
def deep_bar(kc2):
    X = cyclic_bar_construction(regular_algebra(kc2), 6)
    return X.operators.with_inverse()


def test_parse_and_print():
    w = parse_word("d1@3 . t@3 . s0@2")
    assert w.source == 2
    assert w.target == 2
    assert str(w) == "d1@3 . t@3 . s0@2"
    assert parse_word("id@4").source == 4
    assert len(parse_word("id@4")) == 0


@pytest.mark.parametrize(
    "text,tag",
    [
        ("d3@2", "lambda"),
        ("d0@2 . d0@2", "lambda"),
        ("s0@1 . s0@0 . x@1", "lambda"),
        ("t@2", "delta"),
        ("t^-1@2", "lambda_nat"),
        ("d2@2", "lambda_plus"),
        ("", "lambda"),
        ("d0@1", "nabla"),
    ],
)
def test_malformed_words_are_rejected(text, tag):
    with pytest.raises(ValueError):
        parse_word(text, tag)


def test_cyclic_rewrites():
    assert equivalent(parse_word("d0@1 . t@1"), parse_word("d1@1"))
    assert equivalent(parse_word("d2@3 . t@3"), parse_word("t@2 . d1@3"))
    assert equivalent(parse_word("s0@1 . t@1"), parse_word("t@2 . t@2 . s1@1"))
    assert equivalent(parse_word("t^-1@2"), parse_word("t@2 . t@2"))
    assert not equivalent(parse_word("d0@2"), parse_word("d1@2"))


def test_cyclic_power_is_reduced_only_in_the_cyclic_category():
    text = " . ".join(["t@2"] * 4)
    assert normalize(parse_word(text)).cyclic_power == 1
    assert normalize(parse_word(text, "lambda_infty")).cyclic_power == 4
    assert normalize(parse_word("t@2 . t^-1@2", "lambda_infty")).is_identity()


def test_normal_form_shape():
    nf = normalize(parse_word("s0@1 . d0@2 . s1@1 . d2@2"))
    assert list(nf.faces) == sorted(nf.faces, reverse=True)
    assert list(nf.degeneracies) == sorted(nf.degeneracies)
    assert len(set(nf.faces)) == len(nf.faces)
    assert normalize(nf.word()) == nf


def test_compose_widens_the_tag():
    w = compose(parse_word("d0@1", "delta"), parse_word("s0@0", "delta"))
    assert w.tag == "delta"
    assert normalize(w).is_identity()
    w = compose(parse_word("t@1", "lambda_nat"), parse_word("s0@0", "delta"))
    assert w.tag == "lambda_nat"
    with pytest.raises(ValueError):
        compose(parse_word("d0@1"), parse_word("d0@1"))


def test_word_builder():
    w = word(face(0, 2), cyclic(2), degeneracy(1, 1))
    assert w.source == 1 and w.target == 1
    assert word(source=3).source == 3
    with pytest.raises(ValueError):
        word()


def test_rewriting_is_bounded():
    w = parse_word(" . ".join(["t@3"] * 3 + ["d0@4", "s0@3"] * 3))
    with pytest.raises(RuntimeError):
        normalize(w, max_steps=1)


def test_cyclic_bar_construction_satisfies_every_identity(bar):
    report = check_identities(bar)
    assert report.ok, report.failed[:3]
    assert set(report.by_family) == {"simplicial", "pseudo_para", "para", "cyclic"}
    assert report.family_ok("cyclic")


def test_identity_lists_respect_the_degree_bound():
    for n in range(4):
        for identity in cyclic_identities(n, 3):
            assert identity.lhs.source == identity.rhs.source == n
            assert identity.lhs.target == identity.rhs.target
    assert not cyclic_identities(0, 0, families=["para"])


@pytest.mark.parametrize("tag", TAGS)
def test_normal_forms_evaluate_like_the_words(deep_bar, rng, tag):
    for _ in range(40):
        w = random_word(rng, 6, int(rng.integers(0, 21)), tag)
        nf = normalize(w)
        assert el.equal(evaluate(nf.word(), deep_bar), evaluate(w, deep_bar)), str(w)


def test_evaluation_outside_the_built_range(bar):
    with pytest.raises(ValueError):
        evaluate(parse_word("s0@3"), bar)
    with pytest.raises(ValueError):
        evaluate(parse_word("d0@5"), bar)


def test_paracyclic_structure_from_generators(bar):
    d0 = {n: bar.faces[(0, n)] for n in range(1, 4)}
    s0 = {n: bar.degeneracies[(0, n)] for n in range(3)}
    verdict = paracyclic_from_t(d0, s0, dict(bar.cyclic), bar.K)
    assert verdict.holds
    for key, matrix in bar.faces.items():
        assert el.equal(verdict.family.faces[key], matrix)
