import pytest

from hopfcyc import library
from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.hopf_core import validate_hopf
from hopfcyc.cli.definitions import DefinitionError, load, parse, serialize

KC2 = """\
field rational

hopf kc2
basis e g
unit = 1 e
mult e e = 1 e
mult e g = 1 g
mult g e = 1 g
mult g g = 1 e
comult e = 1 e*e
comult g = 1 g*g
counit e = 1
counit g = 1
antipode e = 1 e
antipode g = 1 g
end
"""


def test_bundled_files_load_and_validate():
    names = library.bundled_names()
    assert {"kc2", "kc3", "f2c2", "sweedler", "ground_field"} <= set(names)
    for name in names:
        defs = library.load_bundled(name)
        for hopf in defs.names("hopf"):
            assert validate_hopf(defs.get(hopf, "hopf")).ok, (name, hopf)


def test_serialization_is_canonical():
    for name in library.bundled_names():
        defs = library.load_bundled(name)
        text = serialize(defs)
        again = parse(text)
        assert serialize(again) == text
        for hopf in defs.names("hopf"):
            first, second = defs.get(hopf), again.get(hopf)
            assert el.equal(first.mult, second.mult)
            assert el.equal(first.comult, second.comult)


def test_terms_are_merged_in_basis_order():
    text = KC2.replace("comult g = 1 g*g", "comult g = 1 g*g + 2 e*g - 2 e*g")
    text = text.replace("mult g g = 1 e", "mult g g = 1/2 e + 1/2 e")
    out = serialize(parse(text))
    assert "comult g = 1 g*g\n" in out
    assert "mult g g = 1 e\n" in out
    assert out.startswith("field rational\n")


def test_missing_entries_are_zero():
    defs = parse("hopf h\nbasis a b\nunit = 1 a\nend\n")
    h = defs.get("h", "hopf")
    assert el.is_zero(h.mult)
    assert h.mult.shape == (2, 4)
    assert not validate_hopf(h).ok


def test_field_override():
    defs = parse(KC2, field_override="prime:3")
    assert defs.field.characteristic == 3
    assert serialize(defs).startswith("field prime 3\n")


def test_syntax_error_position(fixture_path):
    with pytest.raises(DefinitionError) as error:
        load(fixture_path("bad_syntax.alg"))
    assert error.value.line == 6
    assert error.value.column == 16
    assert "dangling sign" in str(error.value)
    assert str(error.value).startswith("line 6, column 16: ")


@pytest.mark.parametrize(
    "text,message",
    [
        ("hopf h\nbasis e\nfoo e = 1 e\nend\n", "unknown key 'foo'"),
        ("hopf h\nbasis e\nmult e = 1 e\nend\n", "'mult' takes 2 basis labels"),
        ("hopf h\nbasis e\nunit 1 e\nend\n", "expected '='"),
        ("hopf h\nbasis e\n", "is not closed by 'end'"),
        ("group g\n", "unknown declaration 'group'"),
        ("comodule k = cofree kc2\n", "unknown comodule constructor"),
        ("hopf h\nbasis e\nunit = 1 e e\nend\n", "expected '+' or '-'"),
        ("hopf h\nbasis e\nunit = 1 e *\nend\n", "dangling '*'"),
        ("hopf h\nbasis e\nunit = 1 e ?\nend\n", "unexpected character '?'"),
        ("field real\n", "field"),
    ],
)
def test_syntax_errors(text, message):
    with pytest.raises(DefinitionError) as error:
        parse(text)
    assert message in str(error.value)
    assert error.value.line is not None


def test_semantic_errors_name_the_object():
    with pytest.raises(DefinitionError) as error:
        parse(KC2 + "comodule k = trivial nothing\n")
    assert error.value.name == "k"
    assert "undeclared 'nothing'" in str(error.value)

    with pytest.raises(DefinitionError) as error:
        parse(KC2 + "comodule reg = regular kc2\ncomodule k = trivial reg\n")
    assert error.value.name == "reg"
    assert "not a hopf" in str(error.value)

    with pytest.raises(DefinitionError) as error:
        parse(KC2 + "comodule kc2 = regular kc2\n")
    assert "declared twice" in str(error.value)

    with pytest.raises(DefinitionError) as error:
        parse(KC2.replace("mult g g = 1 e", "mult g x = 1 e"))
    assert "'x' is not a basis label" in str(error.value)


def test_scalars_outside_the_field():
    with pytest.raises(DefinitionError) as error:
        parse(KC2.replace("counit g = 1", "counit g = 1/3"), field_override="prime 3")
    assert error.value.line is not None


def test_lookup_errors(kc2_defs):
    with pytest.raises(DefinitionError):
        kc2_defs.get("missing")
    with pytest.raises(DefinitionError):
        kc2_defs.get("kc2", "comodule")
    assert kc2_defs.first("map") == "unit"
    assert kc2_defs.comodule_of("A").dim == 2
    with pytest.raises(DefinitionError):
        kc2_defs.comodule_of("kc2")


def test_unknown_bundled_file():
    with pytest.raises(DefinitionError):
        library.resolve("no_such_algebra")
    assert library.resolve("kc2").endswith("kc2.alg")
