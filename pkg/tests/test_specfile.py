from pathlib import Path

import pytest

from forcinglab.corpus import cohen2
from forcinglab.errors import DuplicateIdError, ParseError, UnknownIdError
from forcinglab.hf import parse_hf
from forcinglab.specfile import format_spec, load_spec, parse_spec

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"

COHEN2 = """
# comment line
poset {
  elements: e a b aa ab ba bb
  order: aa<a ab<a ba<b bb<b a<e b<e
}
name zero { }
name s0 { zero@a }   # trailing comment
name t { zero@e; s0@e }
"""


def test_parse_cohen2():
    spec = parse_spec(COHEN2)
    ref = cohen2()
    assert spec.poset == ref.q
    assert list(spec.names) == ["zero", "s0", "t"]
    assert spec.name() == ref.t
    assert spec.name("s0") == ref.names[1]


def test_sets_and_default():
    spec = load_spec(SPECS / "cohen2.fs")
    assert spec.sets["two"] == parse_hf("{{},{{}}}")
    assert spec.default == "t"


def test_default_falls_back_to_last_name():
    spec = parse_spec("poset { elements: e } name u { } name v { u@e }")
    assert spec.name().label == "v"


def test_unknown_name():
    with pytest.raises(UnknownIdError, match="unknown name"):
        parse_spec("poset { elements: e } name t { s@e }")


def test_unknown_condition():
    with pytest.raises(UnknownIdError, match="unknown condition id 'z'"):
        parse_spec("poset { elements: e } name zero { } name t { zero@z }")
    with pytest.raises(UnknownIdError):
        parse_spec("poset { elements: e order: e<z }")


def test_cyclic_reference():
    with pytest.raises(ParseError, match="cyclic"):
        parse_spec("poset { elements: e } name t { t@e }")


def test_duplicates():
    with pytest.raises(DuplicateIdError):
        parse_spec("poset { elements: e e }")
    with pytest.raises(DuplicateIdError):
        parse_spec("poset { elements: e } name t { } name t { }")


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_spec("poset {\n  elements: e\n}\nname t { zero e }")
    assert info.value.line == 4


def test_bad_character():
    with pytest.raises(ParseError) as info:
        parse_spec("poset { elements: e }\n  $")
    assert (info.value.line, info.value.column) == (2, 3)


def test_missing_poset():
    with pytest.raises(ParseError):
        parse_spec("")


def test_reflexive_order_line_accepted():
    spec = parse_spec("poset { elements: a b order: a<a }")
    assert spec.poset.leq("a", "a") and not spec.poset.leq("a", "b")


@pytest.mark.parametrize("path", sorted(SPECS.glob("*.fs")), ids=lambda p: p.name)
def test_round_trip(path):
    spec = load_spec(path)
    again = parse_spec(format_spec(spec))
    assert again == spec
    assert format_spec(again) == format_spec(spec)


def test_round_trip_keeps_equivalences():
    spec = parse_spec("poset { elements: e p q order: p<q q<p p<e } name s { } name t { s@q }")
    assert parse_spec(format_spec(spec)) == spec
