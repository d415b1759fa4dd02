import pytest
from hypothesis import given
from hypothesis import strategies as st

from gclt.errors import ParameterConditionError, SpecParseError
from gclt.group_core import is_isomorphic
from gclt.specs import GroupSpec, build, parse_spec, render


@pytest.mark.parametrize(
    "text, order",
    [
        ("C28", 28),
        ("C2xC14", 28),
        ("D14", 28),
        ("Dic7", 28),
        ("Q16", 16),
        ("SD16", 16),
        ("A2x2x3", 12),
        ("M(5,4,2)", 20),
        ("E(2,2,[0,1;1,1],3)", 12),
        ("P(4;(1,2),(1,2,3,4))", 24),
        ("C4oD4", 16),
        ("(C2xC2)xC3", 12),
        ("C2xE(2,2,[0,1;1,1],3)", 24),
    ],
)
def test_build_orders(text, order):
    G = build(text)
    assert G.order == order
    assert parse_spec(G.spec) == parse_spec(text)


def test_direct_products_flatten():
    spec = parse_spec("C2x(C3xC5)")
    assert spec.family == "x"
    assert [f.family for f in spec.factors] == ["C", "C", "C"]
    assert render(spec) == "C2xC3xC5"


@pytest.mark.parametrize("text", ["C2x(C3xC5)", "(C2xC3)xC5", "(C2x(C3xC5))xC7", "C2x(C4oD4)", "A2x4x(C3)"])
def test_bracketed_products_round_trip(text):
    spec = parse_spec(text)
    assert parse_spec(render(spec)) == spec


def test_central_product_keeps_brackets_inside_direct_product():
    spec = parse_spec("C3x(C4oD4)")
    assert render(spec) == "C3x(C4oD4)"
    assert build(spec).order == 48


def test_whitespace_ignored():
    assert parse_spec(" M( 5 , 4 , 2 ) ") == GroupSpec("M", (5, 4, 2))


def test_identity_permutation_generator():
    assert build("P(3;())").order == 1


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("Z5", 0),
        ("C", 1),
        ("M(5,4)", 5),
        ("C2xx", 3),
        ("(C2", 3),
        ("C2)", 2),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == position


def test_well_formed_spec_with_impossible_parameters():
    with pytest.raises(ParameterConditionError):
        build("M(5,2,2)")
    with pytest.raises(ParameterConditionError):
        build("P(3;(1,4))")


def test_built_group_matches_its_spec():
    G = build("D3")
    assert is_isomorphic(G, build(G.spec))


atoms = st.one_of(
    st.integers(1, 30).map(lambda n: f"C{n}"),
    st.integers(2, 10).map(lambda n: f"D{n}"),
    st.integers(2, 6).map(lambda n: f"Dic{n}"),
    st.sampled_from(["Q8", "Q16", "SD16", "M(7,3,2)", "E(3,2,[2,0;0,2],2)", "P(3;(1,2,3))"]),
)


@given(st.lists(atoms, min_size=1, max_size=3))
def test_render_parse_round_trip(parts):
    spec = parse_spec("x".join(parts))
    assert parse_spec(render(spec)) == spec
