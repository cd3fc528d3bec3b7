"""Expression grammar: parsing, canonical text, estimates, element literals."""

import pytest

from finring import specs
from finring.errors import SpecParseError

ROUND_TRIPS = [
    "Z2",
    "Z12",
    "M2(Z3)",
    "M3(Z2)",
    "T2(Z4)",
    "T3(Z2)",
    "T2(Z4,id)",
    "T2(prod(Z2,Z2),swap)",
    "TE(Z4)",
    "DT(Z2)",
    "K(2)(Z4)",
    "K(0)(Z4)",
    "FM2(2)(Z8)",
    "prod(Z3,M2(Z2))",
    "GR(Z4,C2)",
    "GR(Z2,C2xC2)",
    "quotpoly(Z2,3)",
    "sub(M2(Z2);[[0,1],[1,1]])",
    "cmat(Z4;[[1,1],[2,1]])",
]


@pytest.mark.parametrize("text", ROUND_TRIPS)
def test_canonical_text_round_trips(text):
    node = specs.parse_spec(text)
    assert node.text() == text
    assert specs.parse_spec(node.text()).text() == text


def test_whitespace_and_case_are_normalized():
    assert specs.parse_spec(" M2( Z3 ) ").text() == "M2(Z3)"
    assert specs.parse_spec("prod( Z2 , Z4 )").text() == "prod(Z2,Z4)"


@pytest.mark.parametrize("text,fragment,pos", [
    ("Z", "expected 'INT'", 1),
    ("Zx", "expected 'INT'", 1),
    ("M2(Z3", "expected ')'", 5),
    ("prod(Z2)", "at least two factors", 8),
    ("K(1)(Z4", "expected ')'", 7),
    ("T9", "expected '('", 2),
    ("frob(Z2)", "unexpected character 'f'", 0),
    ("Z6 oops", "unexpected character 'o'", 3),
    ("sub(M2(Z2))", "expected ';'", 10),
])
def test_parse_errors_carry_position_and_reason(text, fragment, pos):
    with pytest.raises(SpecParseError) as exc:
        specs.parse_spec(text)
    err = exc.value
    assert fragment in str(err)
    assert err.pos == pos


def test_order_estimates_are_structural_upper_bounds():
    cases = {
        "Z12": 12,
        "M2(Z3)": 81,
        "T2(Z4)": 64,
        "T3(Z2)": 64,
        "T3(Z4,id)": 64,   # constant-diagonal tuples: n slots, not n(n+1)/2
        "TE(Z4)": 16,
        "DT(Z2)": 16,
        "K(2)(Z4)": 256,
        "FM2(2)(Z8)": 4096,
        "GR(Z4,C2)": 16,
        "prod(Z3,M2(Z2))": 48,
        "quotpoly(Z3,3)": 27,
    }
    for text, order in cases.items():
        node = specs.parse_spec(text)
        assert node.order_estimate() == order, text
        built = specs.build_spec(text)
        assert built.order <= node.order_estimate()


def test_estimate_does_not_build():
    # an estimate beyond any sensible cap must still be computable
    node = specs.parse_spec("M3(M3(Z8))")
    assert node.order_estimate() == 8 ** 81


def test_subring_estimate_is_ambient_order():
    node = specs.parse_spec("sub(M2(Z2);[[0,1],[1,1]])")
    assert node.order_estimate() == 16
    assert specs.build_spec(node.text()).order == 4


def test_element_literals_resolve_in_matrix_rings():
    ring = specs.build_spec("M2(Z2)")
    elt = specs.resolve_element(ring, specs.parse_element_text("[[0,1],[1,1]]"))
    assert ring.element_label(elt) == "(0,1,1,1)"
    same = specs.resolve_element(ring, specs.parse_element_text(str(elt)))
    assert same == elt


def test_element_literals_reject_shape_mismatch():
    ring = specs.build_spec("M2(Z2)")
    with pytest.raises(SpecParseError):
        specs.resolve_element(ring, specs.parse_element_text("[[0,1,0],[1,1,0]]"))
    with pytest.raises(SpecParseError):
        specs.resolve_element(ring, specs.parse_element_text("99"))


def test_element_literal_on_plain_ring_is_id_only():
    ring = specs.build_spec("Z6")
    assert specs.resolve_element(ring, specs.parse_element_text("5")) == 5
    with pytest.raises(SpecParseError):
        specs.resolve_element(ring, specs.parse_element_text("[[1]]"))
