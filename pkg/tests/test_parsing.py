import pytest
from hypothesis import given, strategies as st
from conftest import rng_from, seeds

from ztame.cpoly import T, ZBAR
from ztame.errors import ParseError
from ztame.ncpoly import X, Y, Z, NCPoly
from ztame.parsing import parse_c, parse_h, parse_nc, print_c, print_h, print_nc
from ztame.samples import random_cpoly, random_nc


def test_anick_first_coordinate():
    p = parse_nc("x + z*(x*z - z*y)")
    assert p == X + Z * X * Z - Z * Z * Y
    assert print_nc(p) == "x + z*x*z - z^2*y"


def test_commutator_has_two_terms():
    assert len(parse_nc("x*y - y*x")) == 2


def test_juxtaposition_powers_and_rationals():
    assert parse_nc("2/3 xy^2 z") == parse_nc("2/3*x*y*y*z")
    assert parse_nc("(x + y)^2") == parse_nc("x^2 + x*y + y*x + y^2")
    assert parse_nc("-(x - 1)") == parse_nc("1 - x")
    assert parse_nc("x^0") == parse_nc("1")


def test_h_letters():
    assert parse_h("t^2*z + z*t") == parse_nc("x^2*z + z*x")
    assert print_h(parse_h("t*z - 3")) == "-3 + t*z"
    with pytest.raises(ParseError):
        parse_h("y")


def test_commutative_text():
    p = parse_c("t0*t2^2 - 3/4*t1")
    assert print_c(p) == "t0*t2^2 - 3/4*t1"
    q = parse_c("1 + zb1*zb2", ZBAR)
    assert parse_c(print_c(q), ZBAR) == q
    assert parse_c("z1 - z2", ZBAR) == parse_c("zb1 - zb2", ZBAR)
    with pytest.raises(ParseError):
        parse_c("zb1", T)


@pytest.mark.parametrize(
    "text,pos",
    [
        ("x +", 3),
        ("x + * y", 4),
        ("(x + y", 6),
        ("x)", 1),
        ("x # y", 2),
        ("x^", 2),
        ("x^y", 2),
        ("1/0*x", 0),
        ("3/#4*x", 2),
        ("x + 3/", 6),
        ("", 0),
    ],
)
def test_error_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_nc(text)
    assert info.value.pos == pos
    assert isinstance(info.value, SyntaxError)


@given(seeds)
def test_round_trip_nc(seed):
    p = random_nc(rng_from(seed), max_len=6, max_terms=6)
    assert parse_nc(print_nc(p)) == p


@given(seeds)
def test_round_trip_c(seed):
    rng = rng_from(seed)
    for family in (T, ZBAR):
        p = random_cpoly(rng, family, nvars=4, allow_zero=True)
        assert parse_c(print_c(p), family) == p


@given(seeds, st.sampled_from("#!?$@&w"))
def test_fuzzed_input_reports_offending_offset(seed, junk):
    rng = rng_from(seed)
    text = print_nc(random_nc(rng, max_len=5, max_terms=5))
    at = rng.randint(0, len(text))
    mutated = text[:at] + junk + text[at:]
    with pytest.raises(ParseError) as info:
        parse_nc(mutated)
    assert info.value.pos == at


@given(seeds)
def test_truncated_input_never_crashes(seed):
    rng = rng_from(seed)
    text = print_nc(random_nc(rng, max_len=5, max_terms=5))
    cut = text[: rng.randint(0, len(text))]
    try:
        result = parse_nc(cut)
    except ParseError as exc:
        assert 0 <= exc.pos <= len(cut)
    else:
        assert isinstance(result, NCPoly)
