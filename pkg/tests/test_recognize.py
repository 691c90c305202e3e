import pytest
from hypothesis import given
from conftest import rng_from, seeds

from ztame.autgroup import IDENTITY, TAU, Affine, ZEndomorphism, apply_word, compose, triangular
from ztame.errors import ZeroPolynomialError
from ztame.ncpoly import NCPoly, poly_bidegree
from ztame.parsing import parse_h, parse_nc as P
from ztame.recognize import (
    Verdict,
    mixed_monomial_filter,
    recognize_automorphism,
    recognize_coordinate,
    sigma_h,
    wild_coordinate,
)
from ztame.samples import random_h, random_mixed_endomorphism, random_tame_word

WILD_H = ["t", "t^2", "t*z + z*t", "t^2*z"]


def auto(f, g):
    return recognize_automorphism(ZEndomorphism(P(f), P(g)))


def test_triangular_map_is_one_generator():
    d = auto("x + y^2", "y")
    assert d.verdict is Verdict.TAME_AUTOMORPHISM
    assert d.certificate == [triangular(P("y^2"))]


def test_z_only_coordinate_is_not_an_automorphism():
    d = auto("z^2", "y")
    assert d.verdict is Verdict.NOT_AUTOMORPHISM
    assert "step 0" in d.reason


def test_dependent_linear_parts():
    d = auto("x + y + z", "2*x + 2*y")
    assert d.verdict is Verdict.NOT_AUTOMORPHISM
    assert "step 1" in d.reason


def test_linear_map_with_translation():
    e = ZEndomorphism(P("2*x + 3*y + z^2"), P("x - y + 1"))
    d = recognize_automorphism(e)
    assert d.verdict is Verdict.TAME_AUTOMORPHISM
    assert apply_word(d.certificate) == e
    assert isinstance(d.certificate[0], Affine)


def test_identity():
    d = recognize_automorphism(IDENTITY)
    assert d.verdict is Verdict.TAME_AUTOMORPHISM and d.certificate == []


def test_anick_map():
    d = recognize_automorphism(sigma_h(parse_h("t")))
    assert d.verdict is Verdict.NOT_Z_TAME
    assert d.trace and "failure" in d.trace[-1]
    # the tie is tried from both sides
    assert {entry["step"] for entry in d.trace} == {2, 3}


def test_non_automorphism_with_tied_leading_parts():
    # commutative image has Jacobian determinant 1 + 4y
    assert auto("x + y^2", "y + 2*y^2").verdict is Verdict.NOT_Z_TAME


def test_tie_is_reduced_on_the_first_coordinate():
    e = apply_word([triangular(P("y^2")), Affine(((1, 1), (0, 1)))])
    assert e == ZEndomorphism(P("x + y^2"), P("x + y + y^2"))
    d = recognize_automorphism(e)
    assert d.verdict is Verdict.TAME_AUTOMORPHISM
    assert d.trace[0]["step"] == 2 and d.trace[0]["bideg_f"] == d.trace[0]["bideg_g"]
    assert apply_word(d.certificate) == e


@pytest.mark.parametrize("h", WILD_H)
def test_wild_family(h):
    hp = parse_h(h)
    assert recognize_automorphism(sigma_h(hp)).verdict is Verdict.NOT_Z_TAME
    assert compose(sigma_h(hp), sigma_h(-hp)).is_identity()
    assert recognize_coordinate(wild_coordinate(hp)).verdict is Verdict.NOT_Z_TAME_COORDINATE
    assert recognize_coordinate(wild_coordinate(hp, outer_z=False)).verdict is Verdict.NOT_Z_TAME_COORDINATE


def test_sigma_h_examples():
    assert sigma_h(parse_h("t")) == ZEndomorphism(P("x + z*(x*z - z*y)"), P("y + (x*z - z*y)*z"))
    assert sigma_h(NCPoly()) == IDENTITY


@pytest.mark.parametrize("f", ["x + y^2 + z", "x + y^2*z + z^3", "3*y + z", "-x", "y + (x + y^2)^2"])
def test_tame_coordinates(f):
    d = recognize_coordinate(P(f))
    assert d.verdict is Verdict.TAME_COORDINATE
    assert apply_word(d.certificate).f == P(f)


@pytest.mark.parametrize("f", ["z^2 + 1", "x*y", "x^2 + y^3", "x + z*(x*z - z*y)", "x + (x*z - z*y)^2"])
def test_not_tame_coordinates(f):
    d = recognize_coordinate(P(f))
    assert d.verdict is Verdict.NOT_Z_TAME_COORDINATE
    assert d.certificate is None and d.trace


def test_zero_is_not_a_coordinate_input():
    with pytest.raises(ZeroPolynomialError):
        recognize_coordinate(NCPoly())


@pytest.mark.parametrize(
    "f,g,verdict",
    [
        ("x + x*y - y*x", "y", Verdict.NOT_AUTOMORPHISM),
        ("x + y^2", "y", Verdict.INCONCLUSIVE),
        ("x + x*z*y", "y + 3*y*x*y", Verdict.NOT_AUTOMORPHISM),
        ("x", "y", Verdict.INCONCLUSIVE),
    ],
)
def test_mixed_monomial_filter_examples(f, g, verdict):
    assert mixed_monomial_filter(ZEndomorphism(P(f), P(g))).verdict is verdict


def test_decision_json():
    d = auto("x + y^2", "y")
    out = d.to_json()
    assert out["verdict"] == "TameAutomorphism"
    assert out["certificate"] == [{"type": "triangular", "a1": "1", "p1": "y^2", "a2": "1", "p2": "0"}]
    assert "trace" not in d.to_json(include_trace=False)


@given(seeds)
def test_tame_words_are_recognized(seed):
    e = apply_word(random_tame_word(rng_from(seed), max_n=3))
    d = recognize_automorphism(e)
    assert d.verdict is Verdict.TAME_AUTOMORPHISM
    assert apply_word(d.certificate) == e


@given(seeds)
def test_tame_first_coordinates_are_recognized(seed):
    f = apply_word(random_tame_word(rng_from(seed), max_n=3)).f
    d = recognize_coordinate(f)
    assert d.verdict is Verdict.TAME_COORDINATE
    assert apply_word(d.certificate).f == f


@given(seeds)
def test_automorphism_trace_descends(seed):
    d = recognize_automorphism(apply_word(random_tame_word(rng_from(seed), max_n=3)))
    totals = [
        (e["bideg_f"][0] + e["bideg_g"][0], e["bideg_f"][1] + e["bideg_g"][1])
        for e in d.trace
        if "failure" not in e
    ]
    assert all(a > b for a, b in zip(totals, totals[1:]))


@given(seeds)
def test_filter_agrees_with_recognizer(seed):
    e = random_mixed_endomorphism(rng_from(seed))
    assert mixed_monomial_filter(e).verdict is Verdict.NOT_AUTOMORPHISM
    assert recognize_automorphism(e).verdict is not Verdict.TAME_AUTOMORPHISM


@given(seeds)
def test_sigma_h_inverse(seed):
    h = random_h(rng_from(seed))
    assert compose(sigma_h(h), sigma_h(-h)).is_identity()
    assert compose(sigma_h(-h), sigma_h(h)).is_identity()


@given(seeds)
def test_random_wild_family_members(seed):
    h = random_h(rng_from(seed))
    assert recognize_automorphism(sigma_h(h)).verdict is Verdict.NOT_Z_TAME
    assert recognize_coordinate(wild_coordinate(h)).verdict is Verdict.NOT_Z_TAME_COORDINATE
