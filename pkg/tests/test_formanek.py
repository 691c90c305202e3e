import pytest
from hypothesis import given
from conftest import rng_from, seeds

from ztame.cpoly import T, CPoly
from ztame.errors import IndexOverflowError, NoSolutionError, NotXYHomogeneousError
from ztame.formanek import FormanekForm, outer_compose, power_form, solve_outer, star_expand, to_form
from ztame.ncpoly import X, NCPoly, depends_only_on_z, substitute
from ztame.parsing import parse_c, parse_nc
from ztame.samples import random_cpoly, random_form, random_word


def C(text):
    return parse_c(text, T)


def test_to_form_examples():
    assert to_form(parse_nc("z*x*z*y")) == FormanekForm(2, {"xy": C("t0*t1")})
    assert to_form(parse_nc("x + 3*z^2*x*z")) == FormanekForm(1, {"x": C("1 + 3*t0^2*t1")})
    with pytest.raises(NotXYHomogeneousError):
        to_form(parse_nc("x + y^2"))


def test_star_expand_examples():
    assert star_expand(FormanekForm(2, {"xy": C("t0*t1")})) == parse_nc("z*x*z*y")
    assert star_expand(FormanekForm(1, {"x": C("t0 + t1")})) == parse_nc("z*x + x*z")


def test_form_rejects_indices_beyond_degree():
    with pytest.raises(IndexOverflowError):
        FormanekForm(1, {"x": C("t2")})


def test_outer_compose_examples():
    v = FormanekForm(1, {"x": C("t1")})
    out = outer_compose(C("t0"), 2, v)
    assert star_expand(out) == parse_nc("z*x*z*x*z")
    assert star_expand(out) == substitute(star_expand(power_form(C("t0"), 2)), X, star_expand(v))
    w = FormanekForm(3, {"xyx": C("t0 + t3"), "yyy": C("2")})
    assert outer_compose(C("1"), 1, w) == w
    assert outer_compose(C("t1"), 1, FormanekForm(1, {"y": C("1")})) == FormanekForm(1, {"y": C("t1")})
    with pytest.raises(IndexOverflowError):
        outer_compose(C("t3"), 2, v)


def test_solve_outer_examples():
    u = to_form(parse_nc("z*x*z*x*z"))
    v = to_form(parse_nc("x*z"))
    assert solve_outer(u, v) == (C("t0"), 2)
    assert solve_outer(v, v) == (C("1"), 1)
    with pytest.raises(NoSolutionError):
        solve_outer(to_form(parse_nc("x*y")), to_form(parse_nc("x")))
    with pytest.raises(NoSolutionError):
        solve_outer(to_form(parse_nc("x*y*x")), to_form(parse_nc("x*y")))


def _xy_homogeneous(rng, n):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        counts = {"x": 0, "y": 0, "z": rng.randint(0, 4)}
        for _ in range(n):
            counts[rng.choice("xy")] += 1
        terms[random_word(rng, counts)] = rng.randint(-3, 3) or 1
    return NCPoly(terms)


@given(seeds)
def test_bijection_from_polynomials(seed):
    rng = rng_from(seed)
    p = _xy_homogeneous(rng, rng.randint(1, 4))
    assert star_expand(to_form(p)) == p


@given(seeds)
def test_bijection_from_forms(seed):
    rng = rng_from(seed)
    f = random_form(rng, rng.randint(1, 4), max_z=4)
    assert to_form(star_expand(f)) == f


@given(seeds)
def test_outer_compose_matches_substitution(seed):
    rng = rng_from(seed)
    d, k = rng.randint(1, 3), rng.randint(1, 2)
    omega = random_cpoly(rng, T, nvars=d + 1, max_deg=2, max_terms=2)
    v = random_form(rng, k, max_z=3)
    q = star_expand(power_form(omega, d))
    assert star_expand(outer_compose(omega, d, v)) == substitute(q, X, star_expand(v))


@given(seeds)
def test_solve_outer_partial_inverse(seed):
    rng = rng_from(seed)
    d, k = rng.randint(1, 3), rng.randint(1, 2)
    omega = random_cpoly(rng, T, nvars=d + 1, max_deg=2, max_terms=2)
    v = random_form(rng, k, max_z=2)
    assert not depends_only_on_z(star_expand(v))
    assert solve_outer(outer_compose(omega, d, v), v) == (omega, d)
