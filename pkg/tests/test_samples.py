from hypothesis import given, strategies as st
from conftest import rng_from, seeds

from ztame.autgroup import apply_word, leading_case
from ztame.ncpoly import NCPoly
from ztame.samples import TERM_CAP, random_mixed_endomorphism, random_normal_form, random_tame_word


def test_samples_are_reproducible():
    assert random_tame_word(rng_from(5)) == random_tame_word(rng_from(5))


@given(seeds, st.sampled_from([None, "A", "B", "C"]))
def test_normal_forms_respect_bounds(seed, case):
    nf = random_normal_form(rng_from(seed), case=case)
    nf.check()
    assert nf.n <= 4
    if case:
        assert nf.n >= 1 and leading_case(nf) == case
    for rho in nf.rhos:
        for w in list(rho.p1.words()) + list(rho.p2.words()):
            assert w.count("y") <= 3 and w.count("z") <= 3
        assert all(abs(c) <= 3 for _, c in rho.p1.items())
    e = apply_word(nf.to_word())
    assert max(len(e.f), len(e.g)) <= TERM_CAP


@given(seeds)
def test_mixed_endomorphisms_have_only_mixed_monomials(seed):
    e = random_mixed_endomorphism(rng_from(seed))
    u, v = e.f - NCPoly({"x": 1}), e.g - NCPoly({"y": 1})
    assert not (u.is_zero() and v.is_zero())
    assert all("x" in w and "y" in w for w in list(u.words()) + list(v.words()))
