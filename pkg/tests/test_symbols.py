"""Polynomials, words, pad rewriting, and formal sums."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, strategies as st

from hvcalc.symbols import (
    AUX, FINAL, PAD, PAD_AUX, BiGradedPoly, HVector, push_pads, render_word,
    rewrite_pads, word_degree, word_from_json, word_to_json,
)


class TestPoly:
    def test_add(self):
        assert (BiGradedPoly([1, 2, 1]) + BiGradedPoly([0, 1, 0])
                == BiGradedPoly([1, 3, 1]))
        assert BiGradedPoly([1]) + BiGradedPoly([-1]) == BiGradedPoly([0])
        assert (BiGradedPoly([1, 2, 2, 1]) + BiGradedPoly([0, 1, 1, 0])
                == BiGradedPoly([1, 3, 3, 1]))

    def test_add_degree_mismatch(self):
        with pytest.raises(ValueError):
            BiGradedPoly([1, 2]) + BiGradedPoly([1])

    def test_mul_linear(self):
        assert BiGradedPoly([1, 2, 2, 1]).mul_linear() == BiGradedPoly([1, 3, 4, 3, 1])
        assert BiGradedPoly([1]).mul_linear() == BiGradedPoly([1, 1])
        # hand expansion of (X+Y)(X^4+2X^3Y+2X^2Y^2+2XY^3+Y^4)
        assert (BiGradedPoly([1, 2, 2, 2, 1]).mul_linear()
                == BiGradedPoly([1, 3, 4, 4, 3, 1]))

    def test_structural_zero_keeps_degree(self):
        z = BiGradedPoly.zero(3)
        assert z.degree == 3 and z.is_zero()

    def test_palindromic(self):
        assert BiGradedPoly([1, 2, 1]).is_palindromic()
        assert not BiGradedPoly([1, 2]).is_palindromic()

    def test_fraction_collapse(self):
        p = BiGradedPoly([Fraction(4, 2), Fraction(1, 3)])
        assert p.coeffs[0] == 2 and isinstance(p.coeffs[0], int)
        assert p.coeffs[1] == Fraction(1, 3)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            BiGradedPoly([1.5])

    def test_render(self):
        assert BiGradedPoly([1, 3, 4, 3, 1]).render() == "(13431)"
        assert BiGradedPoly([1, 2, 2, 2, 1]).render(aux=True) == "[12221]"
        assert BiGradedPoly([1, -1, 5, 1]).render() == "(1,-1,5,1)"
        assert BiGradedPoly([12, 1]).render() == "(12,1)"

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
    def test_mul_linear_degree_and_sum(self, cs):
        p = BiGradedPoly(cs)
        q = p.mul_linear()
        assert q.degree == p.degree + 1
        # evaluating at first=second=1 doubles under multiplication by (1+1)
        assert sum(q.coeffs) == 2 * sum(p.coeffs)


class TestWords:
    def test_degrees(self):
        assert word_degree(()) == 0
        assert word_degree((PAD, 1)) == 4
        assert word_degree((PAD_AUX, PAD_AUX, 1)) == 5
        assert word_degree((2,)) == 5

    def test_render(self):
        assert render_word((PAD, 1), FINAL) == "A{1}"
        assert render_word((PAD_AUX, 2), AUX) == "Ā{2}"

    def test_json_round_trip(self):
        w = (PAD, 1, PAD_AUX, 3)
        assert word_from_json(word_to_json(w)) == w


class TestRewrite:
    def test_push_pads_examples(self):
        assert push_pads(1, (1,)) == {(PAD, 1): 1}
        assert push_pads(2, (1,)) == {(PAD, PAD, 1): 1}
        assert push_pads(3, ()) == {}
        assert push_pads(1, (1, 1)) == {(PAD, 1, 1): 1, (1, PAD, 1): 1}

    def test_push_zero_pads(self):
        assert push_pads(0, (1,)) == {(1,): 1}

    def test_rejects_aux_word(self):
        with pytest.raises(ValueError):
            push_pads(1, (PAD_AUX, 1))

    def test_weak_composition_counts(self):
        # pads distribute into slots before each local symbol
        for m in range(5):
            for r in range(1, 4):
                for ks in combinations_with_replacement((1, 2), r):
                    out = push_pads(m, ks)
                    assert len(out) == comb(m + r - 1, r - 1), (m, ks)
                    assert all(mult == 1 for mult in out.values())

    def test_degree_conservation(self):
        for m in range(4):
            for w in [(1,), (1, 1), (PAD, 1), (2, 1)]:
                for out, mult in push_pads(m, w).items():
                    assert word_degree(out) == m + word_degree(w)

    def test_full_scale_termination_and_normal_form(self):
        # every pad power against every word through degree 12 terminates
        # in well-formed final words of the right degree
        from hvcalc.terms import words_up_to_degree
        for m in range(7):
            for w in words_up_to_degree(12):
                for out, mult in push_pads(m, w).items():
                    assert mult >= 1
                    assert word_degree(out) == m + word_degree(w)
                    assert PAD_AUX not in out
                    assert not out or out[-1] != PAD

    def test_confluence_random_strategies(self):
        # applying the rules in any order gives the same normal form
        rng = random.Random(7)

        def rewrite_random(word):
            # a redex is a sliding pad not immediately followed by another
            # sliding pad (the inner one must go first)
            pads = [i for i, s in enumerate(word)
                    if s == PAD_AUX
                    and (i + 1 >= len(word) or word[i + 1] != PAD_AUX)]
            if not pads:
                if word and word[-1] == PAD:
                    return {}
                return {word: 1}
            i = rng.choice(pads)
            if i == len(word) - 1:
                return {}
            nxt = word[i + 1]
            from collections import Counter
            out = Counter()
            if nxt == PAD:
                for w, m in rewrite_random(word[:i] + (PAD,) + word[i + 1:]).items():
                    out[w] += m
            else:
                for w, m in rewrite_random(word[:i] + (PAD,) + word[i + 1:]).items():
                    out[w] += m
                for w, m in rewrite_random(word[:i] + (nxt, PAD_AUX) + word[i + 2:]).items():
                    out[w] += m
            return dict(out)

        cases = [
            (PAD_AUX, PAD_AUX, 1),
            (PAD_AUX, 1, PAD_AUX, 2),
            (PAD_AUX, PAD_AUX, PAD_AUX, 1, 1),
            (PAD_AUX, 2, 1),
            (PAD_AUX, PAD_AUX, 1, PAD_AUX, 1),
        ]
        # plus every pad-power against every short final word
        from hvcalc.terms import words_up_to_degree
        for m in range(7):
            for w in words_up_to_degree(8):
                cases.append((PAD_AUX,) * m + w)
        for word in cases:
            reference = dict(rewrite_pads(word))
            for _ in range(3):
                assert rewrite_random(word) == reference, word


class TestHVector:
    def test_cancellation(self):
        u = HVector(4, AUX, {(): BiGradedPoly([1, 2, 2, 2, 1]),
                             (PAD_AUX, 1): BiGradedPoly([1])})
        v = HVector(4, AUX, {(PAD_AUX, 1): BiGradedPoly([1])})
        w = u + v.scale(-1)
        assert w.terms == {(): BiGradedPoly([1, 2, 2, 2, 1])}

    def test_distinct_words_retained(self):
        u = HVector(4, AUX, {(1,): BiGradedPoly([1, 1])})
        v = HVector(4, AUX, {(PAD_AUX, 1): BiGradedPoly([1])})
        assert len((u + v).terms) == 2

    def test_scale(self):
        h = HVector(3, AUX, {(): BiGradedPoly([1, 2, 2, 1]),
                             (1,): BiGradedPoly([1])})
        doubled = h.scale(2)
        assert doubled.terms[()] == BiGradedPoly([2, 4, 4, 2])
        assert doubled.terms[(1,)] == BiGradedPoly([2])

    def test_degree_mismatch(self):
        u = HVector(3, AUX, {(): BiGradedPoly([1, 1, 1, 1])})
        v = HVector(2, AUX, {(): BiGradedPoly([1, 1, 1])})
        with pytest.raises(ValueError):
            u + v

    def test_flavor_mismatch(self):
        u = HVector(3, AUX, {(): BiGradedPoly([1, 1, 1, 1])})
        v = HVector(3, FINAL, {(): BiGradedPoly([1, 1, 1, 1])})
        with pytest.raises(ValueError):
            u + v

    def test_trailing_pad_annihilated(self):
        h = HVector(2, AUX, {(PAD_AUX, PAD_AUX): BiGradedPoly([1])})
        assert h.is_zero()

    def test_zero_poly_dropped_and_renders_zero(self):
        h = HVector(3, FINAL, {(): BiGradedPoly.zero(3)})
        assert h.is_zero() and h.render() == "0"

    def test_homogeneity_enforced(self):
        with pytest.raises(ValueError):
            HVector(3, FINAL, {(1,): BiGradedPoly([1, 1])})

    def test_wrong_flavor_word(self):
        with pytest.raises(ValueError):
            HVector(4, FINAL, {(PAD_AUX, 1): BiGradedPoly([1])})

    def test_render_order_matches_display(self):
        h = HVector(5, FINAL, {
            (2,): BiGradedPoly([1]),
            (): BiGradedPoly([1, 3, 4, 4, 3, 1]),
            (PAD, PAD, 1): BiGradedPoly([2]),
            (PAD, 1): BiGradedPoly([1, 1]),
            (1,): BiGradedPoly([1, 1, 1]),
        })
        assert h.render() == "(134431) + (111){1} + (11)A{1} + (2)AA{1} + (1){2}"

    def test_json(self):
        h = HVector(4, FINAL, {(PAD, 1): BiGradedPoly([1])})
        data = h.to_json()
        assert data == {"degree": 4, "flavor": "final",
                        "terms": [{"word": ["A", {"local": 1}], "poly": [1]}]}

    def test_coefficient(self):
        h = HVector(5, FINAL, {(PAD, 1): BiGradedPoly([-2, 4])})
        assert h.coefficient(1, 0, (PAD, 1)) == -2
        assert h.coefficient(0, 1, (PAD, 1)) == 4
        assert h.coefficient(0, 0, (2,)) == 0

    @given(st.integers(0, 3), st.integers(0, 3))
    def test_module_axioms(self, a, b):
        h = HVector(3, AUX, {(): BiGradedPoly([1, 2, 2, 1]),
                             (1,): BiGradedPoly([3])})
        assert h.scale(a) + h.scale(b) == h.scale(a + b)
