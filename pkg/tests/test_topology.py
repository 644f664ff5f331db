# tests/test_topology.py
import random

import pytest
from hypothesis import given, settings

from ccurves.bialgebra import bracket, cobracket
from ccurves.core.errors import NonPrimitive, TrivialClass
from ccurves.linking import lp2
from ccurves.surface import preset
from ccurves.topology import (
    bracket_inverse_terms,
    intersection_number,
    is_simple,
    no_cancellation_holds,
    power_bracket_terms,
    self_intersection_number,
)
from ccurves.words import enumerate_reduced, inverse, is_primitive, make_cyclic

from .conftest import cw, reduced_words


def torus_word(i: int, j: int):
    return cw(".".join(["a1"] * i + ["a2"] * j))


class TestSelfIntersection:
    @pytest.mark.parametrize("i", range(1, 6))
    @pytest.mark.parametrize("j", range(1, 6))
    def test_torus_family(self, torus, i, j):
        w = torus_word(i, j)
        assert self_intersection_number(w, torus) == (i - 1) * (j - 1)
        assert cobracket(w, torus) == 0

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("a3.a4.A3.a4", 1),
            ("a2.a3.a2.a3.A1.A1.A1", 2),
            ("a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2", 2),
            ("A2.A2.a1.a1.a1.a1.a1.A2.a1.a1.a1.a1.a1", 8),
            ("A2.a3.a4.a4.a4.a4.a4.a1.A2.a3.a1", 4),
            ("a3.a1.a3.a1.a2.a2", 1),
        ],
    )
    def test_zero_cobracket_non_simple(self, genus_two, text, expected):
        w = cw(text)
        assert cobracket(w, genus_two) == 0
        assert self_intersection_number(w, genus_two) == expected
        assert not is_simple(w, genus_two)

    def test_example_first(self, genus_two, example_first_word):
        assert self_intersection_number(example_first_word, genus_two) == 7

    def test_rejects_non_primitive(self, torus):
        with pytest.raises(NonPrimitive):
            self_intersection_number(cw("a1.a2.a1.a2"), torus)

    def test_inverse_has_same_count(self, genus_two):
        for w in enumerate_reduced(2, 6):
            if is_primitive(w):
                assert self_intersection_number(inverse(w), genus_two) == self_intersection_number(
                    w, genus_two
                )


class TestSimple:
    def test_examples(self, torus):
        assert is_simple(cw("a1"), torus)
        assert is_simple(cw("a1.a2"), torus)
        assert not is_simple(cw("a1.a1.a2.a2"), torus)
        # 非本原字不是简单的
        assert not is_simple(cw("a1.a1"), torus)


class TestIntersection:
    def test_example_sharp(self, genus_two):
        assert intersection_number(cw("a1.A3"), cw("a2.A4"), genus_two) == 4

    def test_pants_cancellation(self, pants):
        v, w = cw("a1.A2.A2"), cw("a1.A2")
        assert intersection_number(v, w, pants) == 2
        assert bracket(v, w, pants) == 0
        assert not no_cancellation_holds(v, w, pants)

    @pytest.mark.parametrize(
        "v, w, expected",
        [
            ("a1.A2.A4.a1.A2", "a1.A2.A4.A4", 2),
            ("a1.a3.a3.a3.A2", "a1.a3.a3.A2", 4),
        ],
    )
    def test_cancelling_pairs(self, genus_two, v, w, expected):
        v, w = cw(v), cw(w)
        assert intersection_number(v, w, genus_two) == expected
        assert bracket(v, w, genus_two) == 0
        assert not no_cancellation_holds(v, w, genus_two)

    def test_rejects_non_primitive(self, torus):
        with pytest.raises(NonPrimitive):
            intersection_number(cw("a1.a1"), cw("a2"), torus)

    @settings(max_examples=60)
    @given(reduced_words(4), reduced_words(4))
    def test_symmetric(self, v, w):
        o_sym = preset(2, 1)
        if is_primitive(v) and is_primitive(w):
            assert intersection_number(v, w, o_sym) == intersection_number(w, v, o_sym)

    @settings(max_examples=60)
    @given(reduced_words(4), reduced_words(4))
    def test_terms_bounded_by_pairs(self, v, w):
        o_sym = preset(2, 1)
        assert bracket(v, w, o_sym).term_count <= len(lp2(v, w, o_sym))


class TestNoCancellation:
    def test_simple_letter_against_short_words(self, genus_two):
        v = cw("a2")
        for w in enumerate_reduced(4, 3):
            assert no_cancellation_holds(v, w, genus_two), str(w)

    @pytest.mark.slow
    @pytest.mark.parametrize("v", ["a1", "a2", "a3", "a4"])
    def test_simple_words_length_eight(self, genus_two, v):
        v = cw(v)
        for w in enumerate_reduced(4, 8):
            assert no_cancellation_holds(v, w, genus_two), str(w)


class TestBracketInverse:
    def test_torus_square_word(self, torus):
        w = cw("a1.a1.a2.a2")
        assert bracket_inverse_terms(w, torus) == 2
        assert power_bracket_terms(w, (1, -1), torus) == 2

    def test_simple_word_vanishes(self, torus):
        assert bracket_inverse_terms(cw("a1.a2"), torus) == 0

    def test_random_words_are_even(self):
        rng = random.Random(5)
        o_sym = preset(1, 2)
        for _ in range(100):
            codes = [rng.randrange(6) for _ in range(rng.randint(2, 7))]
            try:
                w = make_cyclic(codes)
            except TrivialClass:
                continue
            if not is_primitive(w):
                continue
            assert bracket_inverse_terms(w, o_sym) % 2 == 0
