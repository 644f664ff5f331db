# tests/test_words.py
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccurves.core.errors import TrivialClass, WordError, WordSyntaxError
from ccurves.words import (
    CyclicWord,
    Letter,
    LinearWord,
    enumerate_reduced,
    homology_vector,
    inverse,
    is_null_homologous,
    make_cyclic,
    parse_letters,
    partition_prefixes,
    power,
    primitive_root,
    subword_at,
)
from ccurves.words.cyclic import is_cyclically_reduced, least_rotation

from .conftest import cw, reduced_words

a1, A1, a2, A2, a3 = Letter(1), Letter(1, True), Letter(2), Letter(2, True), Letter(3)


class TestLetters:
    def test_order_and_inverse(self):
        assert a1 < A1 < a2 < A2 < a3
        assert a1.inverse() == A1
        assert A2.inverse().inverse() == A2
        assert [Letter.from_code(c) for c in range(4)] == [a1, A1, a2, A2]

    def test_text_grammar(self):
        assert parse_letters("a1.a1.A2") == [a1, a1, A2]
        assert parse_letters(" a1  A2\ta3 ") == [a1, A2, a3]
        assert str(Letter(12, True)) == "A12"

    @pytest.mark.parametrize("text", ["", "b1", "a0", "a", "a1..x2", "a-1"])
    def test_bad_syntax(self, text):
        with pytest.raises(WordSyntaxError):
            parse_letters(text)

    def test_linear_word(self):
        word = LinearWord([a1, a2, A1])
        assert str(word) == "a1.a2.A1"
        assert word.is_freely_reduced()
        assert not LinearWord([a1, a2, A2]).is_freely_reduced()
        assert str(word.inverse()) == "a1.A2.A1"


class TestMakeCyclic:
    def test_adjacent_pair_cancels(self):
        assert make_cyclic([a1, a2, A2, a3]) == cw("a1.a3")
        assert str(make_cyclic([a1, a2, A2, a3])) == "a1.a3"

    def test_trivial(self):
        with pytest.raises(TrivialClass):
            make_cyclic([a1, A1])
        with pytest.raises(TrivialClass):
            make_cyclic([])

    def test_rotation_invariance(self):
        assert make_cyclic([a2, a1]) == make_cyclic([a1, a2])
        assert str(make_cyclic([a2, a1])) == "a1.a2"

    def test_cyclic_cancellation(self):
        # a1 a2 a3 Ā1 -> a2 a3
        assert make_cyclic([a1, a2, a3, A1]) == cw("a2.a3")

    @given(reduced_words(3))
    def test_canonical_invariants(self, w):
        assert len(w) >= 1
        assert is_cyclically_reduced(w.codes)
        assert w.codes == least_rotation(w.codes)

    @given(reduced_words(3), st.integers(0, 20))
    def test_any_rotation_gives_same_word(self, w, k):
        k %= len(w)
        assert make_cyclic(w.codes[k:] + w.codes[:k]) == w

    @given(reduced_words(3))
    def test_idempotent(self, w):
        assert make_cyclic(w.letters) == w


class TestInversePower:
    def test_inverse_examples(self):
        assert inverse(cw("a1.a2")) == cw("A1.A2")
        assert str(inverse(cw("a1.a2"))) == "A1.A2"
        assert inverse(cw("a1")) == cw("A1")

    @given(reduced_words(3))
    def test_inverse_involution(self, w):
        assert inverse(inverse(w)) == w

    def test_power_examples(self):
        w = cw("a1.a2")
        assert power(w, 2) == cw("a1.a2.a1.a2")
        assert power(w, 1) == w

    @pytest.mark.parametrize("k", [0, -1])
    def test_power_rejects_non_positive(self, k):
        with pytest.raises(WordError):
            power(cw("a1"), k)

    @given(reduced_words(3, 6), st.integers(1, 4))
    def test_power_length(self, w, k):
        assert len(power(w, k)) == k * len(w)
        assert primitive_root(power(w, k))[0] == primitive_root(w)[0]


class TestPrimitiveRoot:
    @pytest.mark.parametrize(
        "text, root, mult",
        [
            ("a1.a2.a1.a2", "a1.a2", 2),
            ("a1", "a1", 1),
            ("a1.a1.a2", "a1.a1.a2", 1),
            ("a1.a1.a1", "a1", 3),
        ],
    )
    def test_examples(self, text, root, mult):
        assert primitive_root(cw(text)) == (cw(root), mult)

    def test_round_trip_small(self):
        for w in enumerate_reduced(2, 8):
            root, mult = primitive_root(w)
            assert power(root, mult) == w
            assert primitive_root(root)[1] == 1

    @pytest.mark.slow
    def test_round_trip_length_twelve(self):
        for w in enumerate_reduced(2, 12):
            root, mult = primitive_root(w)
            assert power(root, mult) == w


class TestSubwordAt:
    def test_periodic_read(self):
        assert str(subword_at(cw("a1.a2"), 1, 3)) == "a2.a1.a2"
        assert str(subword_at(cw("A2.A2"), 1, 4)) == "A2.A2.A2.A2"

    @given(reduced_words(3))
    def test_full_read_is_representative(self, w):
        assert subword_at(w, 0, len(w)).codes == w.codes


class TestEnumeration:
    def test_length_one(self):
        assert [str(w) for w in enumerate_reduced(2, 1)] == ["a1", "A1", "a2", "A2"]

    def test_length_two_count(self):
        words = list(enumerate_reduced(2, 2))
        assert len(words) == 12
        assert len(set(words)) == 12

    @pytest.mark.parametrize("n, max_len", [(2, 4), (3, 3)])
    def test_matches_brute_force(self, n, max_len):
        expected = set()
        for length in range(1, max_len + 1):
            for seq in product(range(2 * n), repeat=length):
                if is_cyclically_reduced(seq):
                    expected.add(CyclicWord(least_rotation(seq)))
        emitted = list(enumerate_reduced(n, max_len))
        assert len(emitted) == len(expected)
        assert set(emitted) == expected
        assert emitted == sorted(expected)

    def test_partitions_cover_everything(self):
        full = list(enumerate_reduced(2, 6))
        parts = list(enumerate_reduced(2, 1))
        for prefix in partition_prefixes(2, 2):
            parts.extend(enumerate_reduced(2, 6, min_len=2, prefix=prefix))
        assert sorted(parts) == full

    def test_invalid_arguments(self):
        with pytest.raises(WordError):
            list(enumerate_reduced(0, 3))


class TestHomology:
    def test_examples(self):
        assert homology_vector(cw("a1.a1.a2.a2")) == (2, 2)
        assert homology_vector(cw("a1.A2.A2")) == (1, -2)
        assert homology_vector(cw("a2"), n=3) == (0, 1, 0)

    def test_null_homologous(self):
        assert is_null_homologous(cw("a1.a2.A1.A2"))
        assert is_null_homologous(cw("a1.a1.A2.A1.A1.a2"))
        assert not is_null_homologous(cw("a1"))
        assert not is_null_homologous(cw("a1.a2.A1"))

    @given(reduced_words(3), st.integers(1, 3))
    def test_inverse_and_power(self, w, k):
        assert homology_vector(inverse(w), 3) == tuple(-x for x in homology_vector(w, 3))
        assert homology_vector(power(w, k), 3) == tuple(k * x for x in homology_vector(w, 3))
