# tests/test_surface.py
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccurves.core.errors import AlphabetMismatch, BadSurface, BadSymbol, WordError
from ccurves.surface import (
    SurfaceSymbol,
    all_symbols,
    boundary_cycles,
    cyclic_orientation,
    invariants,
    make_symbol,
    preset,
)
from ccurves.words import Letter, parse_letters

from .conftest import cw


def o(o_sym, text, strict=False):
    return cyclic_orientation(o_sym, parse_letters(text), strict=strict)


class TestSymbol:
    def test_genus_two_symbol(self):
        o_sym = SurfaceSymbol.parse("a1.a2.A1.A2.a3.a4.A3.A4")
        assert o_sym.rank == 4
        assert o_sym == preset(2, 1)

    @pytest.mark.parametrize(
        "text",
        ["a1.a2.a1.A2", "a1.a2.A1", "a1.a3.A1.A3", "a1.a1"],
    )
    def test_rejects_bad_symbols(self, text):
        with pytest.raises(BadSymbol):
            SurfaceSymbol.parse(text)

    def test_syntax_error_becomes_bad_symbol(self):
        with pytest.raises(BadSymbol):
            SurfaceSymbol.parse("a1.b2")

    def test_keeps_given_rotation(self):
        o_sym = make_symbol(parse_letters("A1.a2.A2.a1"))
        assert str(o_sym) == "A1.a2.A2.a1"
        assert o_sym.position(Letter(1)) == 3

    def test_word_alphabet(self, torus):
        assert torus.contains_word(cw("a1.A2"))
        assert not torus.contains_word(cw("a3"))
        with pytest.raises(AlphabetMismatch):
            torus.require_word(cw("a1.a3"))


class TestPreset:
    @pytest.mark.parametrize(
        "genus, boundary, text",
        [
            (1, 1, "a1.a2.A1.A2"),
            (2, 1, "a1.a2.A1.A2.a3.a4.A3.A4"),
            (0, 2, "a1.A1"),
            (0, 3, "a1.A1.a2.A2"),
            (1, 2, "a1.a2.A1.A2.a3.A3"),
        ],
    )
    def test_layout(self, genus, boundary, text):
        assert str(preset(genus, boundary)) == text

    @pytest.mark.parametrize("genus, boundary", [(0, 1), (-1, 2), (1, 0)])
    def test_rejects(self, genus, boundary):
        with pytest.raises(BadSurface):
            preset(genus, boundary)

    @pytest.mark.parametrize("genus", range(4))
    @pytest.mark.parametrize("boundary", range(1, 5))
    def test_invariants_grid(self, genus, boundary):
        if 2 * genus + boundary - 1 < 1:
            pytest.skip("n < 1")
        got = invariants(preset(genus, boundary))
        assert got.genus == genus
        assert got.boundary_components == boundary
        assert got.euler_characteristic == 2 - 2 * genus - boundary


class TestInvariants:
    @pytest.mark.parametrize(
        "genus, boundary, expected",
        [(1, 1, (-1, 1, 1)), (2, 1, (-3, 1, 2))],
    )
    def test_examples(self, genus, boundary, expected):
        got = invariants(preset(genus, boundary))
        assert (got.euler_characteristic, got.boundary_components, got.genus) == expected

    def test_pair_of_pants(self, pants):
        got = invariants(pants)
        assert (got.euler_characteristic, got.boundary_components, got.genus) == (-1, 3, 0)
        assert len(boundary_cycles(pants)) == 3

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_euler_formula_all_symbols(self, n):
        for o_sym in all_symbols(n):
            got = invariants(o_sym)
            assert got.euler_characteristic == 2 - 2 * got.genus - got.boundary_components

    @pytest.mark.slow
    def test_euler_formula_rank_four(self):
        for o_sym in all_symbols(4):
            got = invariants(o_sym)
            assert got.euler_characteristic == 2 - 2 * got.genus - got.boundary_components

    def test_all_symbols_count(self):
        assert len(list(all_symbols(2))) == 6


class TestOrientation:
    def test_examples(self, genus_two):
        assert o(genus_two, "A2.a3.A3.a1") == 1
        assert o(genus_two, "A2.A1.a2") == -1
        assert o(genus_two, "a1.a1.a2") == 0

    def test_needs_three_letters(self, genus_two):
        with pytest.raises(WordError):
            o(genus_two, "a1.a2")

    def test_strict_mode_rejects_unreduced(self, genus_two):
        # Ā2 Ā1 a2 循环相邻处 a2 Ā2 可约
        assert o(genus_two, "A2.A1.a2") == -1
        assert o(genus_two, "A2.A1.a2", strict=True) == 0

    def test_foreign_letter(self, torus):
        with pytest.raises(AlphabetMismatch):
            o(torus, "a1.a2.a3")

    @given(st.permutations(range(8)), st.integers(3, 8), st.integers(0, 7))
    def test_rotation_and_reversal(self, perm, m, k):
        o_sym = preset(2, 1)
        codes = list(perm[:m])
        value = cyclic_orientation(o_sym, codes)
        k %= m
        assert cyclic_orientation(o_sym, codes[k:] + codes[:k]) == value
        assert cyclic_orientation(o_sym, codes[::-1]) == -value

    @given(st.permutations(range(8)))
    def test_three_distinct_letters_nonzero(self, perm):
        assert cyclic_orientation(preset(2, 1), list(perm[:3])) in (1, -1)

    @given(st.permutations(range(8)), st.integers(0, 7), st.integers(3, 5))
    def test_symbol_rotation_invariance(self, perm, k, m):
        o_sym = preset(2, 1)
        rotated = make_symbol(o_sym.codes[k:] + o_sym.codes[:k])
        codes = list(perm[:m])
        assert cyclic_orientation(rotated, codes) == cyclic_orientation(o_sym, codes)
