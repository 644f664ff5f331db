# tests/conftest.py
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ccurves.surface import SurfaceSymbol, preset
from ccurves.words import CyclicWord, make_cyclic
from ccurves.words.cyclic import cyclic_reduce

settings.register_profile("ccurves", deadline=None)
settings.load_profile("ccurves")


def cw(text: str) -> CyclicWord:
    return CyclicWord.parse(text)


@pytest.fixture(scope="session")
def genus_two():
    return preset(2, 1)


@pytest.fixture(scope="session")
def torus():
    return preset(1, 1)


@pytest.fixture(scope="session")
def pants():
    return SurfaceSymbol.parse("a1.A1.a2.A2")


@pytest.fixture(scope="session")
def example_first_word():
    return cw("a1.a2.A3.a1.a1.a3.A2.a1")


def reduced_words(n: int, max_size: int = 8):
    """n 个生成元上的非平凡约化循环字"""
    return (
        st.lists(st.integers(0, 2 * n - 1), min_size=1, max_size=max_size)
        .filter(lambda codes: len(cyclic_reduce(codes)) > 0)
        .map(make_cyclic)
    )
