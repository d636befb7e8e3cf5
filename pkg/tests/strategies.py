from hypothesis import strategies as st

from abelham.constructors import random_latin_square, random_semigroup
from abelham.magma import CayleyTable


@st.composite
def tables(draw, min_order=1, max_order=4):
    n = draw(st.integers(min_order, max_order))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return CayleyTable(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def semigroups(min_order=1, max_order=5):
    return st.builds(random_semigroup, st.integers(min_order, max_order), st.integers(0, 2**32 - 1))


def quasigroups(min_order=1, max_order=6):
    return st.builds(random_latin_square, st.integers(min_order, max_order), st.integers(0, 2**32 - 1))
