import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from implalg import Table

# the three-element table opening the examples section: a:(1,1,a) b:(1,1,1)
E1_ROWS = [[2, 2, 0], [2, 2, 2], [0, 1, 2]]


@pytest.fixture
def e1():
    return Table.make(E1_ROWS)


@pytest.fixture
def bool2():
    return Table.make([[1, 1], [0, 1]])


@pytest.fixture
def psemi2():
    return Table.make([[1, 0], [0, 1]])


@pytest.fixture
def one_elt():
    return Table.make([[0]])


@pytest.fixture
def kinyon6():
    return Table.make(
        [
            [5, 1, 2, 4, 4, 5],
            [0, 5, 2, 0, 0, 5],
            [5, 5, 5, 5, 5, 5],
            [5, 1, 1, 5, 5, 5],
            [5, 1, 1, 5, 5, 5],
            [0, 1, 2, 3, 4, 5],
        ]
    )


@st.composite
def tables(draw, min_size=1, max_size=5):
    n = draw(st.integers(min_size, max_size))
    cells = draw(
        st.lists(
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return Table.make(cells)
