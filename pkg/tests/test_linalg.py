import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import fraction_rank
from ratgauge.linalg import bareiss_rank, sparse_rank

matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=7)
)


def to_sparse(m):
    return [{c: v for c, v in enumerate(row) if v} for row in m]


@given(matrices)
def test_ranks_agree_with_fraction_elimination(m):
    expected = fraction_rank(m)
    assert bareiss_rank(m) == expected
    assert sparse_rank(to_sparse(m)) == expected


@pytest.mark.parametrize(
    "m, rank",
    [
        ([[0, 0], [0, 0]], 0),
        ([[1, -1, 0], [0, 1, -1], [1, 0, -1]], 2),
        ([[6, 4], [9, 6]], 1),
        ([[2, 0, 0], [0, 3, 0], [0, 0, 5]], 3),
    ],
)
def test_small_cases(m, rank):
    assert bareiss_rank(m) == rank
    assert sparse_rank(to_sparse(m)) == rank


def test_empty():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[]]) == 0
    assert sparse_rank([]) == 0
    assert sparse_rank([{}, {}]) == 0


def test_larger_random_sign_matrix():
    rng = random.Random(7)
    m = [[rng.choice((-1, 0, 0, 1)) for _ in range(30)] for _ in range(25)]
    assert sparse_rank(to_sparse(m)) == bareiss_rank(m) == fraction_rank(m)


def test_input_is_not_mutated():
    m = [[1, 2], [3, 4]]
    bareiss_rank(m)
    rows = to_sparse(m)
    sparse_rank(rows)
    assert m == [[1, 2], [3, 4]]
    assert rows == [{0: 1, 1: 2}, {0: 3, 1: 4}]
