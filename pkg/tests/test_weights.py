import itertools

import pytest
from hypothesis import given, strategies as st

from fanodeg.errors import DistinctnessViolation, InvalidArgument
from fanodeg.weights import random_weights, sequential_weights, validate


def test_sequential():
    assert sequential_weights(4) == (1, 2, 3, 4)
    assert sequential_weights(1) == (1,)
    assert sequential_weights(7) == tuple(range(1, 8))


def test_random_is_deterministic():
    assert random_weights(4, 1, 100) == random_weights(4, 1, 100)
    assert len(set(random_weights(4, 1, 100))) == 4


def test_random_rejects_small_range():
    with pytest.raises(InvalidArgument):
        random_weights(3, 5, 2)


def test_random_pairwise_distinct():
    w = random_weights(10, 7, 1000)
    assert all(a != b for a, b in itertools.combinations(w, 2))
    assert all(-1000 <= h <= 1000 for h in w)


@given(st.integers(1, 20), st.integers(-(2**63), 2**63 - 1))
def test_random_always_valid(size, seed):
    w = random_weights(size, seed, 2 * size)
    assert validate(w) == w


def test_validate():
    assert validate((1, 2, 3)) == (1, 2, 3)
    assert validate([0, -1, 5, 3]) == (0, -1, 5, 3)
    with pytest.raises(DistinctnessViolation) as info:
        validate((1, 2, 2))
    assert info.value.pair == (2, 3)


def test_validate_rejects_non_integers():
    with pytest.raises(InvalidArgument):
        validate((1, 2.5, 3))
