import pytest

from arboretum.common.errors import TagMismatch, ValidationError
from arboretum.decomp.reduced_tuple import ReducedTuple, closing_tuple_from_cycle, find_closing_tuple, is_reduced


def test_tuple_shape():
    with pytest.raises(ValidationError):
        ReducedTuple((0,), ())
    with pytest.raises(ValidationError):
        ReducedTuple((0, 1, 2), (0,))


def test_is_reduced(e_cycle):
    factors = [e_cycle.R1, e_cycle.R2]
    assert is_reduced(ReducedTuple((0, 1, 2, 3, 0), (0, 1, 0, 1)), factors)
    assert not is_reduced(ReducedTuple((0, 1, 0), (0, 0)), factors)
    with pytest.raises(TagMismatch) as info:
        is_reduced(ReducedTuple((0, 2), (0,)), factors)
    assert info.value.position == 0


def test_closing_tuple_of_the_cycle(e_cycle):
    found = find_closing_tuple([e_cycle.R1, e_cycle.R2])
    assert found == ReducedTuple((0, 1, 2, 3, 0), (0, 1, 0, 1))
    assert found.is_closing()


def test_no_closing_tuple_for_a_free_product(e_free):
    assert find_closing_tuple([e_free.R1, e_free.R2]) is None


def test_search_bound(e_cycle):
    assert find_closing_tuple([e_cycle.R1, e_cycle.R2], max_length=4) is None


def test_core_pairs_are_not_steps(e_cycle):
    assert find_closing_tuple([e_cycle.R1, e_cycle.R2], core=e_cycle.R1) is None


def test_closing_tuple_from_cycle_is_canonical():
    assert closing_tuple_from_cycle([2, 1, 0, 3], [1, 0, 1, 0]) == ReducedTuple((0, 1, 2, 3, 0), (0, 1, 0, 1))
    assert closing_tuple_from_cycle([0, 3, 2, 1], [1, 0, 1, 0]) == ReducedTuple((0, 1, 2, 3, 0), (0, 1, 0, 1))
