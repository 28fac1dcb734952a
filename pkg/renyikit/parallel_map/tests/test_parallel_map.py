import pytest

from ..parallel_map import parallel_map


def _square(x):
    return x * x


@pytest.mark.parametrize('numcores', [1, 2])
def test_order_preserved(numcores):
    assert parallel_map(_square, range(7), numcores=numcores) == [x * x for x in range(7)]


def test_empty_and_single():
    assert parallel_map(_square, [], numcores=4) == []
    assert parallel_map(_square, [3], numcores=4) == [9]


def test_rejects_noncallable():
    with pytest.raises(TypeError):
        parallel_map(3, range(2))
