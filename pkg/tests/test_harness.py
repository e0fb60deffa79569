import pytest

from pdng.harness import chunked, ordered_map


def square(x):
    return x * x


def test_chunked():
    assert list(chunked(range(7), 3)) == [[0, 1, 2], [3, 4, 5], [6]]
    assert list(chunked([], 3)) == []


@pytest.mark.parametrize("jobs", [1, 2])
def test_ordered_map_preserves_order(jobs):
    assert list(ordered_map(square, range(50), jobs=jobs, chunk=7)) == [x * x for x in range(50)]


def test_ordered_map_rejects_bad_settings():
    with pytest.raises(ValueError):
        list(ordered_map(square, [1], jobs=0))
    with pytest.raises(ValueError):
        list(ordered_map(square, [1], chunk=0))
