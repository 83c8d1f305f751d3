import pytest

from sigma1.base_rings import Params

# (p, f, d) with e = 1: q in {2, 3, 4}, d in {1, 2}
GRID = [(2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 2)]
SMALL = [(2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 2)]


def ids(points):
    return [f"p{p}f{f}d{d}" for p, f, d in points]


@pytest.fixture(params=GRID, ids=ids(GRID))
def params(request):
    p, f, d = request.param
    return Params(p, f, 1, d)


@pytest.fixture(params=SMALL, ids=ids(SMALL))
def small_params(request):
    p, f, d = request.param
    return Params(p, f, 1, d)
