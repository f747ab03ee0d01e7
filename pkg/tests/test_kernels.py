import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pairsym import kernels

BACKENDS = kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.load_backend("fortran")


def _ref_min(a):
    n = len(a)
    return min(int(np.count_nonzero(a[i] != a[j])) for i in range(n) for j in range(i + 1, n))


matrices = st.tuples(st.integers(2, 40), st.integers(1, 9), st.integers(2, 5),
                     st.integers(0, 2**32))


def _matrix(params):
    rows, cols, q, seed = params
    return np.random.default_rng(seed).integers(0, q, size=(rows, cols)).astype(np.int32)


@pytest.mark.parametrize("backend", BACKENDS)
@given(matrices)
def test_min_row_distance_matches_reference(backend, params):
    a = _matrix(params)
    assert kernels.min_row_distance(a, backend=backend) == _ref_min(a)


@pytest.mark.parametrize("backend", BACKENDS)
@given(matrices)
def test_min_nonzero_weight(backend, params):
    a = _matrix(params)
    w = np.count_nonzero(a, axis=1)
    expected = int(w[w > 0].min()) if (w > 0).any() else a.shape[1] + 1
    assert kernels.min_nonzero_weight(a, backend=backend) == expected


@pytest.mark.parametrize("backend", BACKENDS)
@given(matrices, st.integers(0, 9))
def test_far_adjacency(backend, params, d):
    a = _matrix(params)
    got = kernels.far_adjacency(a, d, backend=backend)
    dist = (a[:, None, :] != a[None, :, :]).sum(axis=2)
    expected = dist >= d
    np.fill_diagonal(expected, False)
    assert np.array_equal(got, expected)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 6))
def test_parallel_split_is_exact(seed, jobs):
    a = np.random.default_rng(seed).integers(0, 3, size=(600, 7)).astype(np.int32)
    assert kernels.min_row_distance(a, jobs=jobs) == kernels.min_row_distance(a, jobs=1)


def test_single_row_sentinel():
    a = np.zeros((1, 4), dtype=np.int32)
    for b in BACKENDS:
        assert kernels.min_row_distance(a, backend=b) == 5
