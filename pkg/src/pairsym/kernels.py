"""Backend selection for the distance kernels.

The compiled extension is used when it imports; otherwise the numpy fallback.
Setting ``PAIRSYM_PURE_PYTHON=1`` forces the fallback.
"""

import importlib
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

BACKENDS = ("cython", "python")


def load_backend(name):
    if name == "cython":
        return importlib.import_module("pairsym._ckernels")
    if name == "python":
        return importlib.import_module("pairsym._pykernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    out = []
    for name in BACKENDS:
        try:
            load_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    if os.environ.get("PAIRSYM_PURE_PYTHON") not in (None, "", "0"):
        return "python", load_backend("python")
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", load_backend("python")


BACKEND, _impl = _select()


def use_backend(name):
    """Switch the process-wide default backend."""
    global BACKEND, _impl
    _impl = load_backend(name)
    BACKEND = name


def _as_int32(a):
    return np.ascontiguousarray(a, dtype=np.int32)


def min_row_distance(a, threshold=0, jobs=1, backend=None):
    """Exact minimum Hamming distance between distinct rows of ``a``.

    ``jobs > 1`` splits the outer loop over threads; the exact result does not
    depend on the split.  A positive ``threshold`` turns this into a refutation
    scan that may return any value below the threshold.
    """
    impl = _impl if backend is None else load_backend(backend)
    a = _as_int32(a)
    nrows = a.shape[0]
    if jobs <= 1 or nrows < 256:
        return impl.min_row_distance(a, 0, nrows, threshold)
    # rows near the top carry more pairs; interleave boundaries by pair count
    total = nrows * (nrows - 1) // 2
    bounds, acc, target = [0], 0, total / jobs
    for i in range(nrows):
        acc += nrows - 1 - i
        if acc >= target * len(bounds) and len(bounds) < jobs:
            bounds.append(i + 1)
    bounds.append(nrows)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(lambda r: impl.min_row_distance(a, r[0], r[1], threshold),
                         zip(bounds[:-1], bounds[1:]))
        return min(parts)


def min_nonzero_weight(a, backend=None):
    impl = _impl if backend is None else load_backend(backend)
    return impl.min_nonzero_weight(_as_int32(a))


def far_adjacency(a, d, backend=None):
    impl = _impl if backend is None else load_backend(backend)
    return np.asarray(impl.far_adjacency(_as_int32(a), int(d)), dtype=bool)
