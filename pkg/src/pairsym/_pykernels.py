"""Pure numpy fallback for the compiled kernels in ``_ckernels.pyx``."""

import numpy as np


def min_row_distance(a, start, stop, threshold=0):
    nrows, ncols = a.shape
    best = ncols + 1
    for i in range(start, min(stop, nrows)):
        rest = a[i + 1 :]
        if not len(rest):
            break
        dist = int(np.count_nonzero(rest != a[i], axis=1).min())
        if dist < best:
            best = dist
            if 0 < threshold and best < threshold:
                break
    return best


def min_nonzero_weight(a):
    w = np.count_nonzero(a, axis=1)
    w = w[w > 0]
    return int(w.min()) if w.size else a.shape[1] + 1


def far_adjacency(a, d):
    nrows = a.shape[0]
    out = np.zeros((nrows, nrows), dtype=np.uint8)
    for i in range(nrows):
        out[i] = np.count_nonzero(a != a[i], axis=1) >= d
    np.fill_diagonal(out, 0)
    return out
