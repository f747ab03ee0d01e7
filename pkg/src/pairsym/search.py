"""Exact maximum size of a q-ary code of length n with pair-distance at least d.

The search is a maximum-clique computation on the graph whose vertices are
all q^n words, two words adjacent when their pair-distance is at least d.
Cyclic rotation and symbol relabelling preserve pair-distance, so only one
word per orbit has to be tried as the first clique member.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidParameter
from .pairmetric import pair_array

SEARCH_LIMIT = 4096


@dataclass
class SearchResult:
    n: int
    d: int
    q: int
    size: int
    witness: list[tuple[int, ...]]
    exhaustive: bool  # False when a target stopped the search early
    nodes: int = 0
    orbits: int = 0


def _canonical(words: np.ndarray) -> np.ndarray:
    """Index of the orbit representative of every word.

    A word's normal form relabels symbols in order of first appearance; the
    representative is the lexicographically least normal form over all
    rotations.
    """
    count, n = words.shape
    q = int(words.max()) + 1 if words.size else 1
    best = None
    for shift in range(n):
        rot = np.roll(words, -shift, axis=1)
        relab = np.full((count, q), -1, dtype=np.int64)
        nxt = np.zeros(count, dtype=np.int64)
        rows = np.arange(count)
        out = np.empty_like(rot)
        for i in range(n):
            s = rot[:, i]
            new = relab[rows, s] < 0
            relab[rows[new], s[new]] = nxt[new]
            nxt += new
            out[:, i] = relab[rows, s]
        best = out if best is None else np.where(_lex_less(out, best)[:, None], out, best)
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return best @ weights


def _lex_less(a, b):
    diff = a != b
    first = diff.argmax(axis=1)
    rows = np.arange(a.shape[0])
    return diff.any(axis=1) & (a[rows, first] < b[rows, first])


class _Clique:
    """Bitset branch and bound with a greedy-colouring bound."""

    def __init__(self, adj: list[int], target: int | None):
        self.adj = adj
        self.best: list[int] = []
        self.target = target
        self.nodes = 0

    def done(self) -> bool:
        return self.target is not None and len(self.best) >= self.target

    def _colour_order(self, cand: int):
        adj, order = self.adj, []
        colour, uncoloured = 0, cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~adj[v]
                uncoloured &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(self, cand: int, chosen: list[int]):
        # explicit stack: cliques can hold thousands of words
        stack = [self._level(cand, chosen)]
        while stack:
            try:
                sub = next(stack[-1])
            except StopIteration:
                stack.pop()
                continue
            stack.append(self._level(sub, chosen))

    def _level(self, cand: int, chosen: list[int]):
        """One branching level; yields each sub-candidate set to explore."""
        self.nodes += 1
        for v, colour in reversed(self._colour_order(cand)):
            if len(chosen) + colour <= len(self.best) or self.done():
                return
            chosen.append(v)
            sub = cand & self.adj[v]
            if sub:
                yield sub
            elif len(chosen) > len(self.best):
                self.best = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)


def max_code_size(n: int, d: int, q: int, target: int | None = None) -> SearchResult:
    """Largest code of length n over Z_q with minimum pair-distance >= d.

    With ``target`` the search stops once a code of that size is found.
    """
    if q < 2 or n < 2 or not 1 <= d <= n:
        raise InvalidParameter(f"need q >= 2, n >= 2, 1 <= d <= n; got n={n}, d={d}, q={q}")
    if q**n > SEARCH_LIMIT:
        raise InvalidParameter(f"q^n = {q}^{n} exceeds the search limit {SEARCH_LIMIT}")
    words = np.indices((q,) * n).reshape(n, -1).T.astype(np.int32)
    far = kernels.far_adjacency(pair_array(words, q), d)
    packed = np.packbits(far, axis=1, bitorder="little")
    adj = [int.from_bytes(row.tobytes(), "little") for row in packed]

    rep = _canonical(words)
    reps = np.flatnonzero(rep == np.arange(len(words)))
    solver = _Clique(adj, target)
    remaining = (1 << len(words)) - 1
    for r in reps:
        r = int(r)
        if solver.done():
            break
        if not solver.best:
            solver.best = [r]
        solver.expand(remaining & adj[r], [r])
        for v in np.flatnonzero(rep == r):
            remaining &= ~(1 << int(v))
    witness = [tuple(int(s) for s in words[v]) for v in sorted(solver.best)]
    return SearchResult(n, d, q, len(solver.best), witness,
                        exhaustive=not solver.done(),
                        nodes=solver.nodes, orbits=len(reps))
