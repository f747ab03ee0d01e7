"""Classical (Hamming-metric) MDS codes used as inputs to the pair-code constructions."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .alphabet import Alphabet
from .errors import ConstructionInapplicable, InvalidParameter, Unsupported
from . import kernels
from .pairmetric import Code, min_hamming_distance

# Largest span materialised in memory (symbols, i.e. size * n).
SPAN_LIMIT = 1 << 26


class GeneratorMatrix:
    """A k x n matrix of canonical symbols over ``alphabet``."""

    def __init__(self, alphabet: Alphabet, rows: Sequence[Sequence[int]]):
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise InvalidParameter("generator matrix needs at least one row")
        if arr.min() < 0 or arr.max() >= alphabet.q:
            raise InvalidParameter(f"matrix entries outside [0, {alphabet.q})")
        arr.flags.writeable = False
        self.alphabet = alphabet
        self.rows = arr

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def standard_form(self) -> bool:
        return bool((self.rows[:, : self.k] == np.eye(self.k, dtype=np.int64)).all())

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorMatrix)
            and self.alphabet == other.alphabet
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"<GeneratorMatrix {self.k}x{self.n} over {self.alphabet!r}>"

    def tolist(self) -> list[list[int]]:
        return self.rows.tolist()

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """The codeword ``u G``."""
        a = self.alphabet
        if len(message) != self.k:
            raise InvalidParameter(f"message length {len(message)} != k={self.k}")
        acc = np.zeros(self.n, dtype=np.int64)
        for s, row in zip(message, self.rows):
            acc = a.vadd(acc, a.vmul(np.full(self.n, s), row))
        return tuple(int(x) for x in acc)

    def span(self, provenance=None) -> Code:
        return span(self, provenance)


def span(g: GeneratorMatrix, provenance: dict | None = None) -> Code:
    """All ``q**k`` codewords ``u G``, ``u`` running over messages in lexicographic order."""
    if not g.standard_form:
        raise InvalidParameter("span requires a standard-form generator (I_k | X)")
    a, q = g.alphabet, g.alphabet.q
    if q**g.k * g.n > SPAN_LIMIT:
        raise InvalidParameter(f"span of size {q}^{g.k} is too large to materialise")
    symbols = np.arange(q)
    words = np.zeros((1, g.n), dtype=np.int64)
    for row in g.rows:
        multiples = a.vmul(symbols[:, None], row[None, :])  # (q, n)
        words = a.vadd(words[:, None, :], multiples[None, :, :]).reshape(-1, g.n)
    prov = {"route": "span", "k": g.k} if provenance is None else provenance
    return Code(a, words, provenance=prov, linear=True, check=False)


# -- linear algebra over a field -------------------------------------------------


def row_reduce(alphabet: Alphabet, rows) -> GeneratorMatrix:
    """Leftmost-pivot Gauss-Jordan reduction to ``(I_k | X)``.

    Raises Unsupported when the leading k x k block is singular.
    """
    if not alphabet.is_field:
        raise InvalidParameter("row reduction needs a field alphabet")
    a = alphabet
    m = [list(map(int, r)) for r in rows]
    k = len(m)
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            raise Unsupported(f"column {c} has no pivot; cannot reach standard form")
        m[c], m[piv] = m[piv], m[c]
        inv = a.inv(m[c][c])
        m[c] = [a.mul(inv, x) for x in m[c]]
        for r in range(k):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a.sub(x, a.mul(f, y)) for x, y in zip(m[r], m[c])]
    return GeneratorMatrix(a, m)


def dual(g: GeneratorMatrix) -> GeneratorMatrix:
    """Standard-form generator of the dual code of a standard-form ``(I_k | X)``."""
    a = g.alphabet
    k, n = g.k, g.n
    x = g.rows[:, k:]
    # parity-check matrix (-X^T | I_{n-k})
    h = [[a.neg(int(x[i, j])) for i in range(k)] + [1 if t == j else 0 for t in range(n - k)]
         for j in range(n - k)]
    return row_reduce(a, h)


# -- code families ---------------------------------------------------------------


def _require_field(field: Alphabet):
    if not field.is_field:
        raise InvalidParameter(f"{field!r} is not a field")


def reed_solomon(field: Alphabet, n: int, k: int) -> GeneratorMatrix:
    """Standard-form generator of an [n, k, n-k+1] (doubly extended) Reed-Solomon code.

    Evaluation points are the nonzero symbols in ascending order, preceded by
    0 once n >= q; n = q+1 appends the point at infinity as a last column.
    """
    _require_field(field)
    q = field.q
    if not 1 <= k <= n:
        raise InvalidParameter(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > q + 1:
        raise Unsupported(f"Reed-Solomon length {n} exceeds q+1={q + 1}")
    points = list(range(q)) if n >= q else list(range(1, n + 1))
    points = points[:n]
    rows = []
    for j in range(k):
        row = []
        for x in points:
            v = 1
            for _ in range(j):
                v = field.mul(v, x)
            row.append(v)
        if n == q + 1:
            row.append(1 if j == k - 1 else 0)
        rows.append(row)
    return row_reduce(field, rows)


def triply_extended_rs(field: Alphabet, k: int) -> GeneratorMatrix:
    """The [q+2, 3, q] code of a hyperoval (k=3) or its [q+2, q-1, 4] dual (k=q-1).

    Only defined in characteristic 2.
    """
    _require_field(field)
    if field.p != 2:
        raise Unsupported("triply extended Reed-Solomon codes need characteristic 2")
    q = field.q
    if k not in (3, q - 1):
        raise InvalidParameter(f"k must be 3 or q-1={q - 1}, got {k}")
    cols = [(1, x, field.mul(x, x)) for x in range(q)] + [(0, 1, 0), (0, 0, 1)]
    g3 = row_reduce(field, [list(r) for r in zip(*cols)])
    return g3 if k == 3 else dual(g3)


def parity_check(alphabet: Alphabet, n: int) -> GeneratorMatrix:
    """``(I_{n-1} | -1)``: the zero-sum code of length n, Hamming distance 2."""
    if n < 2:
        raise InvalidParameter(f"parity-check code needs n >= 2, got {n}")
    minus_one = alphabet.neg(alphabet.one())
    rows = [[1 if c == r else 0 for c in range(n - 1)] + [minus_one] for r in range(n - 1)]
    return GeneratorMatrix(alphabet, rows)


def repetition(alphabet: Alphabet, n: int) -> Code:
    if n < 1:
        raise InvalidParameter(f"repetition code needs n >= 1, got {n}")
    words = np.repeat(np.arange(alphabet.q, dtype=np.int32)[:, None], n, axis=1)
    return Code(alphabet, words, provenance={"route": "repetition", "n": n}, linear=True,
                check=False)


def hamming_min_distance(code: Code) -> int:
    """Minimum Hamming distance; a weight scan when the code is additively closed."""
    if code.linear and len(code) > 1:
        return kernels.min_nonzero_weight(code.words)
    return min_hamming_distance(code)


def is_mds_classical(code: Code) -> bool:
    return classical_parameters(code)[2]


def classical_parameters(code: Code) -> tuple[int, int, bool]:
    """``(n, d_H, is_mds)`` by brute force."""
    d = hamming_min_distance(code)
    return code.n, d, len(code) == code.q ** (code.n - d + 1)


def as_code(source) -> Code:
    if isinstance(source, GeneratorMatrix):
        return source.span()
    if isinstance(source, Code):
        return source
    raise ConstructionInapplicable(f"expected a Code or GeneratorMatrix, got {type(source)!r}")
