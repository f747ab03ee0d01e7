"""Symbol-pair reads, the pair-distance metric and brute-force MDS checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .alphabet import Alphabet
from .errors import InvalidParameter, UndefinedDistance

SIZE_LIMIT = 1 << 128
DEFAULT_BUDGET = 10**7


class Code:
    """A set of distinct words of common length over one alphabet.

    ``linear`` records that the words form an additive subgroup of the
    alphabet's ring structure (true for spans of generator matrices and for
    constructions that preserve that).  It enables the weight-scan shortcut.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        words,
        claimed_d: int | None = None,
        provenance: dict | None = None,
        linear: bool = False,
        check: bool = True,
    ):
        arr = np.asarray(words, dtype=np.int32)
        if arr.ndim != 2:
            if arr.size == 0:
                raise InvalidParameter("a code needs at least one codeword")
            raise InvalidParameter("codewords must form a 2-d array")
        if arr.shape[1] < 1:
            raise InvalidParameter("codeword length must be positive")
        if check:
            if arr.size and (arr.min() < 0 or arr.max() >= alphabet.q):
                raise InvalidParameter(f"symbols outside [0, {alphabet.q})")
            if len(np.unique(arr, axis=0)) != len(arr):
                raise InvalidParameter("duplicate codewords")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self.alphabet = alphabet
        self.words = arr
        self.claimed_d = claimed_d
        self.provenance = dict(provenance or {})
        self.linear = linear
        self.verification = None  # set by the dispatcher

    @property
    def n(self) -> int:
        return self.words.shape[1]

    @property
    def q(self) -> int:
        return self.alphabet.q

    def __len__(self) -> int:
        return self.words.shape[0]

    def __iter__(self):
        return (tuple(int(s) for s in w) for w in self.words)

    def __contains__(self, word) -> bool:
        w = np.asarray(word)
        return w.shape == (self.n,) and bool((self.words == w).all(axis=1).any())

    def __repr__(self):
        d = "" if self.claimed_d is None else f", d={self.claimed_d}"
        return f"<Code n={self.n}{d} over {self.alphabet!r}, {len(self)} words>"

    def sorted_words(self) -> np.ndarray:
        """Codewords in lexicographic order."""
        order = np.lexsort(self.words.T[::-1])
        return self.words[order]

    def with_claim(self, claimed_d, provenance=None) -> "Code":
        return Code(
            self.alphabet,
            self.words,
            claimed_d=claimed_d,
            provenance=self.provenance if provenance is None else provenance,
            linear=self.linear,
            check=False,
        )


def _word(u) -> np.ndarray:
    arr = np.asarray(u, dtype=np.int64)
    if arr.ndim != 1:
        raise InvalidParameter("a word is a 1-d sequence of symbols")
    return arr


def _same_shape(u, v):
    u, v = _word(u), _word(v)
    if u.shape != v.shape:
        raise InvalidParameter(f"length mismatch: {u.size} vs {v.size}")
    if u.size < 2:
        raise InvalidParameter("pair reads need length >= 2")
    return u, v


def pair_read(u: Sequence[int]) -> list[tuple[int, int]]:
    """The cyclic read ``((u0,u1), (u1,u2), ..., (u_{n-1},u0))``."""
    u = [int(s) for s in u]
    if len(u) < 2:
        raise InvalidParameter("pair reads need length >= 2")
    return [(u[i], u[(i + 1) % len(u)]) for i in range(len(u))]


def hamming_distance(u, v) -> int:
    u, v = _word(u), _word(v)
    if u.shape != v.shape:
        raise InvalidParameter(f"length mismatch: {u.size} vs {v.size}")
    return int(np.count_nonzero(u != v))


def pair_distance(u, v) -> int:
    u, v = _same_shape(u, v)
    diff = u != v
    return int(np.count_nonzero(diff | np.roll(diff, -1)))


def pair_weight(u) -> int:
    u = _word(u)
    return pair_distance(u, np.zeros_like(u))


def pair_array(words: np.ndarray, q: int) -> np.ndarray:
    """Encode every cyclic pair ``(w_i, w_{i+1})`` as the integer ``w_i*q + w_{i+1}``."""
    w = np.asarray(words, dtype=np.int32)
    if q * q >= 2**31:
        raise InvalidParameter(f"alphabet of order {q} too large for pair encoding")
    return w * np.int32(q) + np.roll(w, -1, axis=1)


def _need_two(code: Code):
    if len(code) < 2:
        raise UndefinedDistance("minimum distance needs at least two codewords")


def min_pair_distance(code: Code, threshold: int | None = None, jobs: int = 1) -> int:
    """Exact minimum pair-distance by scanning all codeword pairs.

    With ``threshold`` the scan stops at the first pair closer than it; the
    returned value is then only guaranteed to be below the threshold.
    """
    _need_two(code)
    if code.n < 2:
        raise InvalidParameter("pair distance needs length >= 2")
    return kernels.min_row_distance(pair_array(code.words, code.q), threshold or 0, jobs=jobs)


def min_pair_weight(code: Code) -> int:
    """Minimum pair-weight over the nonzero codewords.

    For an additively closed code this equals the minimum pair-distance.
    """
    _need_two(code)
    w = kernels.min_nonzero_weight(pair_array(code.words, code.q))
    if w > code.n:
        raise UndefinedDistance("code has no nonzero codeword")
    return w


def min_hamming_distance(code: Code, jobs: int = 1) -> int:
    _need_two(code)
    return kernels.min_row_distance(code.words, 0, jobs=jobs)


def singleton_bound(n: int, d: int, q: int) -> int:
    """Largest possible size ``q**(n-d+2)`` of an (n, d)_q symbol-pair code."""
    if q < 2 or not 2 <= d <= n:
        raise InvalidParameter(f"need q >= 2 and 2 <= d <= n, got n={n}, d={d}, q={q}")
    size = q ** (n - d + 2)
    if size >= SIZE_LIMIT:
        raise OverflowError(f"{q}^{n - d + 2} exceeds 128 bits")
    return size


@dataclass
class MDSReport:
    mds: bool
    d: int
    size: int
    bound: int

    def __bool__(self):
        return self.mds

    def summary(self) -> str:
        verdict = "MDS" if self.mds else "not MDS"
        if self.size == self.bound:
            return f"d={self.d}, size={self.size}, bound={self.bound}, {verdict}"
        return f"d={self.d}, size={self.size} ≠ {self.bound}, bound={self.bound}, {verdict}"


def is_mds(code: Code, jobs: int = 1) -> MDSReport:
    d = min_pair_distance(code, jobs=jobs)
    bound = singleton_bound(code.n, d, code.q)
    return MDSReport(len(code) == bound, d, len(code), bound)


@dataclass
class Verification:
    """Outcome of a budgeted MDS check."""

    verified: bool
    d: int | None
    size: int
    bound: int | None
    method: str
    notes: list[str] = field(default_factory=list)

    @property
    def mds(self) -> bool:
        return self.verified and self.d is not None and self.size == self.bound


def verify_code(code: Code, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Verification:
    """Brute-force minimum pair-distance when the work fits in ``budget``.

    Additively closed codes cost one weight evaluation per codeword; other
    codes cost one distance evaluation per unordered pair.
    """
    size = len(code)
    if code.linear and size <= budget:
        d, method = min_pair_weight(code), "weight-scan"
    elif size * (size - 1) // 2 <= budget:
        d, method = min_pair_distance(code, jobs=jobs), "pairwise-scan"
    else:
        bound = singleton_bound(code.n, code.claimed_d, code.q) if code.claimed_d else None
        return Verification(False, None, size, bound, "over-budget")
    bound = singleton_bound(code.n, d, code.q)
    notes = []
    if code.claimed_d is not None and d != code.claimed_d:
        notes.append(f"claimed d={code.claimed_d} but computed d={d}")
    return Verification(True, d, size, bound, method, notes)


def whole_space(alphabet: Alphabet, n: int) -> Code:
    """All q**n words, in lexicographic order."""
    q = alphabet.q
    if q**n > 1 << 24:
        raise InvalidParameter(f"{q}^{n} words are too many to materialise")
    grids = np.indices((q,) * n, dtype=np.int32).reshape(n, -1).T
    return Code(alphabet, grids, claimed_d=2 if n >= 2 else None, linear=True, check=False,
                provenance={"route": "whole-space", "n": n, "q": q})


def rotate(code: Code, shift: int) -> Code:
    return Code(code.alphabet, np.roll(code.words, shift, axis=1), code.claimed_d,
                code.provenance, code.linear, check=False)


def words_from_strings(items: Iterable[str]) -> list[list[int]]:
    """Parse comma-separated words such as ``"0,1,2"``."""
    return [[int(tok) for tok in s.split(",") if tok.strip()] for s in items]
