"""(n, n-1) symbol-pair codes obtained by developing q base words over a group.

A base word u and a pair of group elements (a, b) give the codeword
``(u0+a, u1+b, u2+a, u3+b, ...)``.  When the base words satisfy the two
difference conditions checked by :func:`is_development_seed`, the q^3 words
so obtained form an MDS (n, n-1)_q symbol-pair code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..alphabet import AbelianGroup, is_prime
from ..errors import InvalidParameter, SeedInvalid
from ..pairmetric import Code


@dataclass(frozen=True)
class DevelopmentSeed:
    group: AbelianGroup
    base: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(tuple(int(s) for s in w) for w in self.base))

    @property
    def n(self) -> int:
        return len(self.base[0]) if self.base else 0

    @property
    def q(self) -> int:
        return self.group.order


@dataclass
class SeedCheck:
    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _difference_keys(group: AbelianGroup, u: Sequence[int]):
    """Yield ``((i, j), difference pair)`` for every i != j the two conditions constrain."""
    n = len(u)
    sub = group.sub
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if (i - j) % 2 == 0:
                yield (i, j), (sub(u[i], u[j]), sub(u[(i + 1) % n], u[(j + 1) % n]))
            else:
                yield (i, j), (sub(u[i], u[(j + 1) % n]), sub(u[(i + 1) % n], u[j]))


def is_development_seed(seed: DevelopmentSeed) -> SeedCheck:
    """Exhaustive check of both difference conditions.

    A failing check carries the witness ``(u_index, v_index, i, j)``.
    """
    group, base = seed.group, seed.base
    if not base:
        return SeedCheck(False, reason="empty seed")
    n = seed.n
    if any(len(w) != n for w in base):
        return SeedCheck(False, reason="base words differ in length")
    if n % 2 or n < 2:
        return SeedCheck(False, reason=f"length {n} is not even")
    if len(base) != group.order:
        return SeedCheck(False, reason=f"{len(base)} base words for a group of order {group.order}")
    if any(not 0 <= s < group.order for w in base for s in w):
        return SeedCheck(False, reason="symbol outside the group")
    seen: dict = {}
    for idx, u in enumerate(base):
        for ij, diff in _difference_keys(group, u):
            other = seen.setdefault((ij, diff), idx)
            if other != idx:
                return SeedCheck(False, witness=(other, idx) + ij,
                                 reason=f"base words {other} and {idx} collide at (i, j) = {ij}")
    return SeedCheck(True)


def develop(seed: DevelopmentSeed) -> Code:
    """All q^3 words ``(u0+a, u1+b, u2+a, ...)``; an MDS (n, n-1)_q code."""
    if seed.group.order < 2:
        raise SeedInvalid("development needs a group of order >= 2")
    check = is_development_seed(seed)
    if not check:
        raise SeedInvalid(f"invalid development seed: {check.reason}", check.witness)
    alphabet = seed.group.as_alphabet()
    q, n = alphabet.q, seed.n
    base = np.array(seed.base, dtype=np.int64)  # (q, n)
    shifts = np.zeros((q, q, n), dtype=np.int64)
    symbols = np.arange(q)
    shifts[:, :, 0::2] = symbols[:, None, None]
    shifts[:, :, 1::2] = symbols[None, :, None]
    words = alphabet.vadd(base[:, None, None, :], shifts[None, :, :, :]).reshape(-1, n)
    prov = {"route": "development", "group": list(seed.group.factors),
            "base": [list(w) for w in seed.base]}
    return Code(alphabet, words, claimed_d=n - 1, provenance=prov, check=False)


# Six base words of a Z_6 development (8, 7) code.
Z6_BASE = (
    (0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 5, 1, 2),
    (0, 0, 2, 2, 4, 5, 3, 4),
    (0, 0, 3, 3, 0, 4, 2, 5),
    (0, 0, 4, 4, 2, 3, 5, 1),
    (0, 0, 5, 5, 0, 1, 4, 3),
)


def z6_seed() -> DevelopmentSeed:
    return DevelopmentSeed(AbelianGroup([6]), Z6_BASE)


def dev_8_7_2p(p: int) -> DevelopmentSeed:
    """Base words of an (8, 7)_{2p} development code over Z_p x Z_2.

    p = 3 returns the Z_6 listing instead.
    """
    if p == 3:
        return z6_seed()
    if p < 5 or not is_prime(p):
        raise InvalidParameter(f"need an odd prime p >= 5 (or p = 3), got {p}")
    group = AbelianGroup([p, 2])

    def word(pairs):
        return tuple(group.encode(e) for e in pairs)

    c0 = [
        [(0, 0), (0, 0), (0, 0), (1, 0), (0, 0), (1, 1), (0, 0), (0, 1)],
        [(0, 0), (0, 0), (0, 1), (1, 1), (2, 0), (0, 1), (2, 1), (2, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0), (1, 1), (0, 0), (0, 1), (0, 0)],
        [(0, 0), (0, 0), (1, 1), (0, 1), (0, 1), (2, 0), (2, 0), (2, 1)],
    ]
    c1 = []
    for a in range(2, p):
        ah = p - 1 if a == 2 else a - 1
        c1.append([(0, 0), (0, 0), (a, 0), (ah, 1), (3 * a, 1), (0, 1), (2 * a, 1), (2 * ah, 0)])
        c1.append([(0, 0), (0, 0), (a, 1), (a, 0), (0, 1), (3 * a, 1), (2 * a, 0), (2 * a, 1)])
    return DevelopmentSeed(group, tuple(word(w) for w in c0 + c1))
