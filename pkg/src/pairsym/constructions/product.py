"""Componentwise pairing of two pair codes with equal length and distance."""

from __future__ import annotations

import numpy as np

from ..alphabet import make_product
from ..errors import ConstructionInapplicable
from ..pairmetric import Code


def product(c1: Code, c2: Code) -> Code:
    # symbol (s1, s2) is encoded s1*q2 + s2
    if c1.n != c2.n:
        raise ConstructionInapplicable(f"lengths differ: {c1.n} vs {c2.n}")
    if c1.claimed_d is None or c1.claimed_d != c2.claimed_d:
        raise ConstructionInapplicable(
            f"claimed distances differ: {c1.claimed_d} vs {c2.claimed_d}")
    q2 = c2.q
    words = (c1.words.astype(np.int64)[:, None, :] * q2 + c2.words[None, :, :]).reshape(-1, c1.n)
    prov = {"route": "product", "left": c1.provenance, "right": c2.provenance}
    return Code(make_product([c1.alphabet, c2.alphabet]), words, claimed_d=c1.claimed_d,
                provenance=prov, linear=c1.linear and c2.linear, check=False)
