"""Pair codes obtained from classical MDS codes.

Three mechanisms live here: reading a classical code as a pair code,
interleaving two classical codes, and re-reading a classical code along a
closed eulerian trail of a graph whose vertices are its coordinates.
"""

from __future__ import annotations

import numpy as np

from ..alphabet import field_of_order, prime_power
from ..classical import (GeneratorMatrix, as_code, classical_parameters, reed_solomon,
                         triply_extended_rs)
from ..errors import ConstructionInapplicable, InvalidParameter, NotConstructible, Unsupported
from ..eulergraphs import (Graph, cycle_graph, eulerian_girth3, eulerian_girth4, eulerian_trail,
                           girth, girth3_sizes, girth4_sizes, is_eulerian)
from ..pairmetric import Code


def _classical_mds(source) -> tuple[Code, int]:
    code = as_code(source)
    if len(code) < 2:
        raise ConstructionInapplicable("classical code needs at least two codewords")
    _, d_h, mds = classical_parameters(code)
    if not mds:
        raise ConstructionInapplicable(
            f"input is not classical MDS: size {len(code)}, d_H={d_h}, n={code.n}")
    return code, d_h


def embed_classical(source: GeneratorMatrix | Code) -> Code:
    """A classical MDS (n, d) code with d < n, read as an MDS (n, d+1) pair code."""
    code, d_h = _classical_mds(source)
    if d_h >= code.n:
        raise ConstructionInapplicable(f"d_H = {d_h} must be below n = {code.n}")
    prov = {"route": "embed-classical", "classical": code.provenance, "d_H": d_h}
    return Code(code.alphabet, code.words, claimed_d=d_h + 1, provenance=prov,
                linear=code.linear, check=False)


def interleave(c1: GeneratorMatrix | Code, c2: GeneratorMatrix | Code) -> Code:
    """Words ``(u0, v0, u1, v1, ...)`` for u in c1, v in c2; pair-distance 2d."""
    a, b = as_code(c1), as_code(c2)
    if a.n != b.n:
        raise ConstructionInapplicable(f"lengths differ: {a.n} vs {b.n}")
    if a.alphabet != b.alphabet:
        raise ConstructionInapplicable(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    d1 = classical_parameters(a)[1] if len(a) > 1 else a.n
    d2 = classical_parameters(b)[1] if len(b) > 1 else b.n
    if d1 != d2:
        raise ConstructionInapplicable(f"classical distances differ: {d1} vs {d2}")
    n = a.n
    words = np.empty((len(a) * len(b), 2 * n), dtype=np.int32)
    words[:, 0::2] = np.repeat(a.words, len(b), axis=0)
    words[:, 1::2] = np.tile(b.words, (len(a), 1))
    prov = {"route": "interleave", "left": a.provenance, "right": b.provenance, "d_H": d1}
    return Code(a.alphabet, words, claimed_d=2 * d1, provenance=prov,
                linear=a.linear and b.linear, check=False)


def extend_by_graph(source: GeneratorMatrix | Code, g: Graph) -> Code:
    """Re-read each codeword of a classical MDS (n, d) code along an eulerian trail of g.

    The graph must have order n and girth at least n-d+1; the result has
    length m = |E(g)| and pair-distance m-n+d+1.
    """
    code, d_h = _classical_mds(source)
    n = code.n
    if g.order != n:
        raise ConstructionInapplicable(f"graph order {g.order} != code length {n}")
    if not is_eulerian(g):
        raise ConstructionInapplicable("graph is not eulerian")
    need = n - d_h + 1
    if girth(g) < need:
        raise ConstructionInapplicable(f"graph girth {girth(g)} is below n-d+1 = {need}")
    trail = eulerian_trail(g)
    m = g.size
    prov = {"route": "extend-by-graph", "classical": code.provenance, "d_H": d_h,
            "graph": {"order": g.order, "size": m}, "trail": trail[:m]}
    return Code(code.alphabet, code.words[:, trail[:m]], claimed_d=m - n + d_h + 1,
                provenance=prov, linear=code.linear, check=False)


# -- the (n, n-1) and (n, n-2) families ---------------------------------------------


def _field(q):
    if prime_power(q) is None:
        raise Unsupported(f"q = {q} is not a prime power", reason="needs a field alphabet")
    return field_of_order(q)


def _rs_family(field, n0: int, k: int) -> Code:
    if n0 <= field.q + 1:
        g, name = reed_solomon(field, n0, k), "reed-solomon"
    else:
        g, name = triply_extended_rs(field, k), "triply-extended-rs"
    return g.span({"route": name, "q": field.q, "n": n0, "k": k})


def nm1_lengths(q: int) -> range:
    """Classical lengths n0 available for [n0, 3] codes over GF(q)."""
    return range(3, (q + 2 if q % 2 == 0 else q + 1) + 1)


def nm2_lengths(q: int) -> range:
    return range(4, q + 2)


def _graph_nm2(n0: int, n: int) -> Graph | None:
    if n0 < 6:
        return cycle_graph(n0) if n == n0 else None
    return eulerian_girth4(n0, n) if n in girth4_sizes(n0) else None


def mds_nm1(q: int, n: int) -> Code:
    """An MDS (n, n-1)_q pair code through the smallest admissible classical length."""
    field = _field(q)
    if n < 3:
        raise InvalidParameter(f"need n >= 3, got {n}")
    for n0 in nm1_lengths(q):
        if n in girth3_sizes(n0):
            code = extend_by_graph(_rs_family(field, n0, 3), eulerian_girth3(n0, n))
            code.provenance.update(route="mds-nm1", n0=n0)
            return code
    top = max(nm1_lengths(q))
    raise Unsupported(f"(n, n-1) = ({n}, {n - 1}) over q = {q} needs a girth-3 eulerian graph "
                      f"of size {n} on at most {top} vertices; none is available",
                      reason="outside constructive range")


def mds_nm2(q: int, n: int) -> Code:
    """An MDS (n, n-2)_q pair code through the smallest admissible classical length."""
    field = _field(q)
    if n < 4:
        raise InvalidParameter(f"need n >= 4, got {n}")
    for n0 in nm2_lengths(q):
        try:
            g = _graph_nm2(n0, n)
        except NotConstructible:
            g = None
        if g is not None:
            code = extend_by_graph(_rs_family(field, n0, 4), g)
            code.provenance.update(route="mds-nm2", n0=n0)
            return code
    raise Unsupported(f"(n, n-2) = ({n}, {n - 2}) over q = {q} needs a girth-4 eulerian graph "
                      f"of size {n} on at most {q + 1} vertices; none is available",
                      reason="outside constructive range")
