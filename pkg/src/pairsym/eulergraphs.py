"""Eulerian graphs of prescribed order, size and girth (3 or 4).

Graphs are simple and undirected on the vertices ``0..order-1``.  The
girth-3 family is built from the Hamilton-cycle decomposition of K_n; the
girth-4 family from Dirac's Hamilton-cycle decomposition of K_{n/2,n/2},
complete bipartite graphs with a cycle removed, edge subdivision, and two
fixed order-9 gadgets for the sizes of the "wrong" parity.
"""

from __future__ import annotations

import functools
import math
from collections import deque
from typing import Iterable, Sequence

from .errors import ConstructionInapplicable, InvalidParameter, Nonexistent, Unsupported

INF = math.inf


class Graph:
    """Simple undirected graph; edges are stored as sorted ``(u, v)`` with ``u < v``."""

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = ()):
        if order < 0:
            raise InvalidParameter(f"negative order {order}")
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameter(f"edge {e} references a vertex outside 0..{order - 1}")
            key = (u, v) if u < v else (v, u)
            if key in es:
                raise InvalidParameter(f"repeated edge {key}")
            es.add(key)
        self.order = order
        self.edges = frozenset(es)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"<Graph order={self.order} size={self.size}>"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @functools.cached_property
    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    # set operations on a common vertex set --------------------------------

    def union(self, other: "Graph") -> "Graph":
        """Union of edge-disjoint graphs on the same vertex set."""
        if other.order != self.order:
            raise InvalidParameter("union needs graphs of equal order")
        if self.edges & other.edges:
            raise InvalidParameter("union operands share edges")
        return Graph(self.order, self.edges | other.edges)

    def difference(self, other: "Graph") -> "Graph":
        """Remove the edges of a subgraph."""
        if not other.edges <= self.edges:
            raise InvalidParameter("difference operand is not a subgraph")
        return Graph(self.order, self.edges - other.edges)

    def to_json(self) -> dict:
        return {"format": "pairsym-graph/1", "order": self.order,
                "edges": [list(e) for e in self.sorted_edges()]}


def cycle(order: int, vertices: Sequence[int]) -> Graph:
    """The closed cycle through ``vertices`` in the given order."""
    vs = list(vertices)
    if len(set(vs)) != len(vs) or len(vs) < 3:
        raise InvalidParameter(f"not a cycle: {vs}")
    return Graph(order, [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))])


def cycle_graph(n: int) -> Graph:
    return cycle(n, range(n))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"need n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise InvalidParameter(f"need a, b >= 1, got {a}, {b}")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


# -- structural predicates -----------------------------------------------------


def is_even(g: Graph) -> bool:
    return all(len(a) % 2 == 0 for a in g.adjacency)


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def is_eulerian(g: Graph) -> bool:
    """Even and connected, every vertex counted (isolated vertices disqualify)."""
    return g.order >= 1 and is_even(g) and is_connected(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests), by BFS from every vertex."""
    best = INF
    adj = g.adjacency
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def eulerian_trail(g: Graph) -> list[int]:
    """Closed trail through every edge once, as a vertex sequence ending where it starts.

    Hierholzer's algorithm from vertex 0, always leaving along the smallest
    unused neighbour; sub-tours are spliced in the order they are found.
    """
    if not is_eulerian(g):
        raise ConstructionInapplicable("graph is not eulerian")
    unused = [list(reversed(a)) for a in g.adjacency]  # pop() yields the smallest
    used = set()
    stack, circuit = [0], []
    while stack:
        v = stack[-1]
        nbrs = unused[v]
        while nbrs and ((v, nbrs[-1]) if v < nbrs[-1] else (nbrs[-1], v)) in used:
            nbrs.pop()
        if nbrs:
            w = nbrs.pop()
            used.add((v, w) if v < w else (w, v))
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def is_closed_eulerian_trail(g: Graph, trail: Sequence[int]) -> bool:
    if not trail or trail[0] != trail[-1]:
        return False
    steps = [tuple(sorted(p)) for p in zip(trail, trail[1:])]
    return len(steps) == g.size and set(steps) == set(g.edges) and len(set(steps)) == len(steps)


def subdivide(g: Graph, edge: Sequence[int]) -> Graph:
    """Replace ``{u, v}`` by ``{u, x}, {x, v}`` with the new vertex ``x = order``."""
    u, v = edge
    if not g.has_edge(u, v):
        raise InvalidParameter(f"edge {tuple(edge)} not in graph")
    key = (min(u, v), max(u, v))
    x = g.order
    return Graph(g.order + 1, (g.edges - {key}) | {(u, x), (v, x)})


def relabel(g: Graph, mapping: Sequence[int] | dict, order: int) -> Graph:
    return Graph(order, [(mapping[u], mapping[v]) for u, v in g.edges])


# -- girth at least three --------------------------------------------------------


def _max_size_girth3(n: int) -> int:
    return n * ((n - 1) // 2)


def _complete_decomposition(n: int):
    """Hamilton cycles Phi_i of K_n, i >= 0, infinity labelled n-1.

    Odd n = 2k+1 works over Z_{2k} and even n = 2k+2 over Z_{2k+1}; indices
    are taken modulo the cyclic part.
    """
    k = (n - 1) // 2
    r = 2 * k if n % 2 else 2 * k + 1
    inf = n - 1

    def phi(i: int) -> list[int]:
        seq = [inf, i % r]
        last = k - 1 if n % 2 else k
        for t in range(1, last + 1):
            seq += [(i - t) % r, (i + t) % r]
        if n % 2:
            seq.append((i - k) % r)
        return seq

    def zigzag(length: int) -> list[int]:
        """``(inf, 0, -1, 1, -2, 2, ...)`` truncated to ``length`` vertices."""
        seq = [inf, 0]
        t = 1
        while len(seq) < length:
            seq.append(-t % r)
            if len(seq) < length:
                seq.append(t % r)
            t += 1
        return seq[:length]

    return k, r, phi, zigzag


def _small_girth3(n: int, m: int):
    """Table of even subgraphs H_m of Phi_0 u Phi_{m2}, 3 <= m <= 2n-3.

    Returns ``(m2, H_m)``.
    """
    k, r, phi, zz = _complete_decomposition(n)

    def ham(i):
        return cycle(n, phi(i))

    def minus(m2, h):
        return m2, ham(0).union(ham(m2)).difference(h)

    if n % 2:
        for l in range(1, k):
            if m == 2 * l + 1:
                return k - l, cycle(n, zz(2 * l + 1))
        for l in range(2, k + 1):
            if m == 2 * l:
                return l - 1, cycle(n, zz(2 * l))
        if m == 2 * k + 1:
            return 1, ham(0)
        for l in range(1, k):
            if m == 2 * n - 2 * l - 1:
                return minus(k - l, cycle(n, zz(2 * l + 1)))
        for l in range(2, k + 1):
            if m == 2 * n - 2 * l:
                return minus(l - 1, cycle(n, zz(2 * l)))
    else:
        tri = cycle(n, [0, -1 % r, 1 % r])
        if m == 3:
            return 1, tri
        for l in range(2, k + 1):
            if m == 2 * l + 1:
                return k - l + 1, cycle(n, zz(2 * l + 1))
        for l in range(2, k + 1):
            if m == 2 * l:
                return l - 1, cycle(n, zz(2 * l))
        if m == 2 * k + 2:
            return 1, ham(0)
        if m == 2 * n - 3:
            return minus(1, tri)
        # l = k extends the printed range 2 <= l <= k-1 to cover m = n+1
        for l in range(2, k + 1):
            if m == 2 * n - 2 * l - 1:
                return minus(k - l + 1, cycle(n, zz(2 * l + 1)))
        for l in range(2, k + 1):
            if m == 2 * n - 2 * l:
                return minus(l - 1, cycle(n, zz(2 * l)))
    raise AssertionError(f"no small girth-3 graph for n={n}, m={m}")  # pragma: no cover


def eulerian_girth3(n: int, m: int) -> Graph:
    """Eulerian graph of order n and size m (girth >= 3 is automatic).

    Exists for ``n <= m <= M = n*floor((n-1)/2)`` except ``m in {M-1, M-2}``.
    """
    if n < 3:
        raise InvalidParameter(f"need n >= 3, got {n}")
    big = _max_size_girth3(n)
    if m in (big - 1, big - 2) and n <= m:
        raise Nonexistent(f"no eulerian graph of order {n} and size {m}",
                          reason=f"sizes M-1 and M-2 (M={big}) are impossible")
    if not n <= m <= big:
        raise Unsupported(f"size {m} outside [{n}, {big}] for order {n}",
                          reason="outside constructive range")
    k, _, phi, _ = _complete_decomposition(n)
    if m == big:
        g = Graph(n)
        for i in range(k):
            g = g.union(cycle(n, phi(i)))
        return g
    if m <= 2 * n - 3:
        return _small_girth3(n, m)[1]
    r = next(r for r in range(1, k + 1) if m - r * n <= 2 * n - 3)
    m2, g = _small_girth3(n, m - r * n)
    extra = [j for j in range(1, k) if j != m2][:r]
    if len(extra) < r:  # pragma: no cover - excluded by the size arithmetic
        raise AssertionError(f"not enough Hamilton cycles for n={n}, m={m}")
    for j in extra:
        g = g.union(cycle(n, phi(j)))
    return g


# -- girth at least four ---------------------------------------------------------


def M_girth4(n: int) -> int:
    """Novak's maximum size of an eulerian graph of order n and girth >= 4."""
    if n < 1:
        raise InvalidParameter(f"need n >= 1, got {n}")
    if n % 2 == 0:
        return 2 * (n * n // 8)
    return 2 * ((n - 1) ** 2 // 8) + 1


def _bipartite_decomposition(n: int):
    """Dirac's Hamilton cycles of K_{n',n'}, n' = n/2; j-filled labelled j, j-hollow n'+j."""
    h = n // 2
    k = h // 2

    def dot(j):
        return j % h

    def circ(j):
        return h + j % h

    def phi(i: int) -> list[int]:
        seq = []
        for j in range(h):
            seq += [dot(j), circ(j + 2 * i)]
        return seq

    def ladder(t: int) -> list[int]:
        """``(0*, 0o, 1*, 1o, ..., (t-1)*, (t-1)o)``, a cycle of length 2t."""
        seq = []
        for j in range(t):
            seq += [dot(j), circ(j)]
        return seq

    def skew() -> list[int]:
        """``(0*, 2o, 1*, 3o, ..., (n'-2)*, 0o)`` used when n' is odd."""
        seq = []
        for j in range(h - 1):
            seq += [dot(j), circ(j + 2)]
        return seq

    return h, k, phi, ladder, skew


def _small_girth4(n: int, m: int):
    h, k, phi, ladder, skew = _bipartite_decomposition(n)

    def ham(i):
        return cycle(n, phi(i))

    def minus(m2, sub):
        return m2, ham(0).union(ham(m2)).difference(sub)

    for l in range(1, k):
        if m == 4 * l:
            return l, cycle(n, ladder(2 * l))
        if m == 4 * l + 2:
            return l, cycle(n, ladder(2 * l + 1))
    if h % 2 == 0:
        if m == 4 * k:
            return 1, ham(0)
    else:
        if m == 4 * k:
            return 1, cycle(n, skew())
        if m == 4 * k + 2:
            return 1, ham(0)
        if m == 4 * k + 4:
            return minus(1, cycle(n, skew()))
    for l in range(1, k):
        if m == 2 * n - 4 * l:
            return minus(l, cycle(n, ladder(2 * l)))
        if m == 2 * n - 4 * l - 2:
            return minus(l, cycle(n, ladder(2 * l + 1)))
    raise AssertionError(f"no small girth-4 graph for n={n}, m={m}")  # pragma: no cover


def _even_order_girth4(n: int, m: int) -> Graph:
    """Same-parity case for even n: n <= m <= M(n), m even, m != M(n)-2 when n >= 8."""
    h, k, phi, _, _ = _bipartite_decomposition(n)
    if m == n * k:
        g = Graph(n)
        for i in range(k):
            g = g.union(cycle(n, phi(i)))
        return g
    if m < n * k and m != n * k - 2:
        if m <= 2 * n - 4:
            return _small_girth4(n, m)[1]
        r = next(r for r in range(1, k + 1) if m - r * n <= 2 * n - 4)
        m2, g = _small_girth4(n, m - r * n)
        for j in [j for j in range(1, k) if j != m2][:r]:
            g = g.union(cycle(n, phi(j)))
        return g
    # n = 4k+2: K_{2k,2k+2} minus an even cycle of length M(n) - m
    a, b = 2 * k, 2 * k + 2
    full = complete_bipartite(a, b)
    drop = M_girth4(n) - m
    if drop == 0:
        return full
    half = drop // 2
    seq = []
    for j in range(half):
        seq += [j, a + j]
    return full.difference(cycle(n, seq))


# Hand-built gadgets: order 9, girth 4, eulerian.  Both are bipartite with parts
# {0,2,4,6} and {1,3,5,7,8}.
_H9_14 = [(0, 1), (0, 5), (0, 7), (0, 8), (1, 2), (2, 3), (2, 5), (2, 7),
          (3, 4), (4, 5), (4, 7), (4, 8), (5, 6), (6, 7)]
_H9_16 = [(0, 1), (0, 5), (0, 7), (0, 8), (1, 2), (1, 4), (1, 6), (2, 3),
          (2, 5), (2, 8), (3, 4), (4, 5), (4, 8), (5, 6), (6, 7), (6, 8)]
_GADGET_PARTS = ([0, 2, 4, 6], [1, 3, 5, 7], [8, 9])

GADGETS = ("H9_14", "H9_16", "H10_15", "H10_17")


def gadget(name: str) -> Graph:
    if name == "H9_14":
        return Graph(9, _H9_14)
    if name == "H9_16":
        return Graph(9, _H9_16)
    if name == "H10_15":
        return subdivide(gadget("H9_14"), (0, 1))
    if name == "H10_17":
        return subdivide(gadget("H9_16"), (0, 1))
    raise InvalidParameter(f"unknown gadget {name!r}; expected one of {GADGETS}")


def _opposite_parity_sizes(n: int) -> tuple[int, ...]:
    if n % 2 == 0 and n >= 10:
        return (M_girth4(n - 2) - 1, M_girth4(n - 2) + 1)
    if n % 2 == 1 and n >= 9:
        return (M_girth4(n) - 3, M_girth4(n) - 1)
    return ()


def _gadget_substitution(n: int, m: int) -> Graph:
    odd = n % 2 == 1
    small = m == _opposite_parity_sizes(n)[0]
    name = ("H9_14" if small else "H9_16") if odd else ("H10_15" if small else "H10_17")
    h = gadget(name)
    if n in (9, 10):
        return h
    base = 2 * ((n - 1) // 2)
    a, b = 2 * (base // 4), 2 * (-(-base // 4))
    host = complete_bipartite(a, b)
    left, right = list(range(4)), list(range(a, a + 4))
    k44 = Graph(host.order, [(u, v) for u in left for v in right])
    host = Graph(n, host.difference(k44).edges)
    mapping = {}
    gleft, gright, extra = _GADGET_PARTS
    mapping.update(zip(gleft, left))
    mapping.update(zip(gright, right))
    mapping.update(zip(extra, range(base, n)))
    return host.union(relabel(h, mapping, n))


def eulerian_girth4(n: int, m: int) -> Graph:
    """Eulerian graph of order n >= 6, size m and girth >= 4.

    Same parity as n: every ``n <= m <= M(n)`` except ``M(n)-2`` for n >= 8.
    Opposite parity: only ``M(n-2) +- 1`` (even n >= 10) and ``M(n)-1, M(n)-3``
    (odd n >= 9).
    """
    if n < 6:
        raise InvalidParameter(f"need n >= 6, got {n}")
    top = M_girth4(n)
    if (m - n) % 2:
        if m in _opposite_parity_sizes(n):
            return _gadget_substitution(n, m)
        raise Unsupported(f"no construction for order {n}, size {m} of opposite parity",
                          reason="opposite-parity size not covered")
    if m == top - 2 and n >= 8:
        raise Nonexistent(f"no eulerian girth-4 graph of order {n} and size {m}",
                          reason=f"size M(n)-2 (M(n)={top}) is impossible")
    if not n <= m <= top:
        raise Unsupported(f"size {m} outside [{n}, {top}] for order {n}",
                          reason="outside constructive range")
    if n % 2 == 0:
        return _even_order_girth4(n, m)
    g = eulerian_girth4(n - 1, m - 1)
    return subdivide(g, min(g.edges))


def eulerian_graph(n: int, m: int, min_girth: int = 3) -> Graph:
    if min_girth <= 3:
        return eulerian_girth3(n, m)
    if min_girth == 4:
        return eulerian_girth4(n, m)
    raise Unsupported(f"girth {min_girth} constructions are not available",
                      reason="girth >= 5 not supported")


def girth3_sizes(n: int) -> list[int]:
    big = _max_size_girth3(n)
    return [m for m in range(n, big + 1) if m not in (big - 1, big - 2)]


def girth4_sizes(n: int) -> list[int]:
    top = M_girth4(n)
    same = [m for m in range(n, top + 1, 2) if not (m == top - 2 and n >= 8)]
    return sorted(same + list(_opposite_parity_sizes(n)))


def graph_from_json(obj: dict) -> Graph:
    if obj.get("format") != "pairsym-graph/1":
        raise InvalidParameter(f"not a pairsym-graph/1 document: {obj.get('format')!r}")
    return Graph(int(obj["order"]), [tuple(e) for e in obj["edges"]])
