import itertools

import networkx as nx
import pytest

import oracles
from pairsym.constructions import construct
from pairsym.errors import InvalidParameter, NotConstructible
from pairsym.search import SEARCH_LIMIT, max_code_size


def _nx_max(n, d, q):
    words = oracles.all_words(q, n)
    g = nx.Graph()
    g.add_nodes_from(range(len(words)))
    g.add_edges_from((i, j) for i, j in itertools.combinations(range(len(words)), 2)
                     if oracles.pair_dist(words[i], words[j]) >= d)
    clique, weight = nx.max_weight_clique(g, weight=None)
    return weight


@pytest.mark.parametrize("n,d,q", [(3, 2, 2), (3, 3, 2), (4, 3, 2), (4, 4, 2), (5, 4, 2),
                                   (3, 3, 3), (4, 4, 3), (5, 5, 2), (6, 5, 2)])
def test_matches_networkx(n, d, q):
    res = max_code_size(n, d, q)
    assert res.exhaustive and res.size == _nx_max(n, d, q)
    assert len(res.witness) == res.size
    assert oracles.min_dist(res.witness) >= d


def test_spec_examples():
    assert max_code_size(4, 4, 2).size == 4
    assert max_code_size(3, 3, 2).size == 4


def test_8_7_2_is_below_singleton():
    res = max_code_size(8, 7, 2)
    assert res.exhaustive and res.size <= 7
    # the exhaustive value; recorded so a regression in the pruning shows up
    assert res.size == 5
    assert oracles.min_dist(res.witness) >= 7


def test_deterministic():
    a, b = max_code_size(6, 5, 2), max_code_size(6, 5, 2)
    assert a.witness == b.witness and a.nodes == b.nodes


def test_target_stops_early():
    res = max_code_size(6, 4, 2, target=3)
    assert res.size >= 3 and not res.exhaustive
    full = max_code_size(6, 4, 2)
    assert full.size >= res.size


def test_guard():
    assert 2**12 <= SEARCH_LIMIT < 2**13
    with pytest.raises(InvalidParameter):
        max_code_size(13, 7, 2)
    with pytest.raises(InvalidParameter):
        max_code_size(4, 5, 2)


@pytest.mark.parametrize("n,d,q", [(n, d, q) for q in (2, 3, 4) for n in range(2, 7)
                                   for d in range(2, n + 1) if q**n <= 256])
def test_search_dominates_constructions(n, d, q):
    try:
        code = construct(n, d, q)
    except NotConstructible:
        return
    assert max_code_size(n, d, q, target=len(code)).size >= len(code)
