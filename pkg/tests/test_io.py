import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pairsym import io
from pairsym.alphabet import make_field, make_ring
from pairsym.classical import reed_solomon
from pairsym.constructions import construct, linear_d4, z6_seed, develop
from pairsym.errors import InvalidParameter
from pairsym.eulergraphs import complete_graph, gadget
from pairsym.pairmetric import Code


def _roundtrip_bytes(tmp_path, obj):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    io.write(a, obj)
    io.write(b, io.read(a))
    return a.read_bytes(), b.read_bytes()


@pytest.mark.parametrize("make", [
    lambda: construct(10, 9, 4),
    lambda: develop(z6_seed()),
    lambda: linear_d4(5, 6).span(),
    lambda: Code(make_field(2, 2), [[3, 1, 0], [0, 2, 1]], claimed_d=3),
])
def test_code_roundtrip_is_bit_identical(tmp_path, make):
    code = make()
    first, second = _roundtrip_bytes(tmp_path, code)
    assert first == second
    back = io.read(tmp_path / "a.json")
    assert back.alphabet == code.alphabet and back.claimed_d == code.claimed_d
    assert np.array_equal(back.sorted_words(), code.sorted_words())


def test_gen_and_graph_roundtrip(tmp_path):
    g = reed_solomon(make_field(7), 6, 3)
    first, second = _roundtrip_bytes(tmp_path, g)
    assert first == second and io.read(tmp_path / "a.json").tolist() == g.tolist()
    for graph in (complete_graph(7), gadget("H10_17")):
        first, second = _roundtrip_bytes(tmp_path, graph)
        assert first == second and io.read(tmp_path / "a.json").edges == graph.edges


def test_codewords_sorted_on_write():
    code = Code(make_ring(3), [[2, 0], [0, 2], [1, 1], [0, 1]])
    doc = json.loads(io.dumps(io.to_json(code)))
    assert doc["codewords"] == sorted(doc["codewords"])
    assert doc["format"] == io.CODE_FORMAT


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 2**32))
def test_random_codes_roundtrip(q, n, seed):
    raw = np.unique(np.random.default_rng(seed).integers(0, q, size=(8, n)), axis=0)
    code = Code(make_ring(q), raw)
    text = io.dumps(io.to_json(code))
    assert io.dumps(io.to_json(io.from_json(json.loads(text)))) == text


@pytest.mark.parametrize("doc", [
    {},
    {"format": "pairsym-code/9"},
    {"format": "pairsym-code/1", "alphabet": {"kind": "ring", "q": 2}, "n": 2},
    {"format": "pairsym-code/1", "alphabet": {"kind": "ring", "q": 2}, "n": 3,
     "codewords": [[0, 1]]},
    {"format": "pairsym-code/1", "alphabet": {"kind": "ring", "q": 2}, "n": 2,
     "codewords": [[0, 2]]},
    {"format": "pairsym-gen/1", "alphabet": {"kind": "ring", "q": 2}, "k": 2, "n": 2,
     "rows": [[1, 1]]},
    [1, 2],
])
def test_malformed_documents(doc):
    with pytest.raises(InvalidParameter):
        io.from_json(doc)


def test_bad_json_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(InvalidParameter):
        io.read(p)
