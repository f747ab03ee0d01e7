"""Canonical JSON files for codes, generator matrices and graphs.

Writing sorts codewords lexicographically and serialises with sorted keys and
no optional whitespace, so reading a file and writing it back reproduces the
same bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .alphabet import Alphabet
from .classical import GeneratorMatrix
from .errors import InvalidParameter
from .eulergraphs import Graph, graph_from_json
from .pairmetric import Code

CODE_FORMAT = "pairsym-code/1"
GEN_FORMAT = "pairsym-gen/1"
GRAPH_FORMAT = "pairsym-graph/1"


def _plain(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False,
                      default=_plain) + "\n"


def code_to_json(code: Code) -> dict:
    return {
        "format": CODE_FORMAT,
        "alphabet": code.alphabet.to_json(),
        "n": code.n,
        "claimed_d": code.claimed_d,
        "provenance": code.provenance,
        "codewords": code.sorted_words().tolist(),
    }


def code_from_json(doc: dict) -> Code:
    _expect(doc, CODE_FORMAT)
    alphabet = Alphabet.from_json(doc["alphabet"])
    words = doc["codewords"]
    n = int(doc["n"])
    if not words or any(len(w) != n for w in words):
        raise InvalidParameter(f"codewords must be a non-empty list of length-{n} words")
    d = doc.get("claimed_d")
    return Code(alphabet, words, claimed_d=None if d is None else int(d),
                provenance=doc.get("provenance"))


def gen_to_json(g: GeneratorMatrix) -> dict:
    return {"format": GEN_FORMAT, "alphabet": g.alphabet.to_json(), "k": g.k, "n": g.n,
            "rows": g.tolist()}


def gen_from_json(doc: dict) -> GeneratorMatrix:
    _expect(doc, GEN_FORMAT)
    g = GeneratorMatrix(Alphabet.from_json(doc["alphabet"]), doc["rows"])
    if (g.k, g.n) != (int(doc["k"]), int(doc["n"])):
        raise InvalidParameter(f"declared shape {doc['k']}x{doc['n']} != rows {g.k}x{g.n}")
    return g


def _expect(doc, fmt):
    if not isinstance(doc, dict) or doc.get("format") != fmt:
        got = doc.get("format") if isinstance(doc, dict) else type(doc).__name__
        raise InvalidParameter(f"expected a {fmt} document, got {got!r}")


def to_json(obj) -> dict:
    if isinstance(obj, Code):
        return code_to_json(obj)
    if isinstance(obj, GeneratorMatrix):
        return gen_to_json(obj)
    if isinstance(obj, Graph):
        return obj.to_json()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_json(doc: dict):
    """Rebuild whichever object the document's ``format`` names."""
    fmt = doc.get("format") if isinstance(doc, dict) else None
    readers = {CODE_FORMAT: code_from_json, GEN_FORMAT: gen_from_json,
               GRAPH_FORMAT: graph_from_json}
    if fmt not in readers:
        raise InvalidParameter(f"unknown document format {fmt!r}")
    try:
        return readers[fmt](doc)
    except (KeyError, TypeError) as exc:
        raise InvalidParameter(f"malformed {fmt} document: {exc}") from None


def write(path, obj) -> None:
    Path(path).write_text(dumps(to_json(obj)), encoding="utf-8")


def read(path):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"{path}: not valid JSON ({exc})") from None
    return from_json(doc)
