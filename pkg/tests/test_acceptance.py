"""The twelve acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS`` or ``criterion N: FAIL``
line (shown even under capture) and asserts its stated runtime limit.
Run directly with ``python tests/test_acceptance.py`` for just these lines.
"""

import contextlib
import sys
import time

import numpy as np
import pytest

import oracles
from pairsym.alphabet import make_field, make_ring
from pairsym.classical import reed_solomon, repetition
from pairsym.cli import main
from pairsym.constructions import (TABLE1, construct, dev_8_7_2p, develop, extend_by_graph,
                                   interleave, is_development_seed, linear_d4, linear_d5,
                                   linear_dn, product, table1_code, z6_seed)
from pairsym.errors import Nonexistent, NotConstructible
from pairsym.eulergraphs import (M_girth4, complete_graph, eulerian_girth3, eulerian_girth4,
                                 eulerian_trail, girth, girth4_sizes, is_closed_eulerian_trail,
                                 is_eulerian)
from pairsym.pairmetric import (hamming_distance, is_mds, min_pair_distance, min_pair_weight,
                                pair_array, pair_distance, singleton_bound, whole_space)
from pairsym.search import max_code_size


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, limit, failing_note=""):
        t0 = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        except BaseException as exc:
            with capsys.disabled():
                note = failing_note or (str(exc).splitlines() or [type(exc).__name__])[0]
                print(f"\ncriterion {number}: FAIL ({note})", flush=True)
            raise
        with capsys.disabled():
            print(f"\ncriterion {number}: PASS ({time.perf_counter() - t0:.2f}s)", flush=True)
    return run


def test_criterion_01_whole_space(criterion):
    with criterion(1, 1.0):
        for q in range(2, 5):
            for n in range(2, 7):
                report = is_mds(whole_space(make_ring(q), n))
                assert report.mds and report.d == 2 and report.size == q**n, (n, q)


def test_criterion_02_sandwich(criterion):
    with criterion(2, 10.0):
        rng = np.random.default_rng(0)
        for q in (2, 3):
            for n in range(2, 8):
                words = np.indices((q,) * n).reshape(n, -1).T
                pairs = pair_array(words, q)
                iu = np.triu_indices(len(words), 1)
                dh = (words[:, None, :] != words[None, :, :]).sum(axis=2)[iu]
                dp = (pairs[:, None, :] != pairs[None, :, :]).sum(axis=2)[iu]
                inner = (dh > 0) & (dh < n)
                assert np.all(dh[inner] + 1 <= dp[inner]) and np.all(dp[inner] <= 2 * dh[inner])
                assert np.array_equal(dp[~inner], dh[~inner])
                # spot-check the vectorised distances against the definition
                for k in rng.integers(0, len(dh), size=50):
                    u, v = words[iu[0][k]], words[iu[1][k]]
                    assert dp[k] == oracles.pair_dist(tuple(u), tuple(v)) == pair_distance(u, v)
                    assert dh[k] == hamming_distance(u, v)


def test_criterion_03_example_one(criterion):
    with criterion(3, 1.0):
        code = extend_by_graph(reed_solomon(make_field(2, 2), 5, 3), complete_graph(5))
        assert len(code) == 64 and code.n == 10
        assert min_pair_distance(code) == 9
        assert singleton_bound(10, 9, 4) == 64


def test_criterion_04_table1(criterion):
    with criterion(4, 10.0):
        assert len(TABLE1) == 11
        for q, n, d in sorted(TABLE1):
            code = table1_code(q, n, d).span()
            assert len(code) == q ** (n - d + 2), (q, n, d)
            assert min_pair_distance(code) == d, (q, n, d)


def test_criterion_05_linear_families(criterion):
    with criterion(5, 120.0):
        for q in range(2, 7):
            for n in range(4, 11):
                code = linear_d4(q, n).span()
                assert len(code) == q ** (n - 2) and min_pair_weight(code) == 4, (q, n)
        for q in range(2, 10):
            for n in range(2, 9):
                code = linear_dn(q, n).span()
                assert len(code) == q**2 and min_pair_distance(code) == n, (q, n)
        for q in (3, 5, 7):
            ns = [n for n in range(5, 2 * q + 4) if q ** (n - 3) <= 10**6]
            assert ns
            for n in ns:
                code = linear_d5(q, n).span()
                assert len(code) == q ** (n - 3) and min_pair_weight(code) == 5, (q, n)


def test_criterion_06_development(criterion):
    with criterion(6, 120.0):
        for p in (3, 5, 7, 11):
            seed = z6_seed() if p == 3 else dev_8_7_2p(p)
            assert is_development_seed(seed).ok, p
            code = develop(seed)
            assert len(code) == (2 * p) ** 3, p
            assert min_pair_distance(code) == 7, p


def test_criterion_07_product(criterion):
    with criterion(7, 60.0):
        code = product(construct(8, 7, 3), construct(8, 7, 4))
        assert code.q == 12 and len(code) == 1728
        assert min_pair_distance(code) == 7


def test_interleaved_repetition_codes():
    for q in range(2, 6):
        for n in range(2, 5):
            rep = repetition(make_ring(q), n)
            code = interleave(rep, rep)
            assert (code.n, len(code)) == (2 * n, q * q)
            assert min_pair_distance(code) == 2 * n


def test_interleaved_rs_as_measured():
    rs = reed_solomon(make_field(5), 4, 3).span()
    code = interleave(rs, rs)
    assert code.n == 8 and len(code) == 125 * 125 == singleton_bound(8, 4, 5)
    assert min_pair_distance(code) == 4


# Criterion 8 as stated asks for 625 words. Interleaving multiplies sizes, so
# two 125-word codes give 15625 (checked above); the stated size cannot occur.
@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="two 125-word codes interleave to 15625 words, not 625")
def test_criterion_08_interleave(criterion):
    note = "stated size 625 is unattainable: |C1|*|C2| = 125*125 = 15625"
    with criterion(8, 30.0, failing_note=note):
        for q in range(2, 6):
            for n in range(2, 5):
                rep = repetition(make_ring(q), n)
                assert min_pair_distance(interleave(rep, rep)) == 2 * n
        rs = reed_solomon(make_field(5), 4, 3).span()
        code = interleave(rs, rs)
        assert code.n == 8 and min_pair_distance(code) == 4
        assert len(code) == 625


def test_criterion_09_girth3_spectrum(criterion):
    with criterion(9, 30.0):
        for n in range(3, 17):
            top = n * ((n - 1) // 2)
            for m in range(n, top + 1):
                if m in (top - 1, top - 2):
                    with pytest.raises(NotConstructible):
                        eulerian_girth3(n, m)
                    continue
                g = eulerian_girth3(n, m)
                assert (g.order, g.size) == (n, m) and is_eulerian(g)
                assert is_closed_eulerian_trail(g, eulerian_trail(g))


def test_criterion_10_girth4_spectrum(criterion):
    with criterion(10, 120.0):
        for n in range(6, 17):
            top = M_girth4(n)
            sizes = set(girth4_sizes(n))
            same = {m for m in range(n, top + 1, 2) if not (m == top - 2 and n >= 8)}
            assert same <= sizes, n
            if n >= 9:
                odd = {M_girth4(n) - 1, M_girth4(n) - 3} if n % 2 else \
                    {M_girth4(n - 2) - 1, M_girth4(n - 2) + 1}
                assert odd <= sizes, n
            for m in sorted(sizes):
                g = eulerian_girth4(n, m)
                assert (g.order, g.size) == (n, m) and is_eulerian(g) and girth(g) >= 4
            if n >= 8:
                with pytest.raises(Nonexistent):
                    eulerian_girth4(n, top - 2)
        for n in range(4, 9):
            assert M_girth4(n) == oracles.max_even_graph(n), n


def test_criterion_11_search_8_7_2(criterion):
    with criterion(11, 300.0):
        res = max_code_size(8, 7, 2)
        assert res.exhaustive and res.size <= 7 < singleton_bound(8, 7, 2)
        assert oracles.min_dist(res.witness) >= 7


def test_criterion_12_table2(criterion, capsys):
    with criterion(12, 300.0):
        code = main(["table2"])
        out = capsys.readouterr().out
        assert code == 0, out


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
