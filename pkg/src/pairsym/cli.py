"""Command-line interface: ``pairsym <command> ...``.

Exit codes: 0 success, 1 verification failed, 2 usage error,
3 nonexistent or unsupported.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass

from . import io, kernels
from .classical import GeneratorMatrix
from .constructions import ROUTES, construct
from .errors import (InvalidParameter, Nonexistent, NotConstructible, PairsymError,
                     VerificationFailed)
from .eulergraphs import Graph, eulerian_graph, eulerian_trail, girth, is_eulerian
from .pairmetric import (DEFAULT_BUDGET, Code, hamming_distance, pair_distance, singleton_bound,
                         verify_code, words_from_strings)
from .search import SEARCH_LIMIT, max_code_size

OK, FAILED, USAGE, UNAVAILABLE = 0, 1, 2, 3


@dataclass
class ExistenceEntry:
    n: int
    d: int
    q: int
    route: str
    status: str  # constructed-verified | constructed-unverified | nonexistent | unsupported
    detail: str = ""


# (n, d, family label, sampled q values, route)
TABLE2 = [
    (6, 5, "2", (2,), "table1"),
    (6, 5, "p odd prime", (3, 5), "linear-d5"),
    (7, 6, "2,3", (2, 3), "table1"),
    (7, 6, "p>=5 prime", (5, 7), "mds-nm1"),
    (8, 7, "3", (3,), "table1"),
    (8, 7, "p>=5 prime", (5, 7), "mds-nm1"),
    (8, 7, "2p, p odd prime", (6, 10), "development"),
    (8, 7, "2^r, r>=2", (4, 8), "mds-nm1"),
    (7, 5, "2", (2,), "table1"),
    (7, 5, "p odd prime", (3, 5), "linear-d5"),
    (8, 6, "2", (2,), "table1"),
    (8, 6, "p odd prime", (3, 5), "interleave-rs"),
    (9, 7, "2,3,5", (2, 3, 5), "table1"),
    (9, 7, "p>=7 prime", (7, 11), "mds-nm2"),
    (10, 8, "2,3", (2, 3), "table1"),
    (10, 8, "p>=5 prime", (5, 7), "interleave-rs"),
]


def _say(*parts):
    print(*parts, flush=True)


def _err(msg):
    print(f"pairsym: {msg}", file=sys.stderr, flush=True)


# -- commands ---------------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        code = construct(args.n, args.d, args.q, method=args.method, budget=args.budget,
                         jobs=args.jobs)
    except NotConstructible as exc:
        _say(str(exc) if isinstance(exc, Nonexistent) else f"unsupported: {exc}")
        return UNAVAILABLE
    except VerificationFailed as exc:
        _err(str(exc))
        return FAILED
    v = code.verification
    _say(f"route: {code.provenance.get('method')}")
    _say(f"size: {len(code)}")
    if v.verified:
        _say(f"verified d: {v.d} ({v.method}), bound={v.bound}, MDS")
    else:
        _say(f"claimed d: {code.claimed_d}, not verified (over budget {args.budget})")
    if args.output:
        io.write(args.output, code)
        _say(f"wrote {args.output}")
    return OK


def _load_code(path) -> Code:
    obj = io.read(path)
    if isinstance(obj, GeneratorMatrix):
        return obj.span()
    if not isinstance(obj, Code):
        raise InvalidParameter(f"{path} holds a graph, not a code")
    return obj


def cmd_verify(args) -> int:
    code = _load_code(args.file)
    if len(code) < 2:
        _say(f"size={len(code)}: minimum distance undefined")
        return FAILED if (args.expect_d is not None or args.expect_mds) else OK
    v = verify_code(code, budget=args.budget, jobs=args.jobs)
    if not v.verified:
        _say(f"size={len(code)}: over budget {args.budget}; raise --budget to verify")
        return FAILED
    verdict = "MDS" if v.mds else "not MDS"
    if v.size == v.bound:
        _say(f"d={v.d}, size={v.size}, bound={v.bound}, {verdict}")
    else:
        _say(f"d={v.d}, size={v.size} ≠ {v.bound}, bound={v.bound}, {verdict}")
    ok = True
    if args.expect_d is not None and v.d != args.expect_d:
        _say(f"expected d={args.expect_d}")
        ok = False
    if args.expect_mds and not v.mds:
        ok = False
    return OK if ok else FAILED


def cmd_graph(args) -> int:
    try:
        g = eulerian_graph(args.order, args.size, args.min_girth)
    except NotConstructible as exc:
        kind = "nonexistent" if isinstance(exc, Nonexistent) else "unsupported"
        _say(f"{kind}: {exc}")
        return UNAVAILABLE
    _say(f"order={g.order}, size={g.size}, girth={girth(g)}, eulerian={is_eulerian(g)}")
    if args.output:
        io.write(args.output, g)
        _say(f"wrote {args.output}")
    else:
        _say(" ".join(f"{u}-{v}" for u, v in g.sorted_edges()))
    return OK


def cmd_trail(args) -> int:
    g = io.read(args.file)
    if not isinstance(g, Graph):
        raise InvalidParameter(f"{args.file} does not hold a graph")
    if not is_eulerian(g):
        _say("graph is not eulerian")
        return FAILED
    trail = eulerian_trail(g)
    _say(" ".join(map(str, trail)))
    _say(f"length {len(trail) - 1}")
    return OK


def table2_entries(budget=DEFAULT_BUDGET, jobs=1):
    for n, d, label, qs, route in TABLE2:
        for q in qs:
            try:
                code = construct(n, d, q, method=route, budget=budget, jobs=jobs)
            except VerificationFailed as exc:
                yield label, ExistenceEntry(n, d, q, route, "constructed-unverified", str(exc))
                continue
            except NotConstructible as exc:
                status = "nonexistent" if isinstance(exc, Nonexistent) else "unsupported"
                yield label, ExistenceEntry(n, d, q, route, status, str(exc))
                continue
            v = code.verification
            if v.verified and v.mds:
                yield label, ExistenceEntry(n, d, q, route, "constructed-verified",
                                            f"size={v.size}, d={v.d}")
            else:
                yield label, ExistenceEntry(n, d, q, route, "constructed-unverified",
                                            f"size={len(code)}")


def cmd_table2(args) -> int:
    _say(f"{'n':>3} {'d':>3} {'q':>4}  {'family':<18} {'route':<14} status")
    ok = True
    for label, e in table2_entries(args.budget, args.jobs):
        ok &= e.status == "constructed-verified"
        _say(f"{e.n:>3} {e.d:>3} {e.q:>4}  {label:<18} {e.route:<14} {e.status} ({e.detail})")
    _say("all rows verified" if ok else "some rows failed")
    return OK if ok else FAILED


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    res = max_code_size(args.n, args.d, args.q, target=args.target)
    elapsed = time.perf_counter() - t0
    bound = singleton_bound(args.n, args.d, args.q) if args.d >= 2 else None
    kind = "maximum" if res.exhaustive else "found at least"
    _say(f"({args.n},{args.d})_{args.q}: {kind} {res.size}"
         + (f", Singleton bound {bound}" if bound else "")
         + f" [{res.orbits} orbit representatives, {res.nodes} nodes, {elapsed:.2f}s]")
    if args.show:
        for w in res.witness:
            _say("".join(map(str, w)) if args.q <= 10 else ",".join(map(str, w)))
    if args.target is not None and res.size < args.target:
        return UNAVAILABLE
    return OK


def cmd_dist(args) -> int:
    try:
        u, v = words_from_strings([args.u, args.v])
    except ValueError:
        raise InvalidParameter("words are comma-separated integers, e.g. 0,1,1") from None
    _say(f"pair distance {pair_distance(u, v)}, hamming distance {hamming_distance(u, v)}")
    return OK


# -- parser -----------------------------------------------------------------------


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pairsym", description="MDS symbol-pair codes")
    parser.add_argument("--backend", choices=kernels.BACKENDS,
                        help="distance kernel backend (default: compiled if available)")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgeted(p):
        p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                       help="verification work cap (default %(default)s)")
        p.add_argument("--jobs", type=_positive, default=1, help="worker threads")

    p = sub.add_parser("construct", help="build and verify an MDS (n,d)_q pair code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=list(ROUTES))
    p.add_argument("-o", "--output")
    budgeted(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="brute-force check a code or generator file")
    p.add_argument("file")
    p.add_argument("--expect-d", type=int)
    p.add_argument("--expect-mds", action="store_true")
    budgeted(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="eulerian graph of given order, size and girth")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--min-girth", type=int, choices=(3, 4), default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("trail", help="print a closed eulerian trail of a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_trail)

    p = sub.add_parser("table2", help="construct and verify the catalogued parameter rows")
    budgeted(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("search", help=f"exact maximum code size (q^n <= {SEARCH_LIMIT})")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target", type=_positive)
    p.add_argument("--show", action="store_true", help="print a largest code found")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dist", help="pair distance of two comma-separated words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_dist)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        try:
            kernels.use_backend(args.backend)
        except ImportError as exc:
            _err(f"backend {args.backend!r} unavailable: {exc}")
            return USAGE
    try:
        return args.func(args)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK
    except (InvalidParameter, OSError) as exc:
        _err(str(exc))
        return USAGE
    except PairsymError as exc:
        _err(str(exc))
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
