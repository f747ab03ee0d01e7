"""Compare the compiled and numpy distance kernels on real codes.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from pairsym import kernels
from pairsym.alphabet import make_field
from pairsym.classical import reed_solomon
from pairsym.constructions import dev_8_7_2p, develop, interleave, linear_d5
from pairsym.pairmetric import pair_array


def workloads():
    rs = reed_solomon(make_field(5), 4, 3).span()
    yield "pairwise, development (8,7)_14", "min_row_distance", develop(dev_8_7_2p(7))
    yield "pairwise, interleaved RS (8,4)_5", "min_row_distance", interleave(rs, rs)
    yield "weight scan, linear_d5 (10,5)_7", "min_nonzero_weight", linear_d5(7, 10).span()
    yield "adjacency, development (8,7)_6", "far_adjacency", develop(dev_8_7_2p(3))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':<36} {'words':>7} " + " ".join(f"{b:>10}" for b in backends) + "  speedup")
    for label, fn_name, code in workloads():
        pairs = pair_array(code.words, code.q)
        fn = getattr(kernels, fn_name)
        extra = (code.claimed_d,) if fn_name == "far_adjacency" else ()
        times, results = [], []
        for b in backends:
            results.append(fn(pairs, *extra, backend=b))
            times.append(min(timeit.repeat(lambda: fn(pairs, *extra, backend=b),
                                           number=1, repeat=args.repeat)))
        same = all((r == results[0]).all() if hasattr(r, "all") else r == results[0]
                   for r in results)
        assert same, f"backends disagree on {label}"
        speed = f"{times[-1] / times[0]:7.1f}x" if len(times) > 1 else "      -"
        print(f"{label:<36} {len(code):>7} " + " ".join(f"{t:>9.3f}s" for t in times)
              + f"  {speed}")


if __name__ == "__main__":
    main()
