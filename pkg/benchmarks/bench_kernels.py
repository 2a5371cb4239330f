"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from rooted_turan import (
    _core,
    blow_up,
    cycle,
    extremal_number,
    find_subgraph,
    is_balanced,
    subdivide,
    tree_D,
    tree_T,
)


def workloads():
    big = subdivide(tree_D(3, 3))  # 19 non-roots: 2^19 subsets
    wide = blow_up(tree_T(4, 7), 4)  # 16 non-roots
    host = blow_up(tree_D(2, 1), 6)
    bip = blow_up(tree_D(2, 2), 10)  # bipartite, so odd cycles force exhaustive search
    return [
        ("balance sub(D(3,3))", lambda: is_balanced(big, budget=24)),
        ("balance T(4,7)^4", lambda: is_balanced(wide, budget=24)),
        ("embed C6 in D(2,1)^6", lambda: find_subgraph(host, cycle(6))),
        ("embed absent C7 in D(2,2)^10", lambda: find_subgraph(bip, cycle(7))),
        ("embed absent C9 in D(2,1)^6", lambda: find_subgraph(host, cycle(9))),
        ("ex(8, C4)", lambda: extremal_number(8, cycle(4))),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _core.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; timing the python kernels only")
    prev = _core.backend()
    print(f"{'workload':32}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    try:
        for name, fn in workloads():
            row = {}
            for b in backends:
                _core.use_backend(b)
                row[b] = best_of(fn, args.repeat)
            line = f"{name:32}" + "".join(f"{row[b]:11.4f}s" for b in backends)
            if len(backends) > 1:
                line += f"{row['python'] / row['compiled']:11.1f}x"
            print(line)
    finally:
        _core.use_backend(prev)


if __name__ == "__main__":
    main()
