"""Compare the pure-Python and compiled kernels on real workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import itertools
import timeit

from eqgeom import _purekernels as pure
from eqgeom import automorphisms, geometry

try:
    from eqgeom import _speedups as fast
except ImportError:  # pragma: no cover
    fast = None


def _line_csr(G):
    indptr, first, second = [0], [], []
    for p in range(len(G.points)):
        for pos in G.lines_through[p]:
            a, b = (x for x in G.lines[pos] if x != p)
            first.append(a)
            second.append(b)
        indptr.append(len(first))
    return indptr, first, second


def workloads():
    G8, G9, G10 = (geometry.build_geometry(n, 2) for n in (8, 9, 10))
    G12 = geometry.build_geometry(12, 3)
    csr = _line_csr(G9)
    colors = [0] * len(G9.points)
    colors[0] = 1
    einvs = [e for _, e in automorphisms.exceptional_candidates(G8)]
    members = [[i for i, p in enumerate(G8.points) if (p >> a) & 1] for a in range(8)]
    clf = {k: k.Classifier(G8.points, members, einvs) for k in (pure, fast) if k}
    maps = [automorphisms.permutation_point_map(G8, p) for p in itertools.islice(itertools.permutations(range(1, 9)), 500)]
    return [
        ("intersection_graph (12,3)", lambda k: k.intersection_graph(G12.points, 3)),
        ("maximal_cliques (8,2)", lambda k: k.maximal_cliques(G8.adjacency)),
        ("diameter (10,2)", lambda k: k.diameter(G10.adjacency)),
        ("refine_colors lines (9,2)", lambda k: k.refine_colors(colors, *csr)),
        ("Classifier x500 (8,2)", lambda k: [clf[k].classify(f) for f in maps]),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", pure)] + ([("cython", fast)] if fast else [])
    print(f"{'kernel':30s}" + "".join(f"{name:>12s}" for name, _ in backends) + ("     speedup" if fast else ""))
    for label, job in workloads():
        times = [min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat)) for _, mod in backends]
        row = f"{label:30s}" + "".join(f"{t:11.3f}s" for t in times)
        if fast:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
