"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends, the results are checked for equality
and the best-of-N wall time is printed.
"""
import argparse
import random
import sys
import timeit

from hyperperiodic import _pykernels

try:
    from hyperperiodic import _ckernels
except ImportError:
    _ckernels = None


def _workloads():
    rng = random.Random(0)

    # every element of Z/n + Z/2 against the three G3 cones at a large genus
    g = 400
    n = 2 * g + 2
    cones = [(n, 1, 0), (n, n - 1, 1), (2, 0, 1)]
    elements = [(a, b) for a in range(n) for b in range(2)]

    def orbits(impl):
        return [tuple(map(tuple, impl.cone_orbits((n, 2), h, cones))) for h in elements]

    # long words with lots of cancellation
    words = []
    for _ in range(200):
        w = []
        for _ in range(2000):
            x = rng.randint(1, 8)
            w.append(x if rng.random() < 0.5 else -x)
        words.append(tuple(w))

    def reduction(impl):
        return [tuple(impl.reduce_letters(w)) for w in words]

    # the F1 polygon at a large genus plus random pairings
    m = 8 * 2000 + 4
    base = [0] * m
    for j in range(m // 2):
        a, b = 2 * j, (2 * j + m // 2 + 1) % m
        base[a], base[b] = b, a
    pairings = [tuple(base)]
    for _ in range(5):
        edges = list(range(m))
        rng.shuffle(edges)
        p = [0] * m
        for a, b in zip(edges[::2], edges[1::2]):
            p[a], p[b] = b, a
        pairings.append(tuple(p))

    def classes(impl):
        return [tuple(impl.vertex_classes(m, p)) for p in pairings]

    return [
        (f"cone_orbits, all {len(elements)} elements of Z/{n}+Z/2", orbits),
        (f"reduce_letters, {len(words)} words of length 2000", reduction),
        (f"vertex_classes, {len(pairings)} pairings of a {m}-gon", classes),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python backend is available")
        return 1
    print(f"{'workload':<48} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for label, work in _workloads():
        if work(_pykernels) != work(_ckernels):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        py = min(timeit.repeat(lambda: work(_pykernels), number=1, repeat=args.repeat))
        c = min(timeit.repeat(lambda: work(_ckernels), number=1, repeat=args.repeat))
        print(f"{label:<48} {py:>11.4f} {c:>11.4f} {py / c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
