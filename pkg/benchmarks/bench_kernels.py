"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 1]

Times, for each available backend on random codes of growing redundancy:
the bare FGLM kernel, the full ``compute_gb`` (kernel plus basis assembly),
and batch reduction of a fixed sample of random standard words.
"""

from __future__ import annotations

import argparse
import random
import time

from codegb.code import BinaryCode, BinaryMatrix
from codegb.groebner import compute_gb
from codegb.kernels import BACKENDS

SIZES = [(12, 6), (16, 8), (20, 8), (24, 8), (28, 10)]
SAMPLE = 20000


def random_code(rng: random.Random, n: int, k: int) -> BinaryCode:
    while True:
        code = BinaryCode.from_generator(BinaryMatrix(tuple(rng.getrandbits(n) for _ in range(k)), n))
        if code.k == k:
            return code


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    names = sorted(BACKENDS)
    print(f"backends: {', '.join(names)}")
    header = f"{'n':>3} {'k':>3} {'|N|':>7}  {'task':<7}" + "".join(f"{b:>10}" for b in names)
    if len(names) == 2:
        header += f"{'speedup':>9}"
    print(header)
    for n, k in SIZES:
        code = random_code(rng, n, k)
        words = [rng.getrandbits(n) for _ in range(SAMPLE)]
        rows = {"kernel": [], "gb": [], "reduce": []}
        for b in names:
            kern = BACKENDS[b]
            rows["kernel"].append(best_of(lambda: kern.fglm(n, code.sigma_rows), args.repeat))
            rows["gb"].append(best_of(lambda: compute_gb(code, backend=b, force=True), args.repeat))
            red = compute_gb(code, backend=b, force=True).reducer(b)
            rows["reduce"].append(best_of(lambda: red.reduce_many(words), args.repeat))
        for task, row in rows.items():
            line = f"{n:>3} {k:>3} {1 << (n - k):>7}  {task:<7}" + "".join(f"{t * 1e3:>8.1f}ms" for t in row)
            if len(row) == 2:
                line += f"{row[1] / row[0]:>8.1f}x"
            print(line, flush=True)

if __name__ == "__main__":
    main()
