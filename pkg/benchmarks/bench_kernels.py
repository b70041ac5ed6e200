"""Compare the compiled and pure kernels on the real workloads.

Run as: python benchmarks/bench_kernels.py

Workload 1: the weight-24 d-class identity (sparse convolution heavy).
Workload 2: fraction-free rank of a random 90x90 integer matrix
(arbitrary-precision pivot growth).  Both run once with the compiled
backend (if built) and once with HOPFGENUS_PURE=1 in a subprocess.
"""

import os
import subprocess
import sys
import time

SNIPPET = """
import time
from hopfgenus import kernel_backend, symm

t0 = time.perf_counter()
lhs = symm.d_classes(24)
rhs = symm.d_classes_exp_form(24)
assert all(a == b for a, b in zip(lhs.comps, rhs.comps))
t1 = time.perf_counter()

import random
from hopfgenus._kernels import rank_bareiss

rng = random.Random(12345)
matrix = [[rng.randint(-50, 50) for _ in range(90)] for _ in range(90)]
assert rank_bareiss(matrix) == 90
t2 = time.perf_counter()

print("%s %.3f %.3f" % (kernel_backend, t1 - t0, t2 - t1))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["HOPFGENUS_PURE"] = "1"
    else:
        env.pop("HOPFGENUS_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", SNIPPET], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise SystemExit(out.stderr)
    backend, conv, rank = out.stdout.split()
    return backend, float(conv), float(rank)


def main():
    rows = [run(pure=False), run(pure=True)]
    print("%-8s %14s %14s" % ("backend", "d-classes(24)", "rank 90x90"))
    for backend, conv, rank in rows:
        print("%-8s %13.3fs %13.3fs" % (backend, conv, rank))
    if rows[0][0] != rows[1][0]:
        speed = rows[1][1] / rows[0][1]
        print("convolution speedup: %.2fx" % speed)


if __name__ == "__main__":
    main()
