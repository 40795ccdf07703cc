#!/usr/bin/env python3
# Copyright 2026 The caylerian Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the bundled b-files in data/oeis without network access.

Uses methods independent of the C++ engine: the Fubini recurrence,
inclusion-exclusion over row and column supports for matrix counts, and
brute-force descent counting over Cayley words for the triangle.
"""
import itertools
import math
import sys
from pathlib import Path

N_MAX = 12
TRIANGLE_ROWS = 7


def fubini(n_max):
    a = [1]
    for n in range(1, n_max + 1):
        a.append(sum(math.comb(n, k) * a[n - k] for k in range(1, n + 1)))
    return a


def matrices(n, binary):
    if n == 0:
        return 1
    cells = (lambda q: math.comb(q, n)) if binary else (lambda q: math.comb(q + n - 1, n) if q else 0)
    total = 0
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            for i in range(r + 1):
                for j in range(c + 1):
                    sign = -1 if (i + j) % 2 else 1
                    total += sign * math.comb(r, i) * math.comb(c, j) * cells((r - i) * (c - j))
    return total


def is_cayley(w):
    return set(w) == set(range(1, max(w) + 1))


def triangle_row(n):
    row = [0] * n
    for w in itertools.product(range(1, n + 1), repeat=n):
        if is_cayley(w):
            row[sum(1 for i in range(n - 1) if w[i] >= w[i + 1])] += 1
    return row


def write(path, header, terms):
    with open(path, "w") as f:
        f.write(f"# {header}\n")
        for i, v in terms:
            f.write(f"{i} {v}\n")


def main(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    write(out / "b000670.txt", "A000670 ordered set partitions", enumerate(fubini(N_MAX)))
    write(out / "b120733.txt", "A120733 matrices over N with sum n, no zero row or column",
          [(n, matrices(n, False)) for n in range(N_MAX + 1)])
    write(out / "b101370.txt", "A101370 0/1 matrices with n ones, no zero row or column",
          [(n, matrices(n, True)) for n in range(N_MAX + 1)])
    flat = [v for n in range(1, TRIANGLE_ROWS + 1) for v in triangle_row(n)]
    write(out / "b366173.txt", "A366173 Cayley permutations by weak descents, rows n>=1",
          enumerate(flat, start=1))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "oeis")
