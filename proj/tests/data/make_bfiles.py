#!/usr/bin/env python3
# Copyright 2026 The chordlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerate the local b-files used by the oeis-check tests.

The build is hermetic, so the files are produced offline by an algorithm
that shares no code with the C++ library: C is obtained by series
reversion of D(x) = 1 + C(x D(x)^2) with D_n = (2n-1)!!, I = 2 - 1/D and
A = (1 + C)^2.  Early terms were compared by hand against the published
sequences.
"""
from fractions import Fraction
from pathlib import Path
import sys

N = 30


def mul(a, b):
    out = [Fraction(0)] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                out[i + j] += x * b[j]
    return out


def compose(f, g):
    out = [Fraction(0)] * N
    for c in reversed(f):
        out = mul(out, g)
        out[0] += c
    return out


def inverse(f):
    # compositional inverse of f with f[0] = 0, f[1] != 0
    g = [Fraction(0)] * N
    g[1] = 1 / f[1]
    for n in range(2, N):
        g[n] = -compose(f, g)[n] / f[1]
    return g


def reciprocal(f):
    g = [Fraction(0)] * N
    g[0] = 1 / f[0]
    for n in range(1, N):
        g[n] = -sum(f[k] * g[n - k] for k in range(1, n + 1)) / f[0]
    return g


D = [Fraction(1)] * N
for n in range(1, N):
    D[n] = D[n - 1] * (2 * n - 1)
y = [Fraction(0)] + mul(D, D)[: N - 1]  # x D^2
C = compose([Fraction(0)] + D[1:], inverse(y))
I = [-c for c in reciprocal(D)]
I[0] += 2
one_plus_c = C[:]
one_plus_c[0] += 1
A = mul(one_plus_c, one_plus_c)


def write(name, seq, first, count, head=None):
    with open(Path(__file__).with_name(name), "w") as fh:
        if head is not None:
            fh.write(f"0 {head}\n")
        for n in range(first, first + count):
            assert seq[n].denominator == 1
            fh.write(f"{n} {seq[n].numerator}\n")


if __name__ == "__main__":
    # A000699 has offset 0 with a(0) = 1 by convention.
    write("b000699.txt", C, 1, 25, head=1)
    write("b000698.txt", I, 0, 25)
    write("b088221.txt", A, 0, 20)
    print([int(c) for c in C[:10]], file=sys.stderr)
    print([int(c) for c in I[:10]], file=sys.stderr)
    print([int(c) for c in A[:10]], file=sys.stderr)
