#!/usr/bin/env python3
# Copyright 2026 The synthkit Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates corpus/rng_rom.v: a 64-entry ROM of LCG bytes as nested ternaries."""

import sys


def lcg(seed):
    state = seed
    while True:
        state = (state * 1103515245 + 12345) & 0x7FFFFFFF
        yield (state >> 16) & 0xFF


def tree(bit, lo, words):
    if bit < 0:
        return "8'h%02x" % words[lo]
    half = 1 << bit
    return "(addr[%d] ? %s : %s)" % (bit, tree(bit - 1, lo + half, words), tree(bit - 1, lo, words))


def main():
    gen = lcg(2026)
    words = [next(gen) for _ in range(64)]
    out = sys.stdout
    out.write("// 64 x 8 ROM of fixed pseudo-random bytes (generated by tools/gen_rng_rom.py).\n")
    out.write("module rng_rom(\n  input [5:0] addr,\n  output [7:0] data\n);\n")
    out.write("  assign data = %s;\n" % tree(5, 0, words))
    out.write("endmodule\n")


if __name__ == "__main__":
    main()
