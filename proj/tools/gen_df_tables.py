#!/usr/bin/env python3
"""Simulate Dickey-Fuller tau quantiles and emit src/unit_root_tables.cpp.

The tau statistic is the t-ratio on y_{t-1} in the regression of dy_t on y_{t-1}
plus deterministic terms, with y a driftless Gaussian random walk (y_0 = 0).
Quantiles are stored per deterministic case on a grid of sample sizes; the
library interpolates linearly in 1/n between rows.

Usage: gen_df_tables.py [--reps N] [--seed S] > src/unit_root_tables.cpp
"""
import argparse
import numpy as np

SIZES = [25, 50, 100, 250, 500, 1000, 2500]
PROBS = ([0.001, 0.0025, 0.005, 0.0075]
         + [round(0.01 * i, 2) for i in range(1, 100)]
         + [0.9925, 0.995, 0.9975, 0.999])
CASES = ["none", "constant", "constant_trend"]


def residualize(v, case, t):
    if case == "none":
        return v
    if case == "constant":
        return v - v.mean(axis=1, keepdims=True)
    tc = t - t.mean()
    vc = v - v.mean(axis=1, keepdims=True)
    b = (vc @ tc) / (tc @ tc)
    return vc - np.outer(b, tc)


def taus(rng, n, reps, case, chunk=20000):
    out = []
    t = np.arange(1, n + 1, dtype=float)
    k = {"none": 1, "constant": 2, "constant_trend": 3}[case]
    done = 0
    while done < reps:
        m = min(chunk, reps - done)
        e = rng.standard_normal((m, n + 1))
        y = np.cumsum(e, axis=1)
        y -= y[:, :1]  # y_0 = 0
        dy = np.diff(y, axis=1)
        ylag = y[:, :-1]
        x = residualize(ylag, case, t)
        d = residualize(dy, case, t)
        sxx = np.einsum("ij,ij->i", x, x)
        rho = np.einsum("ij,ij->i", x, d) / sxx
        resid = d - rho[:, None] * x
        s2 = np.einsum("ij,ij->i", resid, resid) / (n - k)
        out.append(rho / np.sqrt(s2 / sxx))
        done += m
    return np.concatenate(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=200000)
    ap.add_argument("--seed", type=int, default=20080101)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    table = {}
    for case in CASES:
        table[case] = [np.quantile(taus(rng, n, args.reps, case), PROBS) for n in SIZES]

    print("// Generated by tools/gen_df_tables.py --reps %d --seed %d. Do not edit." % (args.reps, args.seed))
    print('#include "unit_root_tables.hpp"\n')
    print("namespace tsecon::detail {\n")
    print("const std::array<int, kDfSizes> kDfSampleSizes = {%s};\n" % ", ".join(map(str, SIZES)))
    print("const std::array<double, kDfProbs> kDfProbabilities = {")
    for i in range(0, len(PROBS), 8):
        print("    " + ", ".join("%.4f" % p for p in PROBS[i:i + 8]) + ",")
    print("};\n")
    print("const std::array<DfQuantileTable, 3> kDfQuantiles = {{")
    for case in CASES:
        print("    // %s" % case)
        print("    {{")
        for n, row in zip(SIZES, table[case]):
            print("        {  // n = %d" % n)
            for i in range(0, len(row), 6):
                print("            " + ", ".join("%.5f" % v for v in row[i:i + 6]) + ",")
            print("        },")
        print("    }},")
    print("}};\n")
    print("}  // namespace tsecon::detail")


if __name__ == "__main__":
    main()
