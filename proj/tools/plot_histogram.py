#!/usr/bin/env python3
"""Plot a histogram written by `symsector analyze --hist`, with the fitted curves.

    symsector analyze --in mom.csv --out report.json --hist hist.txt
    python3 tools/plot_histogram.py hist.txt report.json -o hist.png
"""
import argparse
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("hist")
    ap.add_argument("report", nargs="?")
    ap.add_argument("-o", "--output", default="histogram.png")
    ap.add_argument("--log", action="store_true", help="logarithmic density axis")
    args = ap.parse_args()

    centers, density = np.loadtxt(args.hist, unpack=True, ndmin=2)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(centers, density, where="mid", color="0.3", lw=0.8, label="samples")

    if args.report:
        with open(args.report) as f:
            rep = json.load(f)
        s = np.linspace(centers.min(), centers.max(), 800)
        g = rep.get("gaussian", {})
        if "mu" in g:
            ax.plot(s, g["amplitude"] * np.exp(-((s - g["mu"]) ** 2) / (2 * g["sigma"] ** 2)), "r", lw=1,
                    label=f"gaussian mu={g['mu']:.4f} sigma={g['sigma']:.4f}")
        e = rep.get("exponential", {})
        if "a" in e:
            right = s[s >= rep["split_point"]]
            ax.plot(right, np.exp(e["a"] * right + e["b"]), "m", lw=1, label=f"exp slope={e['a']:.2f}")
        if rep.get("intersection") is not None:
            ax.axvline(rep["intersection"], color="y", ls=":", label=f"crossing s={rep['intersection']:.4f}")

    if args.log:
        ax.set_yscale("log")
        ax.set_ylim(bottom=max(density[density > 0].min() / 2, 1e-6))
    ax.set_xlabel(json.load(open(args.report))["column"] if args.report else "s")
    ax.set_ylabel("density")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
