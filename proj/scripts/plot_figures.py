#!/usr/bin/env python3
"""Plot kerr-mzi CSV tables (figure and sweep outputs)."""

import argparse
import csv
import os
import sys


def read_table(path):
    with open(path, newline="") as handle:
        rows = [r for r in csv.reader(handle) if r and not r[0].startswith("#")]
    header, data = rows[0], rows[1:]
    columns = {name: [float(row[i]) for row in data] for i, name in enumerate(header)}
    return header, columns


def classify(header):
    if header[0] == "phi":
        return "signal"
    if "gain_tmsv" in header:
        return "gain"
    if "parity_tmsv" in header:
        return "sensitivity"
    return "generic"


def plot_signal(ax, header, cols):
    for name in header[1:]:
        ax.plot(cols["phi"], cols[name], label=name)
    ax.set_xlabel(r"$\varphi$ (rad)")
    ax.set_ylabel(r"$\langle \Pi_b \rangle$")
    ax.legend(fontsize=8)


def plot_sensitivity(ax, header, cols):
    nbar = cols["nbar"]
    ax.fill_between(nbar, cols["limit_n32"], cols["bgsl_n2"], alpha=0.2, color="gray",
                    label=r"$1/\bar N^{3/2}$ .. $1/\bar N^2$")
    styles = {
        "parity_tf": ("s-", "tab:green"), "qcr_tf": ("-", "tab:green"),
        "parity_tmsv": ("s-", "tab:red"), "qcr_tmsv": ("-", "tab:red"),
        "parity_ec": ("s-", "tab:blue"), "qcr_ec": ("-", "tab:blue"),
        "generalized_tmsv": ("-.", "black"),
    }
    for name in header[1:]:
        if name in ("limit_n32", "bgsl_n2"):
            continue
        style, color = styles.get(name, ("-", None))
        ax.plot(nbar, cols[name], style, color=color, label=name, markersize=3)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"$\bar N$")
    ax.set_ylabel(r"$\Delta\varphi$")
    ax.legend(fontsize=7)


def plot_gain(ax, header, cols):
    nbar = cols["nbar"]
    for name in header[1:]:
        style = "--k" if name == "gain_asymptote" else ".-"
        ax.plot(nbar, cols[name], style, label=name, markersize=4)
    ax.set_xscale("log")
    ax.set_xlabel(r"$\bar N$")
    ax.set_ylabel("gain (dB)")
    ax.legend(fontsize=8)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csvs", nargs="+", help="CSV tables emitted by kerr-mzi")
    parser.add_argument("--outdir", default=".", help="directory for the PNGs")
    args = parser.parse_args()

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required: pip install matplotlib")

    os.makedirs(args.outdir, exist_ok=True)
    for path in args.csvs:
        header, cols = read_table(path)
        kind = classify(header)
        fig, ax = plt.subplots(figsize=(5, 3.4), dpi=150)
        if kind == "signal":
            plot_signal(ax, header, cols)
        elif kind == "sensitivity":
            plot_sensitivity(ax, header, cols)
        elif kind == "gain":
            plot_gain(ax, header, cols)
        else:
            for name in header[1:]:
                ax.plot(cols[header[0]], cols[name], label=name)
            ax.set_xlabel(header[0])
            ax.legend(fontsize=8)
        fig.tight_layout()
        out = os.path.join(args.outdir,
                           os.path.splitext(os.path.basename(path))[0] + ".png")
        fig.savefig(out)
        plt.close(fig)
        print(f"wrote {out}")


if __name__ == "__main__":
    main()
