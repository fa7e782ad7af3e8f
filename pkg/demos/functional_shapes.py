"""Shape and large-N behaviour of the alternative entropy functionals.

Both functionals mirror the entropy's shape in H (zero and maximal at
H = 1/2, decreasing toward the endpoints) at a fraction of the cost of a
determinant.  The second part tabulates their large-N behaviour against
the package's asymptotic references, including the measured factor-of-four
gap between brute-force evaluation of the squared-covariance functional
and its conventional closed-form constants above H = 3/4.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fgn_entropy import e1_asymptotic, e2_asymptotic, functional_values

OUT = os.path.join(os.path.dirname(__file__), "output")


def shape_plot():
    h_grid = np.round(np.arange(0.0, 0.999, 0.005), 10)
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharex=True)
    for N in (2, 10, 100):
        e1 = [functional_values(H, N).e1 for H in h_grid]
        e2 = [functional_values(H, N).e2 for H in h_grid]
        axes[0].plot(h_grid, e1, label=f"N={N}")
        axes[1].plot(h_grid, e2, label=f"N={N}")
    axes[0].set_title("squared-covariance functional")
    axes[1].set_title("weighted absolute-covariance functional")
    for ax in axes:
        ax.axvline(0.5, color="grey", lw=0.8, ls="--")
        ax.set_xlabel("H")
        ax.legend()
    axes[1].set_ylim(-30, 2)
    fig.tight_layout()
    path = os.path.join(OUT, "functional_shapes.png")
    fig.savefig(path, dpi=120)
    print(f"wrote {path}")


def asymptotics_table():
    print("\nlarge-N behaviour vs the asymptotic references")
    print(f"{'H':>5} {'regime':>18} {'reference':>12} {'measured':>12} {'at N':>9}")
    cases = [
        (0.30, e2_asymptotic, lambda H, N: functional_values(H, N).e2 / N, 10**5),
        (0.70, e2_asymptotic, lambda H, N: functional_values(H, N).e2 / N ** 1.4, 10**5),
        (0.60, e1_asymptotic, lambda H, N: functional_values(H, N).e1, 10**5),
        (0.75, e1_asymptotic, lambda H, N: functional_values(H, N).e1 / np.log(N), 10**6),
        (0.80, e1_asymptotic, lambda H, N: functional_values(H, N).e1 / N ** 0.2, 10**6),
    ]
    for H, ref_fn, measure, N in cases:
        ref = ref_fn(H)
        measured = measure(H, N)
        print(f"{H:>5.2f} {ref.regime:>18} {ref.constant:>12.6f} {measured:>12.6f} {N:>9.0e}")
    print(
        "\nAbove H = 3/4 the brute-force values settle at one quarter of the"
        "\nconventional closed-form constants for the squared-covariance"
        "\nfunctional; the references keep the conventional forms and the"
        "\nacceptance suite reports the discrepancy."
    )


def main():
    os.makedirs(OUT, exist_ok=True)
    shape_plot()
    asymptotics_table()


if __name__ == "__main__":
    main()
