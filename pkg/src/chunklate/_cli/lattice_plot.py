import argparse
import sys
from pathlib import Path

import matplotlib.pyplot as plt

from chunklate._cli.common import add_data_arguments, configure_output, data_paths
from chunklate.config import load_resources
from chunklate.errors import DataFileError, NoPathError
from chunklate.lattice import build_lattice, select_optimal
from chunklate.pipeline import Translator
from chunklate.visualisation.lattice import plot_correspondence_matrix, plot_lattice


def main():
    parser = argparse.ArgumentParser(
        description=(
            "Plot the raw and tuned correspondence matrices of a sentence and the "
            "lattice of its tuned chunks."
        )
    )
    parser.add_argument("sentence", type=str, help="English sentence to analyse.")
    parser.add_argument(
        "-o",
        "--output",
        type=Path,
        default=None,
        help="Save the figure to this file instead of showing it.",
    )
    add_data_arguments(parser)
    args = parser.parse_args()
    configure_output(args.verbose)

    try:
        translator = Translator(load_resources(data_paths(args)))
    except DataFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    tagged = translator.analyze(args.sentence)
    raw, tuned = translator.tuned_matrix(tagged)
    lattice = build_lattice(tuned)
    try:
        optimal = select_optimal(lattice)
    except NoPathError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1

    fig, axes = plt.subplots(1, 3, figsize=(15, 5))
    plot_correspondence_matrix(raw, title="Candidate chunks", fig=fig, ax=axes[0])
    plot_correspondence_matrix(tuned, title="Tuned matrix", fig=fig, ax=axes[1])
    plot_lattice(
        lattice,
        highlight=optimal[0],
        title=" + ".join(optimal[0].labels),
        fig=fig,
        ax=axes[2],
    )
    fig.tight_layout()
    if args.output is None:
        plt.show()
    else:
        fig.savefig(args.output)
    return 0
