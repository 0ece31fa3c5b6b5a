import argparse
import logging
import sys
from pathlib import Path

from chunklate.config import DataPaths, resolve_data_directory


def add_data_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("data files")
    group.add_argument(
        "--data",
        type=Path,
        default=None,
        help="Directory holding tagset.json, lexicon.jsonl, affixes.jsonl and "
        "corpus.jsonl. Default to $CHUNKLATE_DATA, then to the bundled fixtures.",
    )
    group.add_argument("--tagset", type=Path, default=None, help="Tagset file path.")
    group.add_argument("--lexicon", type=Path, default=None, help="Lexicon file path.")
    group.add_argument("--affixes", type=Path, default=None, help="Affix rules file path.")
    group.add_argument("--corpus", type=Path, default=None, help="Corpus file path.")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress on standard error; repeat for debug output.",
    )


def data_paths(args: argparse.Namespace) -> DataPaths:
    paths = DataPaths.from_directory(resolve_data_directory(args.data))
    return paths.with_overrides(
        tagset=args.tagset,
        lexicon=args.lexicon,
        affixes=args.affixes,
        corpus=args.corpus,
    )


def configure_output(verbosity: int) -> None:
    """UTF-8 standard streams and logging on standard error."""
    for stream in (sys.stdout, sys.stderr):
        reconfigure = getattr(stream, "reconfigure", None)
        if reconfigure is not None:
            reconfigure(encoding="utf-8")
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s:%(name)s: %(message)s",
    )
