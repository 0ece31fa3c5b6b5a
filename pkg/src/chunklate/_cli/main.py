import argparse
import typing as ty

from chunklate import __version__
from chunklate._cli import translate
from chunklate._cli.common import add_data_arguments, configure_output, data_paths
from chunklate._cli.data_tools import cmd_corpus_validate, cmd_lex_lookup


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chunklate",
        description="Translate English sentences into Arabic by matching chunk "
        "templates of a parallel corpus.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    translate_parser = subparsers.add_parser(
        "translate", help="Translate a sentence and print the Arabic output."
    )
    translate.add_arguments(translate_parser)
    add_data_arguments(translate_parser)
    translate_parser.set_defaults(handler=translate.cmd_translate)

    trace_parser = subparsers.add_parser(
        "trace", help="Same as 'translate --trace --format json'."
    )
    translate.add_arguments(trace_parser)
    add_data_arguments(trace_parser)
    trace_parser.set_defaults(handler=translate.cmd_translate, trace=True, format="json")

    validate_parser = subparsers.add_parser(
        "validate",
        help="Check the corpus templates and regenerate the Arabic examples.",
    )
    add_data_arguments(validate_parser)
    validate_parser.set_defaults(handler=cmd_corpus_validate)

    lookup_parser = subparsers.add_parser(
        "lookup", help="Print the analysis and the realizations of an English word."
    )
    lookup_parser.add_argument("word", type=str, help="Word to analyse.")
    add_data_arguments(lookup_parser)
    lookup_parser.set_defaults(handler=cmd_lex_lookup)
    return parser


def main(argv: ty.Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_output(args.verbose)
    return args.handler(args, data_paths(args))
