import argparse
import json
import sys

from chunklate.config import DataPaths, TranslatorOptions, load_resources
from chunklate.errors import DanglingReferenceError, DataFileError, NoPathError
from chunklate.generation import DummyPolicy
from chunklate.lattice import DEFAULT_PATH_CAP
from chunklate.pipeline import Translator


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("sentence", type=str, help="English sentence to translate.")
    parser.add_argument(
        "--all",
        action="store_true",
        help="Print the translation of every optimal path, one per line. Default "
        "to the first one only.",
    )
    parser.add_argument(
        "--dummy-policy",
        choices=[policy.value for policy in DummyPolicy],
        default=DummyPolicy.SUPPRESS_COPULA.value,
        help="How words covered by no corpus chunk are generated.",
    )
    parser.add_argument(
        "--max-paths",
        type=_positive_int,
        default=DEFAULT_PATH_CAP,
        help="Maximum number of paths enumerated in the trace.",
    )
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="Output format of the translations.",
    )
    parser.add_argument(
        "--trace",
        action="store_true",
        help="Print every intermediate stage as JSON on standard error.",
    )


def cmd_translate(args: argparse.Namespace, paths: DataPaths) -> int:
    try:
        resources = load_resources(paths)
        options = TranslatorOptions(
            dummy_policy=DummyPolicy(args.dummy_policy),
            max_paths=args.max_paths,
            emit_all=args.all,
        )
        translation = Translator(resources, options).translate(
            args.sentence, trace=args.trace
        )
    except (DataFileError, DanglingReferenceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NoPathError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1

    if args.format == "json":
        print(
            json.dumps(
                {"sentence": args.sentence, "translations": translation.translations},
                ensure_ascii=False,
            )
        )
    else:
        for line in translation.translations:
            print(line)
    if translation.trace is not None:
        print(
            json.dumps(translation.trace.to_json(), ensure_ascii=False, indent=2),
            file=sys.stderr,
        )
    return 0
