import argparse
import sys
import warnings

from chunklate.config import DataPaths, load_lexicon_resources, load_resources
from chunklate.corpus import validate
from chunklate.errors import DataFileError
from chunklate.generation import round_trip_findings
from chunklate.lexicon import analyze_word


def cmd_corpus_validate(args: argparse.Namespace, paths: DataPaths) -> int:
    try:
        # The empty corpus is reported below on its own line.
        with warnings.catch_warnings():
            warnings.filterwarnings("ignore", message="Empty corpus", category=UserWarning)
            resources = load_resources(paths)
    except DataFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if not len(resources.corpus):
        print("warning: empty corpus", file=sys.stderr)
        return 0

    report = validate(resources.corpus)
    report.findings.extend(
        round_trip_findings(resources.corpus, resources.lexicon, resources.affix_rules)
    )
    for finding in report.findings:
        print(finding)
    for note in report.duplicates:
        print(f"note\t{note}")
    return 0 if report.is_clean else 1


def cmd_lex_lookup(args: argparse.Namespace, paths: DataPaths) -> int:
    try:
        tagset, lexicon, affix_rules = load_lexicon_resources(paths)
    except DataFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    tagged = analyze_word(lexicon, affix_rules, args.word)
    print(f"{tagged.lemma} {tagged.category} [{','.join(tagset.ordered(tagged.tag.attrs))}]")
    for entry in lexicon.lookup(tagged.lemma, tagged.category):
        for attrs, text in entry.realizations.items():
            clitic = "\tclitic" if entry.clitic else ""
            print(f"  {tagset.key(attrs)}\t{text}{clitic}")
    return 0
