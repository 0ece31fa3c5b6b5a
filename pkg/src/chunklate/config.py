"""Data file locations and engine options."""

import logging
import os
import typing as ty
from dataclasses import dataclass, replace
from pathlib import Path

from chunklate.corpus import Corpus, load_corpus
from chunklate.errors import DataFileError
from chunklate.generation import DummyPolicy
from chunklate.lattice import DEFAULT_PATH_CAP
from chunklate.lexicon import AffixRule, Lexicon, load_affix_rules, load_lexicon
from chunklate.tagset import DEFAULT_TAGSET, Tagset, load_tagset

logger = logging.getLogger(__name__)

DATA_ENVIRONMENT_VARIABLE = "CHUNKLATE_DATA"
BUNDLED_DATA = Path(__file__).parent / "fixtures"

TAGSET_FILE = "tagset.json"
LEXICON_FILE = "lexicon.jsonl"
AFFIXES_FILE = "affixes.jsonl"
CORPUS_FILE = "corpus.jsonl"


def resolve_data_directory(explicit: ty.Optional[Path] = None) -> Path:
    """Explicit directory, else ``$CHUNKLATE_DATA``, else the bundled fixtures."""
    if explicit is not None:
        return Path(explicit)
    from_environment = os.environ.get(DATA_ENVIRONMENT_VARIABLE)
    if from_environment:
        return Path(from_environment)
    return BUNDLED_DATA


@dataclass(frozen=True)
class DataPaths:
    tagset: Path
    lexicon: Path
    affixes: Path
    corpus: Path

    @classmethod
    def from_directory(cls, directory: Path) -> "DataPaths":
        return cls(
            tagset=directory / TAGSET_FILE,
            lexicon=directory / LEXICON_FILE,
            affixes=directory / AFFIXES_FILE,
            corpus=directory / CORPUS_FILE,
        )

    def with_overrides(self, **paths: ty.Optional[Path]) -> "DataPaths":
        """Replace the paths given explicitly, ignoring None values."""
        return replace(self, **{k: Path(v) for k, v in paths.items() if v is not None})


@dataclass(frozen=True)
class Resources:
    tagset: Tagset
    lexicon: Lexicon
    affix_rules: tuple[AffixRule, ...]
    corpus: Corpus


@dataclass(frozen=True)
class TranslatorOptions:
    dummy_policy: DummyPolicy = DummyPolicy.SUPPRESS_COPULA
    max_paths: int = DEFAULT_PATH_CAP
    emit_all: bool = False

    def __post_init__(self):
        object.__setattr__(self, "dummy_policy", DummyPolicy(self.dummy_policy))
        if self.max_paths < 1:
            raise RuntimeError(f"max_paths must be positive, got {self.max_paths}.")


def _open(path: Path) -> ty.TextIO:
    try:
        return open(path, "r", encoding="utf-8")
    except OSError as e:
        raise DataFileError(f"cannot read file: {e.strerror}", source=str(path)) from e


def load_tagset_or_default(path: Path) -> Tagset:
    if not path.exists():
        logger.info("No tagset at %s, using the built-in one.", path)
        return DEFAULT_TAGSET
    return load_tagset(path)


def load_lexicon_resources(paths: DataPaths) -> tuple[Tagset, Lexicon, tuple[AffixRule, ...]]:
    tagset = load_tagset_or_default(paths.tagset)
    with _open(paths.lexicon) as f:
        lexicon = load_lexicon(f, tagset)
    with _open(paths.affixes) as f:
        affix_rules = load_affix_rules(f, tagset)
    return tagset, lexicon, affix_rules


def load_resources(paths: DataPaths) -> Resources:
    """Load every data file.

    :raise DataFileError: when a file is missing, unreadable or malformed.
    """
    tagset, lexicon, affix_rules = load_lexicon_resources(paths)
    with _open(paths.corpus) as f:
        corpus = load_corpus(f, tagset)
    return Resources(tagset, lexicon, affix_rules, corpus)
