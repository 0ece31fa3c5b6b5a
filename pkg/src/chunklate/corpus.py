"""Chunk-aligned English-Arabic parallel corpus and its template index."""

import logging
import typing as ty
import unicodedata
import warnings
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType

from chunklate.errors import DataFileError, TemplateSyntaxError
from chunklate.records import json_records, source_name
from chunklate.tagset import DEFAULT_TAGSET, Tag, Tagset, check_tag, template_key
from chunklate.templates import ArabicTemplate, parse_template

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TemplatePair:
    """One corpus record: an English tag template and its Arabic generation template.

    The Arabic template text is parsed on construction and kept in ``arabic``.
    """

    id: int
    en_template: tuple[Tag, ...]
    ar_template: str
    en_example: ty.Optional[str] = None
    ar_example: ty.Optional[str] = None
    arabic: ArabicTemplate = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self):
        if not self.en_template:
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: pair {self.id} has an "
                "empty English template."
            )
        object.__setattr__(self, "en_template", tuple(self.en_template))
        if self.arabic is None:
            object.__setattr__(self, "arabic", parse_template(self.ar_template))

    def __len__(self) -> int:
        return len(self.en_template)

    @property
    def key(self) -> str:
        return template_key(self.en_template)

    def matches(self, query: ty.Sequence[Tag]) -> bool:
        """Length-preserving match, each template tag subsuming the query tag."""
        return len(query) == len(self.en_template) and all(
            template.subsumes(tag) for template, tag in zip(self.en_template, query)
        )


class Corpus:
    """Immutable sequence of :class:`TemplatePair` with a template index.

    ``index`` maps the canonical key of each English template to the ids of the
    pairs carrying it. Queries go through a coarser bucket keyed by the category
    sequence only, since a template matches any query with a superset of its
    attributes.
    """

    def __init__(self, pairs: ty.Iterable[TemplatePair] = ()):
        self.pairs: tuple[TemplatePair, ...] = tuple(pairs)
        index: dict[str, list[int]] = {}
        buckets: dict[tuple[str, ...], list[TemplatePair]] = {}
        by_id: dict[int, TemplatePair] = {}
        for pair in self.pairs:
            if pair.id in by_id:
                raise RuntimeError(f"Duplicated template pair id {pair.id}.")
            by_id[pair.id] = pair
            index.setdefault(pair.key, []).append(pair.id)
            buckets.setdefault(tuple(t.category for t in pair.en_template), []).append(pair)
        self.index = MappingProxyType({k: tuple(v) for k, v in index.items()})
        self._buckets = MappingProxyType({k: tuple(v) for k, v in buckets.items()})
        self._by_id = MappingProxyType(by_id)

    def __repr__(self):
        return f"Corpus(len={len(self)})"

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> ty.Iterator[TemplatePair]:
        return iter(self.pairs)

    def __getitem__(self, pair_id: int) -> TemplatePair:
        return self._by_id[pair_id]

    def match_exact(self, query: ty.Sequence[Tag]) -> list[TemplatePair]:
        if not query:
            raise ValueError("Cannot match an empty tag sequence.")
        bucket = self._buckets.get(tuple(tag.category for tag in query), ())
        return [pair for pair in bucket if pair.matches(query)]


def _parse_en_template(raw: ty.Any, tagset: Tagset) -> tuple[Tag, ...]:
    if not isinstance(raw, list) or not raw:
        raise ValueError("'en_template' must be a non-empty list")
    template = []
    for item in raw:
        tag = Tag(str(item["cat"]), frozenset(item.get("attrs", [])))
        check_tag(tag, tagset)
        template.append(tag)
    return tuple(template)


def load_corpus(source: ty.Iterable[str], tagset: Tagset = DEFAULT_TAGSET) -> Corpus:
    """Load JSON Lines records ``{"id", "en_template", "ar_template", "en_example"?, "ar_example"?}``.

    :raise DataFileError: on malformed records, unknown tokens, unparseable Arabic
        templates or duplicated ids; the error names the faulty line.
    """
    name = source_name(source)
    pairs: list[TemplatePair] = []
    seen: set[int] = set()
    for line_number, record in json_records(source):
        try:
            pair_id = int(record["id"])
            en_template = _parse_en_template(record["en_template"], tagset)
            ar_text = str(record["ar_template"])
            arabic = parse_template(ar_text, tagset)
        except TemplateSyntaxError as e:
            raise DataFileError(f"invalid Arabic template: {e}", name, line_number) from e
        except (KeyError, TypeError, ValueError) as e:
            raise DataFileError(f"invalid record: {e}", name, line_number) from e
        if pair_id in seen:
            raise DataFileError(f"duplicated id {pair_id}", name, line_number)
        seen.add(pair_id)
        ar_example = record.get("ar_example")
        pairs.append(
            TemplatePair(
                id=pair_id,
                en_template=en_template,
                ar_template=ar_text,
                en_example=record.get("en_example"),
                ar_example=None
                if ar_example is None
                else unicodedata.normalize("NFC", ar_example),
                arabic=arabic,
            )
        )
    logger.info("Loaded %d template pairs from %s.", len(pairs), name)
    if not pairs:
        warnings.warn(f"Empty corpus in {name}.")
    return Corpus(pairs)


@dataclass(frozen=True)
class Finding:
    kind: ty.Literal["dangling", "duplicate", "round-trip"]
    pair_ids: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        ids = ",".join(str(i) for i in self.pair_ids)
        return f"{self.kind}\t{ids}\t{self.message}"


@dataclass
class ValidationReport:
    """Result of :func:`validate`.

    ``findings`` are defects that make a pair unusable. ``duplicates`` list pairs
    sharing both templates; they are legitimate attestations of the same pattern
    (the matcher keeps one of them) and are reported as notes only.
    """

    findings: list[Finding] = field(default_factory=list)
    duplicates: list[Finding] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.findings


def validate(corpus: Corpus) -> ValidationReport:
    report = ValidationReport()
    for pair in corpus:
        available = Counter(tag.category for tag in pair.en_template)
        for ref in pair.arabic.category_refs:
            if available[ref.category] < ref.ordinal:
                report.findings.append(
                    Finding(
                        "dangling",
                        (pair.id,),
                        f"'{ref}' refers to a missing {ref.category} in '{pair.key}'",
                    )
                )
    groups: dict[tuple[str, str], list[int]] = {}
    for pair in corpus:
        groups.setdefault((pair.key, str(pair.arabic)), []).append(pair.id)
    for (key, arabic), ids in groups.items():
        if len(ids) > 1:
            report.duplicates.append(
                Finding("duplicate", tuple(ids), f"'{key}' -> '{arabic}'")
            )
    return report


def match_exact(corpus: Corpus, query: ty.Sequence[Tag]) -> list[TemplatePair]:
    return corpus.match_exact(query)
