"""Bilingual dictionary, English morphological analysis and Arabic realization."""

import logging
import string
import typing as ty
import unicodedata
from dataclasses import dataclass
from types import MappingProxyType

from chunklate.errors import DataFileError
from chunklate.records import json_records, source_name
from chunklate.tagset import (
    DEFAULT_KEY,
    DEFAULT_TAGSET,
    UNKNOWN_CATEGORY,
    Tag,
    Tagset,
)

logger = logging.getLogger(__name__)

__all__ = [
    "AffixRule",
    "LexEntry",
    "Lexicon",
    "Realization",
    "Tag",
    "TaggedWord",
    "analyze_sentence",
    "analyze_word",
    "load_affix_rules",
    "load_lexicon",
    "lookup",
    "realize",
]


@dataclass(frozen=True)
class TaggedWord:
    surface: str
    lemma: str
    tag: Tag

    def __post_init__(self):
        if not self.surface:
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: empty surface form."
            )

    @property
    def category(self) -> str:
        return self.tag.category


@dataclass(frozen=True)
class LexEntry:
    """One dictionary headword.

    :param lemma: lowercase English headword.
    :param category: lexical category of the headword.
    :param base_attrs: attributes inherent to the headword, e.g. ``def`` for "the".
    :param realizations: Arabic surface forms keyed by Arabic-side attribute sets;
        the empty set is the default realization.
    :param clitic: True for single-letter proclitics written fused with the next
        word.
    """

    lemma: str
    category: str
    base_attrs: frozenset[str]
    realizations: ty.Mapping[frozenset[str], str]
    clitic: bool = False

    def __post_init__(self):
        if frozenset() not in self.realizations:
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: entry "
                f"'{self.lemma}' has no default realization."
            )
        if any(not text.strip() for text in self.realizations.values()):
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: entry "
                f"'{self.lemma}' has an empty realization."
            )

    @property
    def tag(self) -> Tag:
        return Tag(self.category, self.base_attrs)


@dataclass(frozen=True)
class AffixRule:
    kind: ty.Literal["prefix", "suffix"]
    affix: str
    applies_to: str
    add_attrs: frozenset[str] = frozenset()
    replace_with: str = ""

    def __post_init__(self):
        if self.kind not in ("prefix", "suffix"):
            raise RuntimeError(f"Unknown affix kind '{self.kind}'.")
        if not self.affix:
            raise RuntimeError("Affix rules need a non-empty affix.")

    def strip(self, word: str) -> ty.Optional[str]:
        """Return the stem left after removing the affix, or None if it does not apply."""
        if len(word) <= len(self.affix):
            return None
        if self.kind == "prefix" and word.startswith(self.affix):
            return self.replace_with + word[len(self.affix) :]
        if self.kind == "suffix" and word.endswith(self.affix):
            return word[: -len(self.affix)] + self.replace_with
        return None


@dataclass(frozen=True)
class Realization:
    text: str
    clitic: bool


class Lexicon:
    """Immutable collection of :class:`LexEntry` indexed by lemma."""

    def __init__(self, entries: ty.Iterable[LexEntry] = (), tagset: Tagset = DEFAULT_TAGSET):
        self.tagset = tagset
        self._entries: tuple[LexEntry, ...] = tuple(entries)
        by_lemma: dict[str, list[LexEntry]] = {}
        seen: set[tuple[str, str]] = set()
        for entry in self._entries:
            if (entry.lemma, entry.category) in seen:
                raise RuntimeError(
                    f"Duplicated lexicon entry ({entry.lemma}, {entry.category})."
                )
            seen.add((entry.lemma, entry.category))
            by_lemma.setdefault(entry.lemma, []).append(entry)
        self._by_lemma = MappingProxyType({k: tuple(v) for k, v in by_lemma.items()})

    def __repr__(self):
        return f"Lexicon(len={len(self)})"

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> ty.Iterator[LexEntry]:
        return iter(self._entries)

    def __contains__(self, lemma: str) -> bool:
        return lemma.lower() in self._by_lemma

    def lookup(self, query: str, category: ty.Optional[str] = None) -> list[LexEntry]:
        entries = self._by_lemma.get(query.lower(), ())
        if category is not None:
            return [entry for entry in entries if entry.category == category]
        return list(entries)


def load_lexicon(source: ty.Iterable[str], tagset: Tagset = DEFAULT_TAGSET) -> Lexicon:
    """Load a JSON Lines lexicon.

    Each record reads ``{"lemma", "category", "attrs", "arabic", "clitic"?}`` where
    ``arabic`` maps realization keys (``"pl,f"``, ``"default"``) to Arabic text.

    :param source: readable text stream, or any iterable of lines.
    :param tagset: closed vocabulary the records are checked against.
    :raise DataFileError: on malformed records, unknown tokens or duplicated
        ``(lemma, category)`` pairs.
    """
    name = source_name(source)
    entries: list[LexEntry] = []
    seen: set[tuple[str, str]] = set()
    for line_number, record in json_records(source):
        try:
            lemma = str(record["lemma"]).strip().lower()
            category = str(record["category"])
            attrs = frozenset(record.get("attrs", []))
            arabic = record["arabic"]
            clitic = bool(record.get("clitic", False))
        except (KeyError, TypeError) as e:
            raise DataFileError(f"missing or invalid field {e}", name, line_number) from e
        if not lemma:
            raise DataFileError("empty lemma", name, line_number)
        if not tagset.has_category(category):
            raise DataFileError(f"unknown category '{category}'", name, line_number)
        unknown = tagset.unknown_attributes(attrs)
        if unknown:
            raise DataFileError(
                f"unknown attribute(s) {', '.join(unknown)}", name, line_number
            )
        if not isinstance(arabic, dict) or DEFAULT_KEY not in arabic:
            raise DataFileError(
                f"'arabic' must be an object with a '{DEFAULT_KEY}' key",
                name,
                line_number,
            )
        realizations: dict[frozenset[str], str] = {}
        for key, text in arabic.items():
            try:
                attr_set = tagset.parse_key(key)
            except ValueError as e:
                raise DataFileError(str(e), name, line_number) from e
            if not isinstance(text, str) or not text.strip():
                raise DataFileError(
                    f"empty realization for key '{key}'", name, line_number
                )
            realizations[attr_set] = unicodedata.normalize("NFC", text.strip())
        if (lemma, category) in seen:
            raise DataFileError(
                f"duplicated entry ({lemma}, {category})", name, line_number
            )
        seen.add((lemma, category))
        entries.append(
            LexEntry(
                lemma=lemma,
                category=category,
                base_attrs=attrs,
                realizations=MappingProxyType(realizations),
                clitic=clitic,
            )
        )
    logger.info("Loaded %d lexicon entries from %s.", len(entries), name)
    return Lexicon(entries, tagset)


def load_affix_rules(
    source: ty.Iterable[str], tagset: Tagset = DEFAULT_TAGSET
) -> tuple[AffixRule, ...]:
    """Load JSON Lines affix rules ``{"kind", "affix", "category", "add_attrs", "replace_with"?}``."""
    name = source_name(source)
    rules: list[AffixRule] = []
    for line_number, record in json_records(source):
        try:
            rule = AffixRule(
                kind=record["kind"],
                affix=str(record["affix"]).lower(),
                applies_to=str(record["category"]),
                add_attrs=frozenset(record.get("add_attrs", [])),
                replace_with=str(record.get("replace_with", "")).lower(),
            )
        except (KeyError, TypeError, RuntimeError) as e:
            raise DataFileError(f"invalid affix rule: {e}", name, line_number) from e
        if not tagset.has_category(rule.applies_to):
            raise DataFileError(
                f"unknown category '{rule.applies_to}'", name, line_number
            )
        unknown = tagset.unknown_attributes(rule.add_attrs)
        if unknown:
            raise DataFileError(
                f"unknown attribute(s) {', '.join(unknown)}", name, line_number
            )
        rules.append(rule)
    logger.info("Loaded %d affix rules from %s.", len(rules), name)
    return tuple(rules)


def lookup(
    lexicon: Lexicon, surface_or_lemma: str, category_filter: ty.Optional[str] = None
) -> list[LexEntry]:
    if not surface_or_lemma:
        raise ValueError("Cannot look up an empty word.")
    return lexicon.lookup(surface_or_lemma, category_filter)


def _longest_first(rules: ty.Iterable[AffixRule], kind: str) -> list[AffixRule]:
    # sorted() is stable, so equal-length rules keep their file order.
    return sorted(
        (rule for rule in rules if rule.kind == kind), key=lambda r: -len(r.affix)
    )


def _candidates(
    word: str, affix_rules: ty.Sequence[AffixRule]
) -> ty.Iterator[tuple[str, tuple[AffixRule, ...]]]:
    """Yield ``(stem, applied_rules)`` in analysis order.

    Order: the word itself, one prefix stripped, one suffix stripped, then one
    prefix and one suffix stripped. Longest affixes are tried first.
    """
    prefixes = _longest_first(affix_rules, "prefix")
    suffixes = _longest_first(affix_rules, "suffix")
    yield word, ()
    for prefix in prefixes:
        stem = prefix.strip(word)
        if stem is not None:
            yield stem, (prefix,)
    for suffix in suffixes:
        stem = suffix.strip(word)
        if stem is not None:
            yield stem, (suffix,)
    for prefix in prefixes:
        stem = prefix.strip(word)
        if stem is None:
            continue
        for suffix in suffixes:
            inner = suffix.strip(stem)
            if inner is not None:
                yield inner, (prefix, suffix)


def analyze_word(
    lexicon: Lexicon, affix_rules: ty.Sequence[AffixRule], surface: str
) -> TaggedWord:
    """Tag a single token with its lexical category and attributes.

    The token is looked up as is, then with at most one prefix and one suffix
    stripped. The tag joins the entry's base attributes with those contributed by
    the stripped affixes. Unknown words are tagged ``unk`` without attributes.
    """
    word = surface.lower()
    for stem, rules in _candidates(word, affix_rules):
        for entry in lexicon.lookup(stem):
            if all(rule.applies_to == entry.category for rule in rules):
                attrs = entry.base_attrs.union(*(rule.add_attrs for rule in rules))
                return TaggedWord(surface, entry.lemma, Tag(entry.category, attrs))
    logger.debug("No analysis for '%s', tagged as %s.", surface, UNKNOWN_CATEGORY)
    return TaggedWord(surface, surface, Tag(UNKNOWN_CATEGORY))


_PUNCTUATION = string.punctuation + "«»“”‘’…"


def analyze_sentence(
    lexicon: Lexicon, affix_rules: ty.Sequence[AffixRule], text: str
) -> list[TaggedWord]:
    tagged: list[TaggedWord] = []
    for token in text.split():
        token = token.strip(_PUNCTUATION)
        if token:
            tagged.append(analyze_word(lexicon, affix_rules, token))
    return tagged


def realize(entry: LexEntry, target_attrs: ty.AbstractSet[str] = frozenset()) -> Realization:
    """Arabic surface form of ``entry`` for the requested attributes.

    Falls back to the default realization when no exact key exists.
    """
    text = entry.realizations.get(frozenset(target_attrs))
    if text is None:
        text = entry.realizations[frozenset()]
    return Realization(text, entry.clitic)
