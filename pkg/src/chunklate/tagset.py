"""Closed category and attribute vocabulary, and the word-pattern tag built on it."""

import json
import re
import typing as ty
from dataclasses import dataclass, field
from pathlib import Path

from chunklate.errors import DataFileError

UNKNOWN_CATEGORY = "unk"
DEFAULT_KEY = "default"


@dataclass(frozen=True)
class Tagset:
    """Configured lexical categories and attribute tokens.

    The order of ``attributes`` is the canonical order used to print tags and to
    build realization keys, e.g. ``n [pl,f]`` or ``s,f``.
    """

    categories: tuple[str, ...]
    attributes: tuple[str, ...]

    def __post_init__(self):
        if UNKNOWN_CATEGORY not in self.categories:
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: the category "
                f"'{UNKNOWN_CATEGORY}' is mandatory."
            )
        if len(set(self.categories)) != len(self.categories) or len(
            set(self.attributes)
        ) != len(self.attributes):
            raise RuntimeError(
                f"Error when initialising {type(self).__name__}: duplicated "
                "category or attribute token."
            )

    def has_category(self, category: str) -> bool:
        return category in self.categories

    def unknown_attributes(self, attrs: ty.Iterable[str]) -> list[str]:
        return sorted(set(attrs).difference(self.attributes))

    def ordered(self, attrs: ty.Iterable[str]) -> list[str]:
        """Return the attributes in canonical order, unknown tokens last."""
        rank = {attr: i for i, attr in enumerate(self.attributes)}
        return sorted(set(attrs), key=lambda a: (rank.get(a, len(rank)), a))

    def key(self, attrs: ty.Iterable[str]) -> str:
        """Realization key of an attribute set: canonical comma-joined tokens."""
        ordered = self.ordered(attrs)
        return ",".join(ordered) if ordered else DEFAULT_KEY

    def parse_key(self, key: str) -> frozenset[str]:
        """Inverse of :meth:`key`; raise ``ValueError`` on unknown tokens."""
        if key.strip() == DEFAULT_KEY:
            return frozenset()
        attrs = frozenset(token.strip() for token in key.split(",") if token.strip())
        unknown = self.unknown_attributes(attrs)
        if unknown:
            raise ValueError(f"unknown attribute(s) {', '.join(unknown)} in key {key!r}")
        return attrs


DEFAULT_TAGSET = Tagset(
    categories=("art", "n", "v", "be", "adj", "adv", "prep", "poss", "pron", "conj", "unk"),
    attributes=(
        "def",
        "indef",
        "p",
        "past",
        "s",
        "pl",
        "m",
        "f",
        "1",
        "2",
        "3",
        "ing",
        "ed",
        "neg",
        "source",
        "pmean",
    ),
)


def load_tagset(path: Path) -> Tagset:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
            return Tagset(
                categories=tuple(data["categories"]),
                attributes=tuple(data["attributes"]),
            )
        except (ValueError, KeyError, TypeError, RuntimeError) as e:
            raise DataFileError(f"invalid tagset: {e}", source=str(path)) from e


_TAG_PATTERN = re.compile(r"^\s*([^\s\[\]]+)\s*(?:\[([^\]]*)\])?\s*$")


@dataclass(frozen=True)
class Tag:
    """A word pattern: lexical category plus an unordered attribute set."""

    category: str
    attrs: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        # Accept any iterable for convenience, store a frozenset.
        if not isinstance(self.attrs, frozenset):
            object.__setattr__(self, "attrs", frozenset(self.attrs))

    @classmethod
    def parse(cls, text: str) -> "Tag":
        """Parse the printed form ``cat [a ,b]`` (spacing is free)."""
        match = _TAG_PATTERN.match(text)
        if match is None:
            raise ValueError(f"Cannot parse tag {text!r}.")
        category, attrs = match.groups()
        tokens = (attrs or "").split(",")
        return cls(category.lower(), frozenset(t.strip() for t in tokens if t.strip()))

    def subsumes(self, other: "Tag") -> bool:
        """True when ``other`` has the same category and at least these attributes."""
        return self.category == other.category and self.attrs <= other.attrs

    def format(self, tagset: Tagset = DEFAULT_TAGSET) -> str:
        if not self.attrs:
            return self.category
        return f"{self.category} [{','.join(tagset.ordered(self.attrs))}]"

    def __str__(self) -> str:
        return self.format()

    def to_json(self, tagset: Tagset = DEFAULT_TAGSET) -> dict[str, ty.Any]:
        return {"cat": self.category, "attrs": tagset.ordered(self.attrs)}


def check_tag(tag: Tag, tagset: Tagset) -> None:
    """Raise ``ValueError`` if the tag uses tokens outside of the tagset."""
    if not tagset.has_category(tag.category):
        raise ValueError(f"unknown category '{tag.category}'")
    unknown = tagset.unknown_attributes(tag.attrs)
    if unknown:
        raise ValueError(f"unknown attribute(s) {', '.join(unknown)}")


def template_key(template: ty.Sequence[Tag], tagset: Tagset = DEFAULT_TAGSET) -> str:
    """Canonical index key of a tag sequence, insensitive to attribute order."""
    return " ".join(tag.format(tagset) for tag in template)
