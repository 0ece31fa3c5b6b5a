"""Arabic generation templates: the "add [xx] , class[yy] , add[zz]" command language.

A template is a sequence of parenthesised groups, each group producing one output
token by concatenating its commands::

    (add [ال] n1 [pmean])
    (prep1) (v1 [source])
    (n1 [pmean] add [نا])

``add [text]`` emits a literal affix or word, ``cat<k> [attrs]`` emits the Arabic
realization of the k-th word of category ``cat`` in the English chunk.
"""

import re
import typing as ty
import unicodedata
from dataclasses import dataclass

from chunklate.errors import TemplateSyntaxError
from chunklate.tagset import DEFAULT_TAGSET, Tagset


@dataclass(frozen=True)
class Literal:
    text: str

    def __post_init__(self):
        if not self.text:
            raise RuntimeError("A literal command needs a non-empty text.")

    def __str__(self) -> str:
        return f"add [{self.text}]"


@dataclass(frozen=True)
class CategoryRef:
    category: str
    ordinal: int
    target_attrs: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.ordinal < 1:
            raise RuntimeError(f"Category ordinals start at 1, got {self.ordinal}.")

    def format(self, tagset: Tagset = DEFAULT_TAGSET) -> str:
        ref = f"{self.category}{self.ordinal}"
        if self.target_attrs:
            ref += f" [{','.join(tagset.ordered(self.target_attrs))}]"
        return ref

    def __str__(self) -> str:
        return self.format()


GenCommand = ty.Union[Literal, CategoryRef]


@dataclass(frozen=True)
class ArabicTemplate:
    """Parsed template; each group yields exactly one output token."""

    groups: tuple[tuple[GenCommand, ...], ...]

    def __post_init__(self):
        if not self.groups or any(not group for group in self.groups):
            raise RuntimeError("A template needs at least one non-empty group.")
        for group in self.groups:
            if sum(isinstance(command, CategoryRef) for command in group) > 1:
                raise RuntimeError("A template group holds at most one category reference.")

    @property
    def category_refs(self) -> list[CategoryRef]:
        return [c for group in self.groups for c in group if isinstance(c, CategoryRef)]

    def __str__(self) -> str:
        return " ".join(
            "(" + " ".join(str(command) for command in group) + ")" for group in self.groups
        )


_ADD = re.compile(r"add\s*\[")
_CATREF = re.compile(r"([A-Za-z_]+)(\d+)")


class _TemplateParser:
    def __init__(self, text: str, tagset: Tagset):
        self.text = text
        self.tagset = tagset
        self.pos = 0

    def error(self, message: str, position: ty.Optional[int] = None) -> TemplateSyntaxError:
        return TemplateSyntaxError(message, self.text, self.pos if position is None else position)

    def skip_whitespace(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_whitespace()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_whitespace()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of template"
            raise self.error(f"expected '{char}', found {found}")
        self.pos += 1

    def bracket_content(self) -> tuple[str, int]:
        """Read ``[ ... ]`` and return the trimmed content and its start position."""
        self.expect("[")
        start = self.pos
        end = self.text.find("]", start)
        if end < 0:
            raise self.error("unterminated '['", start - 1)
        self.pos = end + 1
        return self.text[start:end].strip(), start

    def parse(self) -> ArabicTemplate:
        groups: list[tuple[GenCommand, ...]] = []
        if self.at_end():
            raise self.error("empty template")
        while not self.at_end():
            groups.append(self.group())
        return ArabicTemplate(tuple(groups))

    def group(self) -> tuple[GenCommand, ...]:
        opening = self.pos
        self.expect("(")
        commands: list[GenCommand] = []
        while self.peek() not in (")", ""):
            commands.append(self.item())
        self.expect(")")
        if not commands:
            raise self.error("empty group", opening)
        if sum(isinstance(c, CategoryRef) for c in commands) > 1:
            raise self.error("more than one category reference in group", opening)
        return tuple(commands)

    def item(self) -> GenCommand:
        self.skip_whitespace()
        start = self.pos
        if _ADD.match(self.text, self.pos):
            self.pos = self.text.index("add", self.pos) + len("add")
            text, content_start = self.bracket_content()
            if not text:
                raise self.error("empty literal", content_start)
            return Literal(unicodedata.normalize("NFC", text))
        match = _CATREF.match(self.text, self.pos)
        if match is None:
            raise self.error("expected 'add [...]' or a category reference")
        category, ordinal = match.group(1).lower(), int(match.group(2))
        if not self.tagset.has_category(category):
            raise self.error(f"unknown category '{category}'", start)
        if ordinal == 0:
            raise self.error("category ordinals start at 1", match.start(2))
        self.pos = match.end()
        attrs: frozenset[str] = frozenset()
        if self.peek() == "[":
            content, content_start = self.bracket_content()
            attrs = frozenset(t.strip() for t in content.split(",") if t.strip())
            unknown = self.tagset.unknown_attributes(attrs)
            if unknown:
                raise self.error(f"unknown attribute(s) {', '.join(unknown)}", content_start)
        return CategoryRef(category, ordinal, attrs)


def parse_template(text: str, tagset: Tagset = DEFAULT_TAGSET) -> ArabicTemplate:
    """Parse template text into an :class:`ArabicTemplate`.

    :raise TemplateSyntaxError: on syntax errors, unknown categories or attributes
        and zero ordinals; the error carries the offending character position.
    """
    return _TemplateParser(text, tagset).parse()
