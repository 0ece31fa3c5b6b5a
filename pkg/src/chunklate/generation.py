"""Transfer of an English chunk path to Arabic templates, and Arabic generation."""

import enum
import logging
import typing as ty
import unicodedata
import warnings
from dataclasses import dataclass

from chunklate.corpus import Corpus, Finding
from chunklate.errors import DanglingReferenceError
from chunklate.lattice import Path
from chunklate.lexicon import AffixRule, Lexicon, TaggedWord, analyze_sentence, realize
from chunklate.matcher import ChunkInstance
from chunklate.templates import (
    ArabicTemplate,
    CategoryRef,
    GenCommand,
    Literal,
    parse_template,
)

logger = logging.getLogger(__name__)

__all__ = [
    "ArabicTemplate",
    "CategoryRef",
    "DummyMarker",
    "DummyPolicy",
    "GenCommand",
    "GeneratedChunk",
    "GeneratedToken",
    "Literal",
    "execute",
    "generate",
    "parse_template",
    "render",
    "round_trip_findings",
    "transfer",
]

COPULA_CATEGORY = "be"


class DummyPolicy(str, enum.Enum):
    COPY = "copy"
    SUPPRESS_COPULA = "suppress-copula"


@dataclass(frozen=True)
class DummyMarker:
    """Stands for a dummy edge in a transferred path: its English words are kept."""

    surface: str


@dataclass(frozen=True)
class GeneratedToken:
    text: str
    clitic: bool = False


@dataclass(frozen=True)
class GeneratedChunk:
    tokens: tuple[GeneratedToken, ...]
    source_kind: ty.Literal["normal", "dummy"] = "normal"


def transfer(path: Path) -> list[tuple[ChunkInstance, ty.Union[ArabicTemplate, DummyMarker]]]:
    """Replace each English chunk of the path by its Arabic template."""
    steps: list[tuple[ChunkInstance, ty.Union[ArabicTemplate, DummyMarker]]] = []
    for edge in path.edges:
        if edge.pair is None:
            steps.append((edge, DummyMarker(edge.surface)))
        else:
            steps.append((edge, edge.pair.arabic))
    return steps


def _referenced_word(
    ref: CategoryRef, english_chunk: ty.Sequence[TaggedWord], pair_id: ty.Optional[int]
) -> TaggedWord:
    same_category = [word for word in english_chunk if word.category == ref.category]
    if len(same_category) < ref.ordinal:
        raise DanglingReferenceError(
            f"'{ref}' needs {ref.ordinal} word(s) of category {ref.category}, "
            f"the chunk has {len(same_category)}",
            pair_id,
        )
    return same_category[ref.ordinal - 1]


def execute(
    template: ArabicTemplate,
    english_chunk: ty.Sequence[TaggedWord],
    lexicon: Lexicon,
    pair_id: ty.Optional[int] = None,
) -> GeneratedChunk:
    """Run the add-class-add commands of ``template`` on an English chunk.

    Each group yields one token, the concatenation of its literals and of the
    realization of its category reference. A group made of a bare category
    reference inherits the clitic flag of the realized entry.

    :raise DanglingReferenceError: when a reference names a word the chunk lacks.
    """
    tokens: list[GeneratedToken] = []
    for group in template.groups:
        parts: list[str] = []
        clitic = False
        for command in group:
            if isinstance(command, Literal):
                parts.append(command.text)
                continue
            word = _referenced_word(command, english_chunk, pair_id)
            entries = lexicon.lookup(word.lemma, command.category)
            if not entries:
                raise DanglingReferenceError(
                    f"no {command.category} entry for '{word.lemma}'", pair_id
                )
            realization = realize(entries[0], command.target_attrs)
            parts.append(realization.text)
            clitic = realization.clitic and len(group) == 1
        tokens.append(GeneratedToken(unicodedata.normalize("NFC", "".join(parts)), clitic))
    return GeneratedChunk(tuple(tokens))


def render(chunks: ty.Iterable[GeneratedChunk]) -> str:
    """Assemble the Arabic sentence: clitics fuse with the next token, others are space separated."""
    words: list[str] = []
    pending = ""
    for chunk in chunks:
        for token in chunk.tokens:
            if token.clitic:
                pending += token.text
            else:
                words.append(pending + token.text)
                pending = ""
    if pending:
        message = f"Clitic '{pending}' ends the sentence and is emitted standalone."
        logger.warning(message)
        warnings.warn(message)
        words.append(pending)
    return unicodedata.normalize("NFC", " ".join(words))


def _dummy_chunk(
    words: ty.Sequence[TaggedWord], surface: str, policy: DummyPolicy
) -> GeneratedChunk:
    if policy is DummyPolicy.SUPPRESS_COPULA and all(
        word.category == COPULA_CATEGORY for word in words
    ):
        return GeneratedChunk((), "dummy")
    return GeneratedChunk((GeneratedToken(surface),), "dummy")


def generate(
    paths: ty.Iterable[Path],
    tagged: ty.Sequence[TaggedWord],
    lexicon: Lexicon,
    dummy_policy: ty.Union[DummyPolicy, str] = DummyPolicy.SUPPRESS_COPULA,
) -> list[str]:
    """One Arabic sentence per path.

    Dummy edges copy their English words through, except copulas under the
    ``suppress-copula`` policy: Arabic nominal sentences take no copula.
    """
    policy = DummyPolicy(dummy_policy)
    sentences: list[str] = []
    for path in paths:
        chunks: list[GeneratedChunk] = []
        for edge, target in transfer(path):
            words = tagged[edge.start : edge.end]
            if isinstance(target, DummyMarker):
                chunks.append(_dummy_chunk(words, target.surface, policy))
            else:
                pair_id = edge.pair.id if edge.pair is not None else None
                chunks.append(execute(target, words, lexicon, pair_id))
        sentences.append(render(chunks))
    return sentences


def round_trip_findings(
    corpus: Corpus, lexicon: Lexicon, affix_rules: ty.Sequence[AffixRule]
) -> list[Finding]:
    """Check that every pair with examples regenerates its Arabic example.

    The English example is analysed, checked against the pair's template, then
    the Arabic template is executed on it and rendered.
    """
    findings: list[Finding] = []
    for pair in corpus:
        if pair.en_example is None or pair.ar_example is None:
            continue
        tagged = analyze_sentence(lexicon, affix_rules, pair.en_example)
        if not pair.matches([word.tag for word in tagged]):
            tags = " ".join(str(word.tag) for word in tagged)
            findings.append(
                Finding(
                    "round-trip",
                    (pair.id,),
                    f"example '{pair.en_example}' is tagged '{tags}', not '{pair.key}'",
                )
            )
            continue
        try:
            produced = render([execute(pair.arabic, tagged, lexicon, pair.id)])
        except DanglingReferenceError as e:
            findings.append(Finding("round-trip", (pair.id,), str(e)))
            continue
        if produced != pair.ar_example:
            findings.append(
                Finding(
                    "round-trip",
                    (pair.id,),
                    f"generated '{produced}' instead of '{pair.ar_example}'",
                )
            )
    return findings
