"""End-to-end translation: analysis, chunk search, tuning, path selection, generation."""

import logging
import typing as ty
from dataclasses import dataclass, field

from chunklate.config import Resources, TranslatorOptions
from chunklate.generation import DummyMarker, generate, transfer
from chunklate.lattice import (
    Lattice,
    Path,
    PathEnumeration,
    build_lattice,
    enumerate_paths,
    select_optimal,
)
from chunklate.lexicon import TaggedWord, analyze_sentence
from chunklate.matcher import (
    ChunkInstance,
    CorrespondenceMatrix,
    TuningAction,
    build_matrix,
    enumerate_spans,
    find_chunks,
    tune,
)

logger = logging.getLogger(__name__)


@dataclass
class TraceReport:
    """Every intermediate stage of one translation, in pipeline order."""

    sentence: str
    tagged: list[TaggedWord]
    span_count: int
    chunks: list[ChunkInstance]
    raw_matrix: CorrespondenceMatrix
    actions: list[TuningAction]
    tuned_matrix: CorrespondenceMatrix
    lattice: Lattice
    paths: PathEnumeration
    optimal: list[Path]
    translations: list[str] = field(default_factory=list)

    def optimal_indices(self) -> list[int]:
        """Positions of the optimal paths in the enumeration (absent when truncated away)."""
        positions = {
            tuple(edge.ident for edge in path.edges): i
            for i, path in enumerate(self.paths.paths)
        }
        keys = [tuple(edge.ident for edge in path.edges) for path in self.optimal]
        return [positions[key] for key in keys if key in positions]

    def to_json(self) -> dict[str, ty.Any]:
        lattice = self.lattice.to_json()
        lattice["paths"] = [
            {"edges": [edge.ident for edge in path.edges], "cost": list(path.cost)}
            for path in self.paths
        ]
        lattice["optimal"] = self.optimal_indices()
        lattice["truncated"] = self.paths.truncated
        return {
            "sentence": self.sentence,
            "tagged": [
                {"surface": w.surface, "lemma": w.lemma, "tag": str(w.tag)}
                for w in self.tagged
            ],
            "spans": self.span_count,
            "chunks": [chunk.to_json() for chunk in self.chunks],
            "raw_matrix": self.raw_matrix.to_json(),
            "tuning": [action.to_json() for action in self.actions],
            "tuned_matrix": self.tuned_matrix.to_json(),
            "lattice": lattice,
            "templates": [
                [
                    target.surface if isinstance(target, DummyMarker) else str(target)
                    for _, target in transfer(path)
                ]
                for path in self.optimal
            ],
            "translations": self.translations,
        }


@dataclass(frozen=True)
class Translation:
    sentence: str
    translations: list[str]
    trace: ty.Optional[TraceReport] = None


class Translator:
    """Translate English sentences with a loaded lexicon and corpus."""

    def __init__(self, resources: Resources, options: TranslatorOptions = TranslatorOptions()):
        self.resources = resources
        self.options = options

    def analyze(self, sentence: str) -> list[TaggedWord]:
        return analyze_sentence(
            self.resources.lexicon, self.resources.affix_rules, sentence
        )

    def tuned_matrix(
        self, tagged: ty.Sequence[TaggedWord], actions: ty.Optional[list[TuningAction]] = None
    ) -> tuple[CorrespondenceMatrix, CorrespondenceMatrix]:
        """Raw and tuned correspondence matrices of an analysed sentence."""
        chunks = find_chunks(tagged, self.resources.corpus)
        raw = build_matrix(chunks, len(tagged), [word.surface for word in tagged])
        return raw, tune(raw, actions)

    def translate(self, sentence: str, trace: bool = False) -> Translation:
        """Translate one sentence.

        :param sentence: English text.
        :param trace: also record every intermediate stage.
        :return: the translations of every optimal path (only the first one unless
            ``emit_all`` is set), plus the trace report when requested.
        """
        tagged = self.analyze(sentence)
        actions: list[TuningAction] = []
        raw, tuned = self.tuned_matrix(tagged, actions)
        lattice = build_lattice(tuned)
        optimal = select_optimal(lattice)
        translations = generate(
            optimal, tagged, self.resources.lexicon, self.options.dummy_policy
        )
        logger.info(
            "Translated %d words through %d optimal path(s).", len(tagged), len(optimal)
        )
        if not self.options.emit_all:
            translations = translations[:1]
        report = None
        if trace:
            report = TraceReport(
                sentence=sentence,
                tagged=tagged,
                span_count=len(enumerate_spans(len(tagged))),
                chunks=list(raw.rows),
                raw_matrix=raw,
                actions=actions,
                tuned_matrix=tuned,
                lattice=lattice,
                paths=enumerate_paths(lattice, self.options.max_paths),
                optimal=optimal,
                translations=translations,
            )
        return Translation(sentence, translations, report)
