"""Candidate chunk search, correspondence matrix and matrix tuning."""

import logging
import typing as ty
from collections import Counter
from dataclasses import dataclass, field

import numpy

from chunklate.corpus import Corpus, TemplatePair
from chunklate.errors import MatrixError
from chunklate.lexicon import TaggedWord

logger = logging.getLogger(__name__)

RowId = ty.Union[int, str]
TuningRule = ty.Literal["repeated", "unreachable", "dead-end", "dummy"]


@dataclass(frozen=True, order=True)
class Span:
    """Half-open word interval ``[start, end)``."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise MatrixError(f"Invalid span ({self.start}, {self.end}).")

    def __len__(self) -> int:
        return self.end - self.start

    def __contains__(self, word_index: int) -> bool:
        return self.start <= word_index < self.end

    def as_list(self) -> list[int]:
        return [self.start, self.end]


@dataclass(frozen=True)
class ChunkInstance:
    """A corpus template anchored on a span of the sentence, or a dummy word.

    :param ident: row identifier, an integer for matched chunks (1-based in
        :func:`find_chunks` order) and ``"d<k>"`` for dummies.
    :param span: covered words.
    :param kind: ``"normal"`` or ``"dummy"``.
    :param pair: the matched corpus pair, None for dummies.
    :param surface: the covered English words.
    """

    ident: RowId
    span: Span
    kind: ty.Literal["normal", "dummy"]
    pair: ty.Optional[TemplatePair]
    surface: str

    def __post_init__(self):
        if self.kind == "dummy":
            if len(self.span) != 1 or self.pair is not None:
                raise RuntimeError(
                    f"Dummy chunk {self.ident} must cover one word and carry no template."
                )
        elif self.kind == "normal":
            if self.pair is None or len(self.pair) != len(self.span):
                raise RuntimeError(
                    f"Chunk {self.ident} must carry a template as long as its span."
                )
        else:
            raise RuntimeError(f"Unknown chunk kind '{self.kind}'.")

    @classmethod
    def dummy(cls, ident: str, start: int, surface: str) -> "ChunkInstance":
        return cls(ident, Span(start, start + 1), "dummy", None, surface)

    @property
    def is_dummy(self) -> bool:
        return self.kind == "dummy"

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    @property
    def label(self) -> str:
        """Short display name: ``Ch<pair id>`` or the dummy identifier."""
        return str(self.ident) if self.pair is None else f"Ch{self.pair.id}"

    @property
    def canonical(self) -> tuple[ty.Any, ...]:
        """Span and templates, identical for repeated rows."""
        if self.pair is None:
            return (self.span, "dummy")
        return (self.span, self.pair.key, str(self.pair.arabic))

    def to_json(self) -> dict[str, ty.Any]:
        row: dict[str, ty.Any] = {
            "id": self.ident,
            "span": self.span.as_list(),
            "kind": self.kind,
        }
        if self.pair is not None:
            row["pair_id"] = self.pair.id
        return row


@dataclass(frozen=True)
class CorrespondenceMatrix:
    """Candidate chunks (rows) against sentence words (columns).

    Cells are derived from the row spans and never stored.
    """

    n: int
    rows: tuple[ChunkInstance, ...]
    words: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.words:
            object.__setattr__(self, "words", tuple(f"w{j + 1}" for j in range(self.n)))
        if len(self.words) != self.n:
            raise MatrixError(f"Expected {self.n} words, got {len(self.words)}.")

    def __len__(self) -> int:
        return len(self.rows)

    def cell(self, row: int, column: int) -> bool:
        return column in self.rows[row].span

    @property
    def cells(self) -> numpy.ndarray:
        grid = numpy.zeros((len(self.rows), self.n), dtype=bool)
        for r, row in enumerate(self.rows):
            grid[r, row.start : row.end] = True
        return grid

    def uncovered_columns(self) -> list[int]:
        if not self.rows:
            return list(range(self.n))
        return [int(j) for j in numpy.flatnonzero(~self.cells.any(axis=0))]

    def with_rows(self, rows: ty.Iterable[ChunkInstance]) -> "CorrespondenceMatrix":
        return CorrespondenceMatrix(self.n, tuple(rows), self.words)

    def to_json(self) -> dict[str, ty.Any]:
        return {"n": self.n, "rows": [row.to_json() for row in self.rows]}


@dataclass(frozen=True)
class TuningAction:
    rule: TuningRule
    row_id: RowId
    span: Span
    detail: str = field(default="", compare=False)

    def to_json(self) -> dict[str, ty.Any]:
        action = {"rule": self.rule, "row": self.row_id, "span": self.span.as_list()}
        if self.detail:
            action["detail"] = self.detail
        return action


def enumerate_spans(n: int) -> list[Span]:
    """All contiguous spans, first by start then by growing length.

    The count is n(n+1)/2.
    """
    return [Span(start, end) for start in range(n) for end in range(start + 1, n + 1)]


def find_chunks(tagged: ty.Sequence[TaggedWord], corpus: Corpus) -> list[ChunkInstance]:
    """Match every span of the sentence against the corpus.

    One instance is produced per (span, matching pair), ordered by span then by
    corpus order.
    """
    tags = [word.tag for word in tagged]
    chunks: list[ChunkInstance] = []
    for span in enumerate_spans(len(tagged)):
        for pair in corpus.match_exact(tags[span.start : span.end]):
            surface = " ".join(word.surface for word in tagged[span.start : span.end])
            chunks.append(ChunkInstance(len(chunks) + 1, span, "normal", pair, surface))
    logger.debug("Found %d candidate chunks for %d words.", len(chunks), len(tagged))
    return chunks


def build_matrix(
    chunks: ty.Sequence[ChunkInstance], n: int, words: ty.Sequence[str] = ()
) -> CorrespondenceMatrix:
    for chunk in chunks:
        if chunk.end > n:
            raise MatrixError(
                f"Chunk {chunk.ident} spans ({chunk.start}, {chunk.end}) beyond "
                f"the {n} words of the sentence."
            )
    return CorrespondenceMatrix(n, tuple(chunks), tuple(words))


def dedupe_repeated(
    matrix: CorrespondenceMatrix, actions: ty.Optional[list[TuningAction]] = None
) -> CorrespondenceMatrix:
    """Keep the first of the rows sharing span and both templates."""
    kept: dict[tuple[ty.Any, ...], ChunkInstance] = {}
    rows: list[ChunkInstance] = []
    for row in matrix.rows:
        first = kept.setdefault(row.canonical, row)
        if first is row:
            rows.append(row)
        elif actions is not None:
            actions.append(
                TuningAction("repeated", row.ident, row.span, f"repeats {first.ident}")
            )
    return matrix.with_rows(rows)


def insert_dummies(
    matrix: CorrespondenceMatrix, actions: ty.Optional[list[TuningAction]] = None
) -> CorrespondenceMatrix:
    """Bridge every reachable node without outgoing chunk with a one-word dummy.

    Nodes are swept left to right, so a run of uncovered words gets a chain of
    dummies. Afterwards the last node is reachable from the first one.
    """
    rows = list(matrix.rows)
    starts: dict[int, list[ChunkInstance]] = {}
    for row in rows:
        starts.setdefault(row.start, []).append(row)
    count = sum(row.is_dummy for row in rows)
    reachable = {0}
    for node in range(matrix.n):
        if node not in reachable:
            continue
        if node not in starts:
            count += 1
            dummy = ChunkInstance.dummy(f"d{count}", node, matrix.words[node])
            rows.append(dummy)
            starts[node] = [dummy]
            if actions is not None:
                actions.append(
                    TuningAction("dummy", dummy.ident, dummy.span, matrix.words[node])
                )
        reachable.update(row.end for row in starts[node])
    return matrix.with_rows(rows)


def prune_unreachable_deadend(
    matrix: CorrespondenceMatrix, actions: ty.Optional[list[TuningAction]] = None
) -> CorrespondenceMatrix:
    """Remove rows lying on no complete path, iterating to a fixpoint.

    A row is unreachable when it starts after the first node where no other row
    ends, and a dead end when it stops before the last node where no other row
    starts.
    """
    rows = list(matrix.rows)
    changed = True
    while changed:
        changed = False
        ends = Counter(row.end for row in rows)
        starts = Counter(row.start for row in rows)
        survivors: list[ChunkInstance] = []
        for row in rows:
            rule: ty.Optional[TuningRule] = None
            if row.start > 0 and ends[row.start] == 0:
                rule = "unreachable"
            elif row.end < matrix.n and starts[row.end] == 0:
                rule = "dead-end"
            if rule is None:
                survivors.append(row)
                continue
            changed = True
            logger.debug("Removing %s chunk %s at %s.", rule, row.ident, row.span)
            if actions is not None:
                actions.append(TuningAction(rule, row.ident, row.span))
        rows = survivors
    return matrix.with_rows(rows)


def tune(
    matrix: CorrespondenceMatrix, actions: ty.Optional[list[TuningAction]] = None
) -> CorrespondenceMatrix:
    """Deduplicate, insert dummies, then prune rows off every complete path."""
    matrix = dedupe_repeated(matrix, actions)
    matrix = insert_dummies(matrix, actions)
    return prune_unreachable_deadend(matrix, actions)


def replay(
    matrix: CorrespondenceMatrix, actions: ty.Iterable[TuningAction]
) -> CorrespondenceMatrix:
    """Apply recorded tuning actions to the raw matrix they were recorded on."""
    rows = list(matrix.rows)
    for action in actions:
        if action.rule == "dummy":
            rows.append(
                ChunkInstance.dummy(
                    str(action.row_id), action.span.start, matrix.words[action.span.start]
                )
            )
        else:
            rows = [row for row in rows if row.ident != action.row_id]
    return matrix.with_rows(rows)


def group_by_template(matrix: CorrespondenceMatrix) -> dict[int, list[RowId]]:
    """Row identifiers of each corpus pair present in the matrix."""
    groups: dict[int, list[RowId]] = {}
    for row in matrix.rows:
        if row.pair is not None:
            groups.setdefault(row.pair.id, []).append(row.ident)
    return groups
