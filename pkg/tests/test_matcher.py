import numpy
import pytest

from chunklate.corpus import TemplatePair
from chunklate.errors import MatrixError
from chunklate.lattice import build_lattice, enumerate_paths
from chunklate.matcher import (
    ChunkInstance,
    CorrespondenceMatrix,
    Span,
    TuningAction,
    build_matrix,
    dedupe_repeated,
    enumerate_spans,
    find_chunks,
    group_by_template,
    insert_dummies,
    prune_unreachable_deadend,
    replay,
    tune,
)
from chunklate.tagset import Tag

from conftest import (
    PROTEIN_SENTENCE,
    fourteen_word_matrix,
    make_chunk,
    oracle_paths,
    path_idents,
    random_chunks,
)


def _spans(matrix: CorrespondenceMatrix) -> set[tuple]:
    return {
        ("dummy" if row.is_dummy else row.pair.id, row.start, row.end) for row in matrix.rows
    }


def test_span_enumeration():
    spans = enumerate_spans(8)
    assert len(spans) == 36
    assert spans[:3] == [Span(0, 1), Span(0, 2), Span(0, 3)]
    assert spans[-1] == Span(7, 8)
    assert enumerate_spans(0) == []
    assert len(enumerate_spans(14)) == 105


def test_span_validation():
    with pytest.raises(MatrixError):
        Span(2, 2)
    with pytest.raises(MatrixError):
        Span(-1, 1)
    assert len(Span(1, 4)) == 3
    assert 3 in Span(1, 4) and 4 not in Span(1, 4)


def test_chunk_invariants():
    with pytest.raises(RuntimeError):
        ChunkInstance("d1", Span(0, 2), "dummy", None, "a b")
    with pytest.raises(RuntimeError):
        ChunkInstance(1, Span(0, 2), "normal", TemplatePair(1, (Tag("n"),), "(n1)"), "a b")


def test_find_chunks_protein_sentence(translator):
    tagged = translator.analyze(PROTEIN_SENTENCE)
    chunks = find_chunks(tagged, translator.resources.corpus)
    assert [chunk.ident for chunk in chunks] == list(range(1, len(chunks) + 1))
    found = [(chunk.pair.id, chunk.start, chunk.end) for chunk in chunks]
    assert found == (
        [(i, 0, 2) for i in (5, 7, 11, 12, 14)]
        + [(4, 1, 2)]
        + [(8, 3, 4), (13, 3, 4)]
        + [(i, 4, 6) for i in (1, 2, 3, 6, 9)]
        + [(10, 6, 8), (4, 7, 8)]
    )
    assert chunks[0].surface == "The proteins"
    # Every matched span carries a template of the same tags.
    for chunk in chunks:
        assert chunk.pair.matches([w.tag for w in tagged[chunk.start : chunk.end]])


def test_tune_protein_sentence(translator):
    tagged = translator.analyze(PROTEIN_SENTENCE)
    actions: list[TuningAction] = []
    raw, tuned = translator.tuned_matrix(tagged, actions)
    assert len(raw) == 15
    assert _spans(tuned) == {(5, 0, 2), ("dummy", 2, 3), (8, 3, 4), (1, 4, 6), (10, 6, 8)}
    (dummy,) = [row for row in tuned.rows if row.is_dummy]
    assert dummy.ident == "d1"
    assert dummy.surface == "are"

    rules = [action.rule for action in actions]
    assert rules.count("repeated") == 4 + 1 + 4
    assert rules.count("dummy") == 1
    assert [a.span for a in actions if a.rule == "unreachable"] == [Span(1, 2), Span(7, 8)]
    assert len(enumerate_paths(build_lattice(tuned))) == 1
    assert replay(raw, actions) == tuned


def test_dedupe_keeps_first():
    rows = [make_chunk(1, 0, 1), make_chunk(2, 0, 1), make_chunk(3, 0, 1, ar_template="(add [x] n1)")]
    actions: list[TuningAction] = []
    matrix = dedupe_repeated(build_matrix(rows, 1), actions)
    assert [row.ident for row in matrix.rows] == [1, 3]
    assert actions == [TuningAction("repeated", 2, Span(0, 1))]
    assert actions[0].detail == "repeats 1"


def test_dummy_chain_over_uncovered_words():
    matrix = insert_dummies(build_matrix([make_chunk(1, 0, 1), make_chunk(2, 3, 4)], 4))
    assert [(row.ident, row.start) for row in matrix.rows if row.is_dummy] == [("d1", 1), ("d2", 2)]


def test_dummy_only_at_reachable_nodes():
    # Node 2 is skipped: no chunk ends there.
    rows = [make_chunk(1, 0, 1), make_chunk(2, 1, 3), make_chunk(3, 3, 4), make_chunk(4, 5, 6)]
    actions: list[TuningAction] = []
    matrix = insert_dummies(build_matrix(rows, 6), actions)
    assert [(a.row_id, a.span.start) for a in actions] == [("d1", 4)]
    assert matrix.uncovered_columns() == []


def test_prune_cascades_to_fixpoint():
    rows = [
        make_chunk(1, 0, 3),
        make_chunk(2, 0, 1),
        make_chunk(3, 1, 2),
        make_chunk(4, 2, 3),
        make_chunk(5, 4, 5),
        make_chunk(6, 3, 5),
        make_chunk(7, 1, 3),
    ]
    # Nothing ends at node 4.
    actions: list[TuningAction] = []
    matrix = prune_unreachable_deadend(build_matrix(rows, 5), actions)
    assert [row.ident for row in matrix.rows] == [1, 2, 3, 4, 6, 7]
    assert actions == [TuningAction("unreachable", 5, Span(4, 5))]


def test_prune_dead_end_chain():
    rows = [make_chunk(1, 0, 3), make_chunk(2, 0, 1), make_chunk(3, 1, 2)]
    actions: list[TuningAction] = []
    matrix = prune_unreachable_deadend(build_matrix(rows, 3), actions)
    assert [row.ident for row in matrix.rows] == [1]
    assert [(a.rule, a.row_id) for a in actions] == [("dead-end", 3), ("dead-end", 2)]


def test_build_matrix_rejects_long_span():
    with pytest.raises(MatrixError):
        build_matrix([make_chunk(1, 0, 3)], 2)


def test_cells_and_uncovered_columns():
    matrix = build_matrix([make_chunk(1, 0, 2), make_chunk(2, 3, 4)], 5)
    assert matrix.cells.tolist() == [
        [True, True, False, False, False],
        [False, False, False, True, False],
    ]
    assert matrix.cell(1, 3) and not matrix.cell(0, 2)
    assert matrix.uncovered_columns() == [2, 4]
    assert build_matrix([], 2).uncovered_columns() == [0, 1]


def test_tune_fourteen_word_matrix():
    raw, data = fourteen_word_matrix()
    actions: list[TuningAction] = []
    tuned = tune(raw, actions)
    assert [row.ident for row in tuned.rows] == data["tuned"]
    removed = data["removed"]
    assert [a.row_id for a in actions if a.rule == "repeated"] == removed["repeated"]
    assert sorted(a.row_id for a in actions if a.rule == "unreachable") == removed["unreachable"]
    assert not [a for a in actions if a.rule in ("dummy", "dead-end")]
    assert group_by_template(raw)[1] == [1]
    assert replay(raw, actions) == tuned


def test_tune_empty_sentence():
    matrix = tune(build_matrix([], 0))
    assert matrix.rows == ()


def test_tune_without_any_chunk():
    matrix = tune(build_matrix([], 3, ["a", "b", "c"]))
    assert [row.surface for row in matrix.rows] == ["a", "b", "c"]
    assert [row.ident for row in matrix.rows] == ["d1", "d2", "d3"]


def _random_matrix(rng: numpy.random.Generator) -> CorrespondenceMatrix:
    n = int(rng.integers(1, 11))
    return build_matrix(random_chunks(rng, n, int(rng.integers(0, 31)), dummy_rate=0.1), n)


def test_pruning_preserves_complete_paths():
    rng = numpy.random.default_rng(2024)
    for _ in range(500):
        matrix = insert_dummies(dedupe_repeated(_random_matrix(rng)))
        before = oracle_paths(build_lattice(matrix))
        pruned = prune_unreachable_deadend(matrix)
        lattice = build_lattice(pruned)
        assert oracle_paths(lattice) == before
        assert before, "dummies make the last node reachable"
        assert set(path_idents(enumerate_paths(lattice, cap=10**6))) == before
        # Every surviving row lies on a complete path.
        on_paths = {ident for path in before for ident in path}
        assert {row.ident for row in pruned.rows} == on_paths


def test_tune_is_idempotent():
    rng = numpy.random.default_rng(99)
    for _ in range(500):
        once = tune(_random_matrix(rng))
        actions: list[TuningAction] = []
        assert tune(once, actions) == once
        assert actions == []


def test_replay_reproduces_tuning():
    rng = numpy.random.default_rng(5)
    for _ in range(100):
        raw = _random_matrix(rng)
        actions: list[TuningAction] = []
        tuned = tune(raw, actions)
        assert [row.ident for row in replay(raw, actions).rows] == [row.ident for row in tuned.rows]


def test_single_adjective_matches_two_pairs(translator):
    chunks = find_chunks(translator.analyze("necessary"), translator.resources.corpus)
    assert [(chunk.pair.id, chunk.span) for chunk in chunks] == [(8, Span(0, 1)), (13, Span(0, 1))]
    assert find_chunks(translator.analyze("xyzzy plugh"), translator.resources.corpus) == []


def test_doubly_dead_row_is_removed():
    rows = [make_chunk(1, 0, 8), make_chunk(2, 3, 5)]
    matrix = prune_unreachable_deadend(build_matrix(rows, 8))
    assert [row.ident for row in matrix.rows] == [1]
    assert insert_dummies(matrix) == matrix
