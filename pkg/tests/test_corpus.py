import io
import json

import numpy
import pytest

from chunklate.corpus import Corpus, TemplatePair, load_corpus, match_exact, validate
from chunklate.errors import DataFileError
from chunklate.tagset import Tag

ART = Tag("art", {"def"})
NOUN = Tag("n", {"pl", "f"})


def _record(pair_id, ar_template="(add [ال] n1 [pmean])", **extra):
    return {
        "id": pair_id,
        "en_template": [{"cat": "art", "attrs": ["def"]}, {"cat": "n", "attrs": ["f", "pl"]}],
        "ar_template": ar_template,
        **extra,
    }


def _jsonl(*records) -> io.StringIO:
    return io.StringIO("\n".join(json.dumps(r, ensure_ascii=False) for r in records))


def test_bundled_corpus(resources):
    corpus = resources.corpus
    assert len(corpus) == 14
    assert [pair.id for pair in corpus] == list(range(1, 15))
    assert corpus[10].key == "poss [pl,m,1] n [pl,f]"
    assert corpus[7].ar_example == "البروتينيات"


def test_index_groups_identical_templates(resources):
    index = resources.corpus.index
    assert index["prep v [ing]"] == (1, 2, 3, 6, 9)
    assert index["art [def] n [pl,f]"] == (5, 7, 11, 12, 14)
    assert index["adj"] == (8, 13)


def test_match_exact(resources):
    corpus = resources.corpus
    assert [p.id for p in corpus.match_exact([Tag("prep"), Tag("v", {"ing"})])] == [1, 2, 3, 6, 9]
    assert [p.id for p in match_exact(corpus, [ART, NOUN])] == [5, 7, 11, 12, 14]
    assert [p.id for p in corpus.match_exact([NOUN])] == [4]
    assert corpus.match_exact([Tag("be", {"p", "pl"})]) == []
    # Missing attributes do not match; extra ones do.
    assert corpus.match_exact([Tag("n", {"pl"})]) == []
    assert [p.id for p in corpus.match_exact([Tag("adj", {"neg"})])] == [8, 13]
    with pytest.raises(ValueError):
        corpus.match_exact([])


def test_index_agrees_with_linear_scan(resources):
    rng = numpy.random.default_rng(7)
    vocabulary = [ART, NOUN, Tag("n", {"f"}), Tag("prep"), Tag("v", {"ing"}), Tag("adj"),
                  Tag("poss", {"pl", "m", "1"}), Tag("be", {"p", "pl"})]
    for _ in range(500):
        query = [vocabulary[i] for i in rng.integers(0, len(vocabulary), rng.integers(1, 4))]
        expected = [p for p in resources.corpus if p.matches(query)]
        assert resources.corpus.match_exact(query) == expected


def test_load_corpus_reports_template_line():
    source = _jsonl(_record(1), _record(2, ar_template="(add [ال n1 [pmean])"))
    with pytest.raises(DataFileError) as info:
        load_corpus(source)
    assert info.value.line == 2
    assert "invalid Arabic template" in str(info.value)


@pytest.mark.parametrize(
    "records",
    [
        [_record(1), _record(1)],
        [{"id": 1, "en_template": [], "ar_template": "(n1)"}],
        [{"id": 1, "en_template": [{"cat": "noun"}], "ar_template": "(n1)"}],
        [{"id": 1, "en_template": [{"cat": "n", "attrs": ["dual"]}], "ar_template": "(n1)"}],
        [{"en_template": [{"cat": "n"}], "ar_template": "(n1)"}],
    ],
)
def test_load_corpus_rejects_bad_records(records):
    with pytest.raises(DataFileError):
        load_corpus(_jsonl(*records))


def test_empty_corpus():
    with pytest.warns(UserWarning, match="Empty corpus"):
        assert len(load_corpus(io.StringIO(""))) == 0


def test_corpus_rejects_duplicated_ids():
    pair = TemplatePair(1, (NOUN,), "(n1)")
    with pytest.raises(RuntimeError):
        Corpus([pair, pair])


def test_bundled_corpus_validates(resources):
    report = validate(resources.corpus)
    assert report.is_clean
    assert [note.pair_ids for note in report.duplicates] == [
        (1, 2, 3, 6, 9),
        (5, 7, 11, 12, 14),
        (8, 13),
    ]


def test_validate_dangling_reference():
    corpus = load_corpus(_jsonl(_record(1, ar_template="(add [ال] n2 [pmean])"), _record(2)))
    report = validate(corpus)
    assert not report.is_clean
    (finding,) = report.findings
    assert finding.kind == "dangling"
    assert finding.pair_ids == (1,)
    assert str(finding).startswith("dangling\t1\t")


def test_duplicates_need_same_arabic():
    corpus = load_corpus(_jsonl(_record(1), _record(2, ar_template="(n1 [pmean])")))
    assert validate(corpus).duplicates == []


def test_validate_category_absent_from_english_side():
    corpus = Corpus([TemplatePair(1, (Tag("adj"),), "(n1 [pmean])")])
    (finding,) = validate(corpus).findings
    assert finding.kind == "dangling"
