import io
import json

import pytest

from chunklate.errors import DataFileError
from chunklate.tagset import (
    DEFAULT_TAGSET,
    Tag,
    Tagset,
    check_tag,
    load_tagset,
    template_key,
)


def test_bundled_tagset_matches_builtin(resources):
    assert resources.tagset == DEFAULT_TAGSET


def test_tagset_requires_unknown_category():
    with pytest.raises(RuntimeError):
        Tagset(categories=("n", "v"), attributes=())


def test_tagset_rejects_duplicates():
    with pytest.raises(RuntimeError):
        Tagset(categories=("n", "n", "unk"), attributes=())


def test_key_is_canonical():
    assert DEFAULT_TAGSET.key({"f", "s"}) == "s,f"
    assert DEFAULT_TAGSET.key(()) == "default"
    assert DEFAULT_TAGSET.parse_key("f, s") == frozenset({"s", "f"})
    assert DEFAULT_TAGSET.parse_key("default") == frozenset()
    with pytest.raises(ValueError):
        DEFAULT_TAGSET.parse_key("plural")


def test_tag_parse_and_format():
    tag = Tag.parse("n [pl ,f]")
    assert tag == Tag("n", {"f", "pl"})
    assert tag.format() == "n [pl,f]"
    assert str(Tag.parse("adj")) == "adj"
    assert str(Tag.parse("poss [1, m, pl]")) == "poss [pl,m,1]"
    with pytest.raises(ValueError):
        Tag.parse("n [pl] extra")


def test_subsumption():
    assert Tag("n").subsumes(Tag("n", {"pl", "f"}))
    assert Tag("n", {"pl"}).subsumes(Tag("n", {"pl", "f"}))
    assert not Tag("n", {"pl", "f"}).subsumes(Tag("n", {"pl"}))
    assert not Tag("n").subsumes(Tag("adj"))


def test_check_tag():
    check_tag(Tag("v", {"ing"}), DEFAULT_TAGSET)
    with pytest.raises(ValueError):
        check_tag(Tag("noun"), DEFAULT_TAGSET)
    with pytest.raises(ValueError):
        check_tag(Tag("n", {"dual"}), DEFAULT_TAGSET)


def test_template_key_ignores_attribute_order():
    a = template_key([Tag("art", {"def"}), Tag("n", {"f", "pl"})])
    b = template_key([Tag("art", {"def"}), Tag("n", {"pl", "f"})])
    assert a == b == "art [def] n [pl,f]"


def test_load_tagset(tmp_path):
    path = tmp_path / "tagset.json"
    path.write_text(json.dumps({"categories": ["n", "unk"], "attributes": ["pl"]}))
    assert load_tagset(path) == Tagset(("n", "unk"), ("pl",))

    path.write_text(json.dumps({"categories": ["n"]}))
    with pytest.raises(DataFileError):
        load_tagset(path)


def test_tag_to_json():
    assert Tag("n", {"f", "pl"}).to_json() == {"cat": "n", "attrs": ["pl", "f"]}
    assert json.load(io.StringIO(json.dumps(Tag("adj").to_json()))) == {
        "cat": "adj",
        "attrs": [],
    }
