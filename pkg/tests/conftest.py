import json
import typing as ty

import networkx
import numpy
import pytest

from chunklate.config import BUNDLED_DATA, DataPaths, Resources, load_resources
from chunklate.corpus import TemplatePair
from chunklate.lattice import Lattice
from chunklate.matcher import ChunkInstance, CorrespondenceMatrix, Span, build_matrix
from chunklate.pipeline import Translator
from chunklate.tagset import Tag

PROTEIN_SENTENCE = "The proteins are necessary for building our bodies"
PROTEIN_ARABIC = "البروتينيات ضرورية لبناء أجسامنا"


@pytest.fixture(scope="session")
def resources() -> Resources:
    return load_resources(DataPaths.from_directory(BUNDLED_DATA))


@pytest.fixture(scope="session")
def translator(resources) -> Translator:
    return Translator(resources)


def load_fixture(name: str) -> ty.Any:
    with open(BUNDLED_DATA / name, "r", encoding="utf-8") as f:
        return json.load(f)


def make_pair(
    pair_id: int, length: int, ar_template: str = "(n1)", tags: ty.Sequence[Tag] = ()
) -> TemplatePair:
    en_template = tuple(tags) if tags else (Tag("n"),) * length
    return TemplatePair(pair_id, en_template, ar_template)


def make_chunk(
    ident: int, start: int, end: int, pair_id: ty.Optional[int] = None, ar_template: str = "(n1)"
) -> ChunkInstance:
    pair = make_pair(ident if pair_id is None else pair_id, end - start, ar_template)
    return ChunkInstance(ident, Span(start, end), "normal", pair, f"w{start + 1}..w{end}")


def eleven_word_lattice() -> tuple[Lattice, dict[str, ty.Any]]:
    """Eleven-word lattice with eight complete paths, and its reference data."""
    data = load_fixture("eleven_word_lattice.json")
    edges = []
    for k, edge in enumerate(data["edges"], start=1):
        start, end = edge["span"]
        if edge["kind"] == "dummy":
            edges.append(ChunkInstance.dummy(edge["label"], start, f"w{start + 1}"))
        else:
            edges.append(make_chunk(k, start, end, pair_id=int(edge["label"][2:])))
    return Lattice(data["n"], tuple(edges)), data


def random_chunks(
    rng: numpy.random.Generator, n: int, count: int, dummy_rate: float = 0.0
) -> list[ChunkInstance]:
    """Random rows over ``n`` words; a few templates so that repeated rows occur."""
    chunks: list[ChunkInstance] = []
    for k in range(1, count + 1):
        start = int(rng.integers(0, n))
        if rng.random() < dummy_rate:
            chunks.append(ChunkInstance.dummy(f"x{k}", start, f"w{start + 1}"))
            continue
        end = int(rng.integers(start + 1, min(n, start + 4) + 1))
        template = ["(n1)", "(add [ال] n1)"][int(rng.integers(0, 2))]
        chunks.append(make_chunk(k, start, end, ar_template=template))
    return chunks


def oracle_paths(lattice: Lattice) -> set[tuple[ty.Any, ...]]:
    """Complete paths as identifier tuples, computed by networkx."""
    graph = lattice.to_networkx()
    return {
        tuple(key for _, _, key in path)
        for path in networkx.all_simple_edge_paths(graph, 0, lattice.n)
    }


def path_idents(paths: ty.Iterable[ty.Any]) -> list[tuple[ty.Any, ...]]:
    return [tuple(edge.ident for edge in path.edges) for path in paths]


def fourteen_word_matrix() -> tuple[CorrespondenceMatrix, dict[str, ty.Any]]:
    """Raw matrix of the fourteen-word sentence, one corpus pair per row."""
    data = load_fixture("fourteen_word_matrix.json")
    tags = [Tag.parse(text) for text in data["tags"]]
    words = data["sentence"].split()
    rows = []
    for row in data["rows"]:
        start, end = row["span"]
        pair = TemplatePair(row["id"], tuple(tags[start:end]), row["ar_template"])
        rows.append(
            ChunkInstance(row["id"], Span(start, end), "normal", pair, " ".join(words[start:end]))
        )
    return build_matrix(rows, len(tags), words), data
