import time
import typing as ty

import matplotlib.pyplot as plt
import numpy

from chunklate.corpus import TemplatePair
from chunklate.lattice import Lattice, enumerate_paths, select_optimal
from chunklate.matcher import ChunkInstance, Span
from chunklate.tagset import Tag

SENTENCE_LENGTHS = [4, 6, 8, 10, 12, 14]
CHUNKS_PER_WORD = 3
REPEATS = 5
rng = numpy.random.default_rng(0)


def random_lattice(n: int) -> Lattice:
    edges: ty.List[ChunkInstance] = [
        ChunkInstance.dummy(f"d{j + 1}", j, f"w{j + 1}") for j in range(n)
    ]
    for k in range(CHUNKS_PER_WORD * n):
        start = int(rng.integers(0, n))
        end = int(rng.integers(start + 1, min(n, start + 4) + 1))
        pair = TemplatePair(k + 1, (Tag("n"),) * (end - start), "(n1)")
        edges.append(ChunkInstance(k + 1, Span(start, end), "normal", pair, ""))
    return Lattice(n, tuple(edges))


print("Timing optimal path selection...")
dp_times: ty.List[float] = []
enumeration_times: ty.List[float] = []
path_counts: ty.List[int] = []
for n in SENTENCE_LENGTHS:
    lattices = [random_lattice(n) for _ in range(REPEATS)]
    start = time.perf_counter()
    for lattice in lattices:
        select_optimal(lattice)
    dp_times.append((time.perf_counter() - start) / REPEATS)

    start = time.perf_counter()
    counts = []
    for lattice in lattices:
        paths = enumerate_paths(lattice, cap=10**6)
        best = min(path.cost for path in paths)
        _optimal = [path for path in paths if path.cost == best]
        counts.append(len(paths))
    enumeration_times.append((time.perf_counter() - start) / REPEATS)
    path_counts.append(int(numpy.mean(counts)))
    print(f"  n={n}: {path_counts[-1]} paths on average")

print("Plotting...")
fig, ax = plt.subplots()
ax.loglog(path_counts, dp_times, "o-", label="dynamic programming")
ax.loglog(path_counts, enumeration_times, "s-", label="enumerate then filter")
ax.set_xlabel("Mean number of complete paths")
ax.set_ylabel("Time per lattice (s)")
ax.legend()
plt.show()
