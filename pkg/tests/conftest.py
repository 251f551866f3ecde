from __future__ import annotations

import random
from pathlib import Path

import pytest

from codegb import BinaryCode, BinaryMatrix, Graph
from codegb.kernels import BACKENDS

FIXTURES = Path(__file__).parent / "fixtures"

EXAMPLE1_ROWS = ["110110", "011001", "101111"]
TOY_ROWS = ["101", "011"]
HOUSE_EDGES = ((1, 2), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5))


def example1_code() -> BinaryCode:
    return BinaryCode.from_generator(BinaryMatrix.from_rows(EXAMPLE1_ROWS))


def toy_code() -> BinaryCode:
    return BinaryCode.from_generator(BinaryMatrix.from_rows(TOY_ROWS))


def house_graph() -> Graph:
    return Graph(5, HOUSE_EDGES)


def random_code(rng: random.Random, n: int, k: int) -> BinaryCode:
    """Random code of length n and dimension exactly k (redrawn until full rank)."""
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        code = BinaryCode.from_generator(BinaryMatrix(tuple(rows), n))
        if code.k == k:
            return code


def random_codes(seed: int, count: int, max_n: int = 12, max_k: int | None = None) -> list[BinaryCode]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        k = rng.randint(1, n if max_k is None else min(n, max_k))
        out.append(random_code(rng, n, k))
    return out


def random_connected_graph(rng: random.Random, max_v: int = 9, max_e: int = 14) -> Graph:
    """Random connected simple graph: random spanning tree plus extra edges."""
    v = rng.randint(3, max_v)
    verts = list(range(1, v + 1))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, v):
        u = verts[i]
        w = verts[rng.randrange(i)]
        edges.add((min(u, w), max(u, w)))
    all_pairs = [(a, b) for a in range(1, v + 1) for b in range(a + 1, v + 1) if (a, b) not in edges]
    rng.shuffle(all_pairs)
    extra = rng.randint(0, max(0, min(len(all_pairs), max_e - len(edges))))
    edges |= set(all_pairs[:extra])
    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    return Graph(v, tuple(edge_list))


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param
