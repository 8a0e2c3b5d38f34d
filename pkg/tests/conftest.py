"""Shared corpora for the test suite.

The corpus matches the verification sweep: every named family plus 200
seeded random graphs on up to 6 vertices, and 50 seeded random rational
arrangements in dimension up to 4 with up to 7 hyperplanes.
"""

import random

import pytest

from chromabounds import char_poly, chromatic_poly, coeff_sequence
from chromabounds.corpus import named_graphs, random_arrangements, random_graphs

CORPUS_SEED = 1729


@pytest.fixture(scope="session")
def graph_corpus():
    rng = random.Random(CORPUS_SEED)
    out = [(f"named:{name}", g) for name, g in named_graphs()]
    out += [(f"random[{i}]", g) for i, g in enumerate(random_graphs(rng, 200, 6))]
    return out


@pytest.fixture(scope="session")
def arrangement_corpus():
    rng = random.Random(CORPUS_SEED + 1)
    return [(f"arr[{i}]", a) for i, a in enumerate(random_arrangements(rng, 50, 4, 7))]


@pytest.fixture(scope="session")
def chromatic_memo():
    return {}


@pytest.fixture(scope="session")
def graph_sequences(graph_corpus, chromatic_memo):
    out = []
    for label, g in graph_corpus:
        p = chromatic_poly(g, memo=chromatic_memo)
        out.append((label, g, p, coeff_sequence(p, g.m)))
    return out


@pytest.fixture(scope="session")
def arrangement_sequences(arrangement_corpus):
    out = []
    for label, arr in arrangement_corpus:
        p = char_poly(arr)
        out.append((label, arr, p, coeff_sequence(p, arr.m)))
    return out
