"""
Structure builders and hypothesis strategies shared by the tests
"""
import itertools
from pathlib import Path
from typing import Iterable, Tuple

from hypothesis import strategies as st

from homimage.models.models import Kind, LoopModel, Shape, Structure

DATA_DIR = Path(__file__).parent / "data"

REFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE)
IRREFLEXIVE_GRAPH = Kind(shape=Shape.GRAPH, model=LoopModel.IRREFLEXIVE)
REFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE)
IRREFLEXIVE_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.IRREFLEXIVE)
PLAIN_DIGRAPH = Kind(shape=Shape.DIGRAPH, model=LoopModel.PLAIN)
REFLEXIVE_TOURNAMENT = Kind(shape=Shape.TOURNAMENT, model=LoopModel.REFLEXIVE)
IRREFLEXIVE_TOURNAMENT = Kind(shape=Shape.TOURNAMENT, model=LoopModel.IRREFLEXIVE)


def graph(n: int, pairs: Iterable[Tuple[int, int]], reflexive: bool = True) -> Structure:
    """Graph on n vertices from undirected pairs"""
    edges = set()
    for u, v in pairs:
        edges.update({(u, v), (v, u)})
    if reflexive:
        edges.update((v, v) for v in range(n))
    return Structure.from_edges(n, edges)


def digraph(n: int, pairs: Iterable[Tuple[int, int]], reflexive: bool = False) -> Structure:
    edges = set(pairs)
    if reflexive:
        edges.update((v, v) for v in range(n))
    return Structure.from_edges(n, edges)


def cycle(n: int, reflexive: bool = True) -> Structure:
    return graph(n, [(i, (i + 1) % n) for i in range(n)], reflexive)


def all_structures(n: int) -> Iterable[Structure]:
    """Every labeled plain digraph on n vertices"""
    pairs = list(itertools.product(range(n), repeat=2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield Structure.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def plain_digraphs(draw, min_n: int = 0, max_n: int = 4) -> Structure:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.product(range(n), repeat=2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Structure.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def reflexive_graphs(draw, min_n: int = 0, max_n: int = 5) -> Structure:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph(n, (p for p, keep in zip(pairs, chosen) if keep))

