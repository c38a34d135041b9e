"""
Plain-text (.st) and DOT formats for structures
"""
import logging
from typing import List, Optional, Set, Tuple

from homimage.core.exceptions import ParseError
from homimage.models.models import Kind, LoopModel, Shape, Structure
from homimage.services.structures.structure_service import structure_service

logger = logging.getLogger(__name__)


def parse_structure(text: str) -> Tuple[Structure, Kind]:
    """
    Parse the line-oriented structure format.

    Header lines `kind`, `model` and `vertices` come first, followed by
    `edge u v` lines (graphs list each undirected edge once with u < v) and,
    for the plain model only, `loop v` lines. Lines starting with `#` are
    comments. The parsed structure is validated against its declared kind.
    """
    header: dict = {}
    edges: Set[Tuple[int, int]] = set()
    seen: Set[Tuple[int, int]] = set()

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *args = line.split()

        if keyword in ("kind", "model", "vertices"):
            if edges or seen:
                raise ParseError(f"'{keyword}' after edge lines", number)
            if keyword in header:
                raise ParseError(f"duplicate '{keyword}' line", number)
            if len(args) != 1:
                raise ParseError(f"'{keyword}' takes one argument", number)
            header[keyword] = _parse_header_value(keyword, args[0], number)
            continue

        if keyword not in ("edge", "loop"):
            raise ParseError(f"unknown keyword '{keyword}'", number)
        if len(header) != 3:
            raise ParseError("kind, model and vertices must precede edges", number)

        kind: Kind = Kind(shape=header["kind"], model=header["model"])
        n: int = header["vertices"]
        ints = _parse_ints(args, 2 if keyword == "edge" else 1, number)
        for v in ints:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", number)

        if keyword == "loop":
            if kind.model != LoopModel.PLAIN:
                raise ParseError(f"'loop' lines are only allowed in the plain model", number)
            pair = (ints[0], ints[0])
        else:
            u, v = ints
            if u == v:
                raise ParseError("loops are written as 'loop v', never as edges", number)
            if kind.shape == Shape.GRAPH and u > v:
                raise ParseError("graph edges are listed once with u < v", number)
            pair = (u, v)

        if pair in seen:
            raise ParseError(f"duplicate {keyword} {' '.join(map(str, ints))}", number)
        seen.add(pair)
        edges.add(pair)
        if kind.shape == Shape.GRAPH and pair[0] != pair[1]:
            edges.add((pair[1], pair[0]))

    missing = [key for key in ("kind", "model", "vertices") if key not in header]
    if missing:
        raise ParseError(f"missing header line(s): {', '.join(missing)}")

    kind = Kind(shape=header["kind"], model=header["model"])
    n = header["vertices"]
    if kind.model == LoopModel.REFLEXIVE:
        edges.update((v, v) for v in range(n))

    structure = Structure.from_edges(n, edges)
    structure_service.validate(structure, kind)
    return structure, kind


def _parse_header_value(keyword: str, value: str, number: int):
    try:
        if keyword == "kind":
            return Shape(value)
        if keyword == "model":
            return LoopModel(value)
        n = int(value)
    except ValueError:
        raise ParseError(f"invalid {keyword} '{value}'", number)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", number)
    return n


def _parse_ints(args: List[str], count: int, number: int) -> List[int]:
    if len(args) != count:
        raise ParseError(f"expected {count} vertex argument(s)", number)
    try:
        return [int(a) for a in args]
    except ValueError:
        raise ParseError(f"non-integer vertex in {args}", number)


def format_structure(structure: Structure, kind: Kind, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"kind {kind.shape.value}")
    lines.append(f"model {kind.model.value}")
    lines.append(f"vertices {structure.n}")
    for u, v in structure.non_loop_edges():
        if kind.shape == Shape.GRAPH and u > v:
            continue
        lines.append(f"edge {u} {v}")
    if kind.model == LoopModel.PLAIN:
        lines.extend(f"loop {v}" for v in structure.vertices if structure.has_loop(v))
    return "\n".join(lines) + "\n"


def to_dot(structure: Structure, kind: Kind, name: str = "S") -> str:
    directed = kind.shape != Shape.GRAPH
    arrow = "->" if directed else "--"
    lines = [f"// kind {kind.shape.value}, model {kind.model.value}"]
    if kind.model == LoopModel.REFLEXIVE:
        lines.append("// every vertex carries a loop; loops are not drawn")
    lines.append(f"{'digraph' if directed else 'graph'} {name} {{")
    lines.extend(f"  {v};" for v in structure.vertices)
    for u, v in structure.sorted_edges:
        if u == v and kind.model == LoopModel.REFLEXIVE:
            continue
        if not directed and u > v:
            continue
        lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
