from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator


class Shape(str, Enum):
    GRAPH = "graph"
    DIGRAPH = "digraph"
    TOURNAMENT = "tournament"


class LoopModel(str, Enum):
    REFLEXIVE = "reflexive"
    IRREFLEXIVE = "irreflexive"
    PLAIN = "plain"


class Strength(str, Enum):
    STANDARD = "standard"
    STRONG = "strong"


class Kind(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: Shape
    model: LoopModel

    def __str__(self) -> str:
        return f"{self.shape.value}/{self.model.value}"


class StructureClass(str, Enum):
    IRREFLEXIVE_GRAPHS = "irreflexive-graphs"
    REFLEXIVE_GRAPHS = "reflexive-graphs"
    DIGRAPHS = "digraphs"
    IRREFLEXIVE_DIGRAPHS = "irreflexive-digraphs"
    REFLEXIVE_DIGRAPHS = "reflexive-digraphs"
    REFLEXIVE_TOURNAMENTS = "reflexive-tournaments"

    @property
    def kind(self) -> Kind:
        return CLASS_KINDS[self]


CLASS_KINDS = {
    StructureClass.IRREFLEXIVE_GRAPHS: Kind(shape=Shape.GRAPH, model=LoopModel.IRREFLEXIVE),
    StructureClass.REFLEXIVE_GRAPHS: Kind(shape=Shape.GRAPH, model=LoopModel.REFLEXIVE),
    StructureClass.DIGRAPHS: Kind(shape=Shape.DIGRAPH, model=LoopModel.PLAIN),
    StructureClass.IRREFLEXIVE_DIGRAPHS: Kind(shape=Shape.DIGRAPH, model=LoopModel.IRREFLEXIVE),
    StructureClass.REFLEXIVE_DIGRAPHS: Kind(shape=Shape.DIGRAPH, model=LoopModel.REFLEXIVE),
    StructureClass.REFLEXIVE_TOURNAMENTS: Kind(shape=Shape.TOURNAMENT, model=LoopModel.REFLEXIVE),
}


class FamilyName(str, Enum):
    COMPLETE_GRAPH = "complete-graph"
    EMPTY_GRAPH = "empty-graph"
    SUBCOMPLETE_GRAPH = "subcomplete-graph"
    COMPLETE_DIGRAPH = "complete-digraph"
    SUBCOMPLETE_DIGRAPH = "subcomplete-digraph"
    BIDIRECT = "bidirect"
    PARITY_TOURNAMENT = "parity-tournament"


# Core structure model
class Structure(BaseModel):
    """A finite vertex set 0..n-1 with one binary edge relation."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    @model_validator(mode="after")
    def check_edges_in_range(self):
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n} vertices")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Structure":
        return cls(n=n, edges=frozenset((int(u), int(v)) for u, v in edges))

    @classmethod
    def from_masks(cls, n: int, out_masks: Iterable[int]) -> "Structure":
        """Build from trusted row bitmasks (bit v of row u set iff u -> v)."""
        edges = frozenset(
            (u, v) for u, row in enumerate(out_masks) for v in range(n) if row >> v & 1
        )
        return cls.model_construct(n=n, edges=edges)

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
        return tuple(rows)

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        cols = [0] * self.n
        for u, v in self.edges:
            cols[v] |= 1 << u
        return tuple(cols)

    @cached_property
    def sorted_edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def has_loop(self, v: int) -> bool:
        return bool(self.out_masks[v] >> v & 1)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def is_reflexive(self) -> bool:
        return all(self.has_loop(v) for v in self.vertices)

    @property
    def is_irreflexive(self) -> bool:
        return not any(self.has_loop(v) for v in self.vertices)

    def non_loop_edges(self) -> Iterator[Tuple[int, int]]:
        return ((u, v) for u, v in self.sorted_edges if u != v)

    def __str__(self) -> str:
        return f"Structure(n={self.n}, edges={list(self.sorted_edges)})"


class Mapping(BaseModel):
    """A total function between the vertex sets of two structures."""
    model_config = ConfigDict(frozen=True)

    source_size: int = Field(ge=0)
    target_size: int = Field(ge=0)
    values: Tuple[int, ...]

    @model_validator(mode="after")
    def check_total(self):
        if len(self.values) != self.source_size:
            raise ValueError(
                f"mapping has {len(self.values)} values for {self.source_size} source vertices"
            )
        for v in self.values:
            if not 0 <= v < self.target_size:
                raise ValueError(f"value {v} outside target range {self.target_size}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Mapping":
        return cls(source_size=n, target_size=n, values=tuple(range(n)))

    def __getitem__(self, vertex: int) -> int:
        return self.values[vertex]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target_size

    def __str__(self) -> str:
        return " ".join(f"{u}->{v}" for u, v in enumerate(self.values))


# Decomposition Models
class Decomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    e_set: Tuple[int, ...] = ()
    c_set: Tuple[int, ...] = ()
    f_set: Tuple[int, ...] = ()
    e_to_c: bool = False
    c_to_e: bool = False

    @field_validator('e_set', 'c_set', 'f_set', mode='before')
    @classmethod
    def sort_vertices(cls, v):
        return tuple(sorted(v))


class Signature(BaseModel):
    """Type counts of the empty and complete parts relative to a fixed bounded part."""
    model_config = ConfigDict(frozen=True)

    f_structure: Structure
    e_to_c: bool = False
    c_to_e: bool = False
    type_table: Tuple[Structure, ...]
    e_counts: Tuple[int, ...]
    c_counts: Tuple[int, ...]

    @model_validator(mode="after")
    def check_lengths(self):
        if not (len(self.type_table) == len(self.e_counts) == len(self.c_counts)):
            raise ValueError("type table and count vectors must have equal length")
        return self

    def counts_for(self, type_structure: Structure) -> Tuple[int, int]:
        for t, e, c in zip(self.type_table, self.e_counts, self.c_counts):
            if t == type_structure:
                return e, c
        return 0, 0


class DisjointPairs(BaseModel):
    model_config = ConfigDict(frozen=True)

    size: int
    pairs: Tuple[Tuple[int, int], ...] = ()


# Classification Models
class SubcompleteShape(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    proper: bool


class Outcome(str, Enum):
    WQO = "wqo"
    NOT_WQO = "not-wqo"
    OPEN = "open"


class WitnessFamilyName(str, Enum):
    PROPER_SUBCOMPLETE_GRAPHS = "proper-subcomplete-graphs"
    PROPER_SUBCOMPLETE_DIGRAPHS = "proper-subcomplete-digraphs"
    BIDIRECTED_SUBCOMPLETE_GRAPHS = "bidirected-subcomplete-graphs"
    IRREFLEXIVE_COMPLETE_GRAPHS = "irreflexive-complete-graphs"
    IRREFLEXIVE_COMPLETE_DIGRAPHS = "irreflexive-complete-digraphs"
    PARITY_TOURNAMENTS = "parity-tournaments"


class WitnessFamily(BaseModel):
    """An antichain family; member i has `start + i * step` vertices."""
    model_config = ConfigDict(frozen=True)

    name: WitnessFamilyName
    start: int
    step: int = 1


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: Outcome
    finite_ideal: bool = False
    witness_family: Optional[WitnessFamily] = None
    theorem_tag: str

    @model_validator(mode="after")
    def check_witness(self):
        if self.outcome == Outcome.NOT_WQO and self.witness_family is None:
            raise ValueError("not-wqo verdicts carry a witness family")
        if self.outcome == Outcome.OPEN and self.witness_family is not None:
            raise ValueError("open verdicts carry no witness family")
        return self


# Enumeration / verification Models
class PropositionTag(str, Enum):
    """Citation tags of the named checks; each member's slug is accepted as an alias."""
    SUBCOMPLETE_GRAPH_IMAGES = "P3.2"
    SUBCOMPLETE_DIGRAPH_IMAGES = "P4.4"
    TOURNAMENT_RIGIDITY = "P5.1"
    DOMINANCE_EPIMORPHISM = "T2.4"
    BOUNDED_DISJOINT_EDGES = "C2.5"
    BOUNDED_PARTIAL_PAIRS = "L4.6"
    PARTIAL_ORDER = "PO"
    COMPLETE_GRAPH_CONSTRUCTION = "T3.6"
    SUBCOMPLETE_CONSTRUCTION = "T3.4"

    @property
    def slug(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            for member in cls:
                if value.lower() in (member.slug, member.value.lower()):
                    return member
        return None


class ReportOutcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class PropositionReport(BaseModel):
    tag: str
    bound: int
    outcome: ReportOutcome
    elapsed: float
    checked: int = 0
    counterexample: Optional[str] = None
    detail: Optional[str] = None


class AntichainSearchResult(BaseModel):
    members: Optional[List[Structure]] = None
    greedy: bool = False
    candidates: int = 0

    @computed_field
    @property
    def found(self) -> bool:
        return self.members is not None


class Relation(str, Enum):
    LESS = "A < B"
    GREATER = "B < A"
    EQUAL = "A = B (isomorphic)"
    INCOMPARABLE = "incomparable"


class ComparisonResult(BaseModel):
    relation: Relation
    strength: Strength
    witness: Optional[Mapping] = None


# Response Models
class ErrorResponse(BaseModel):
    success: bool = False
    message: str
    error_code: Optional[str] = None
