from enum import Enum
from itertools import combinations
from pydantic import BaseModel, ConfigDict, model_validator
from typing import Dict, Iterable, Optional, Sequence, Set, Tuple

from models.tree import Tree

class MorphismKind(str, Enum):
    IDENTITY = "identity"
    INNER_FACE = "inner_face"
    OUTER_FACE = "outer_face"
    EDGE_INCLUSION = "edge_inclusion"
    DEGENERACY = "degeneracy"
    ISOMORPHISM = "isomorphism"
    COMPOSITE = "composite"

    def is_face(self) -> bool:
        return self in (MorphismKind.INNER_FACE, MorphismKind.OUTER_FACE, MorphismKind.EDGE_INCLUSION)

def has_operation(tree: Tree, inputs: Sequence[str], output: str) -> bool:
    """
    Whether the operad generated by `tree` has an operation with the given input and output colours:
    either the unit on `output`, or the composite of the vertices between `output` and a cut formed by
    `inputs` in which every other branch ends in a stump.
    """
    if len(inputs) == 1 and inputs[0] == output:
        return True
    if len(set(inputs)) != len(inputs):
        return False
    for colour in inputs:
        if colour == output or not tree.is_below(output, colour):
            return False
    for first, second in combinations(inputs, 2):
        if tree.comparable(first, second):
            return False
    return _is_cut_covered(tree, output, set(inputs))

def _is_cut_covered(tree: Tree, edge: str, cut: Set[str]) -> bool:
    if edge not in tree.shape.inputs:
        return False
    return all(child in cut or _is_cut_covered(tree, child, cut) for child in tree.inputs(edge))

def is_operad_map(source: Tree, target: Tree, edge_map: Dict[str, str]) -> bool:
    for vertex in source.vertices:
        if not has_operation(target, [edge_map[edge] for edge in source.inputs(vertex)], edge_map[vertex]):
            return False
    return True

class TreeMorphism(BaseModel):
    """
    An arrow of the tree category. Arrows are determined by their effect on edges, so equality and
    hashing only look at the endpoints and the edge map; `kind` and `locus` describe how it was built.
    """
    model_config = ConfigDict(frozen=True)

    source: Tree
    target: Tree
    edge_map: Dict[str, str]
    kind: MorphismKind = MorphismKind.COMPOSITE
    locus: Optional[str] = None

    @model_validator(mode="after")
    def _check_operad_map(self) -> "TreeMorphism":
        if set(self.edge_map) != set(self.source.edges):
            raise ValueError(f"Edge map domain {sorted(self.edge_map)} differs from source edges {list(self.source.edges)}")
        unknown = sorted(set(self.edge_map.values()) - set(self.target.edges))
        if unknown:
            raise ValueError(f"Edge map hits edges {unknown} absent from the target")
        if not is_operad_map(self.source, self.target, self.edge_map):
            raise ValueError(f"Edge map {self.edge_map} does not send every vertex to an operation of the target")
        return self

    @classmethod
    def trusted(
        cls,
        source: Tree,
        target: Tree,
        edge_map: Dict[str, str],
        kind: MorphismKind = MorphismKind.COMPOSITE,
        locus: Optional[str] = None
    ) -> "TreeMorphism":
        return cls.model_construct(source=source, target=target, edge_map=edge_map, kind=kind, locus=locus)

    @classmethod
    def identity(cls, tree: Tree) -> "TreeMorphism":
        return cls.trusted(tree, tree, {edge: edge for edge in tree.edges}, MorphismKind.IDENTITY)

    @property
    def key(self) -> Tuple[str, ...]:
        return tuple(self.edge_map[edge] for edge in self.source.edges)

    @property
    def image(self) -> Set[str]:
        return set(self.edge_map.values())

    @property
    def normal_form(self) -> "NormalForm":
        from omega.normal_form import normal_form
        return normal_form(self)

    def is_identity(self) -> bool:
        return self.source == self.target and all(source == target for source, target in self.edge_map.items())

    def is_injective(self) -> bool:
        return len(self.image) == len(self.edge_map)

    def is_surjective(self) -> bool:
        return self.image == set(self.target.edges)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective() and len(self.source.vertices) == len(self.target.vertices)

    def preimage(self, edge: str) -> Tuple[str, ...]:
        return tuple(source for source in self.source.edges if self.edge_map[source] == edge)

    def label(self) -> str:
        if self.locus is None:
            return self.kind.value
        return f"{self.kind.value}:{self.locus}"

    def __json__(self) -> dict:
        json = {
            "source": self.source.__json__(),
            "target": self.target.__json__(),
            "edge_map": {edge: self.edge_map[edge] for edge in self.source.edges},
            "kind": self.kind.value
        }
        if self.locus is not None:
            json["locus"] = self.locus
        return json

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreeMorphism):
            return False
        return self.source == other.source and self.target == other.target and self.edge_map == other.edge_map

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.key))

    def __repr__(self) -> str:
        return f"TreeMorphism({self.label()}, {self.source!r} -> {self.target!r}, {self.edge_map})"

class NormalForm(BaseModel):
    """Degeneracies, then an isomorphism, then faces, each list in the order they are applied."""
    model_config = ConfigDict(frozen=True)

    degeneracies: Tuple[TreeMorphism, ...] = ()
    isomorphism: TreeMorphism
    faces: Tuple[TreeMorphism, ...] = ()

    def steps(self) -> Tuple[TreeMorphism, ...]:
        return self.degeneracies + (self.isomorphism,) + self.faces

    def has_only_faces_and_isomorphisms(self) -> bool:
        return not self.degeneracies

    def __json__(self) -> dict:
        return {
            "degeneracies": [step.label() for step in self.degeneracies],
            "isomorphism": self.isomorphism.edge_map,
            "faces": [step.label() for step in self.faces]
        }

def composite_edge_map(steps: Iterable[TreeMorphism], start: Tree) -> Dict[str, str]:
    edge_map = {edge: edge for edge in start.edges}
    for step in steps:
        edge_map = {edge: step.edge_map[image] for edge, image in edge_map.items()}
    return edge_map
