from enum import Enum
from pydantic import BaseModel, ConfigDict
from typing import Tuple

from models.directed_graph import DirectedGraph

def projection(vertex: str) -> str:
    return f"P_{vertex}"

def isometry(edge: str) -> str:
    return f"S_{edge}"

class CKRelationKind(str, Enum):
    ORTHOGONAL = "orthogonal"
    CK1 = "CK1"
    CK2 = "CK2"

class CKRelation(BaseModel):
    """
    ORTHOGONAL: P_v P_w = 0 for the two `vertices`.
    CK1: S_e^* S_e = P_s(e) for the single edge, with `vertices` holding s(e).
    CK2: P_v = sum of S_e S_e^* over the `edges` with range v.
    """
    model_config = ConfigDict(frozen=True)

    kind: CKRelationKind
    vertices: Tuple[str, ...] = ()
    edges: Tuple[str, ...] = ()

    def text(self) -> str:
        if self.kind == CKRelationKind.ORTHOGONAL:
            first, second = self.vertices
            return f"{projection(first)} {projection(second)} = 0"
        if self.kind == CKRelationKind.CK1:
            (edge,) = self.edges
            return f"{isometry(edge)}^* {isometry(edge)} = {projection(self.vertices[0])}"
        terms = " + ".join(f"{isometry(edge)} {isometry(edge)}^*" for edge in self.edges)
        return f"{projection(self.vertices[0])} = {terms}"

class CKPresentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: DirectedGraph
    projections: Tuple[str, ...]
    isometries: Tuple[str, ...]
    relations: Tuple[CKRelation, ...]
    unital: bool = True

    def relations_of(self, kind: CKRelationKind) -> Tuple[CKRelation, ...]:
        return tuple(relation for relation in self.relations if relation.kind == kind)

    def __json__(self) -> dict:
        return {
            "graph": self.graph.__json__(),
            "projections": list(self.projections),
            "isometries": list(self.isometries),
            "relations": [{"kind": relation.kind.value, "text": relation.text()} for relation in self.relations],
            "unital": self.unital
        }
