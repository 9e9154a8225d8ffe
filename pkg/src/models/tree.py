from functools import lru_cache
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

EDGE_SEPARATOR = "+"

class Tree(BaseModel):
    """
    A non-planar rooted tree given by its root edge. An edge without a node is a leaf, an edge whose
    node has no children is capped by a stump. Vertices are named by their output edge.
    """
    model_config = ConfigDict(frozen=True)

    edge: str
    node: Optional["Node"] = None

    @model_validator(mode="after")
    def _check_distinct_edge_names(self) -> "Tree":
        names = self._edge_names()
        if len(names) != len(set(names)):
            duplicates = sorted({name for name in names if names.count(name) > 1})
            raise ValueError(f"Duplicate edge names: {duplicates}")
        return self

    def _edge_names(self) -> List[str]:
        names = [self.edge]
        if self.node is not None:
            for child in self.node.children:
                names.extend(child._edge_names())
        return names

    @property
    def shape(self) -> "TreeShape":
        return shape_of(self)

    @property
    def root(self) -> str:
        return self.edge

    @property
    def edges(self) -> Tuple[str, ...]:
        return self.shape.edges

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(sorted(self.shape.inputs))

    @property
    def leaves(self) -> FrozenSet[str]:
        return frozenset(edge for edge in self.shape.edges if edge not in self.shape.inputs)

    @property
    def inner_edges(self) -> Tuple[str, ...]:
        return tuple(edge for edge in self.shape.edges if self.is_inner(edge))

    @property
    def stumps(self) -> Tuple[str, ...]:
        return tuple(vertex for vertex in self.vertices if not self.shape.inputs[vertex])

    def is_unit(self) -> bool:
        return self.node is None

    def is_inner(self, edge: str) -> bool:
        return edge in self.shape.inputs and self.shape.parent.get(edge) is not None

    def is_unary(self, vertex: str) -> bool:
        return len(self.shape.inputs.get(vertex, ())) == 1

    def inputs(self, vertex: str) -> Tuple[str, ...]:
        return self.shape.inputs[vertex]

    def inner_edges_at(self, vertex: str) -> Tuple[str, ...]:
        attached = [edge for edge in self.shape.inputs[vertex] if self.is_inner(edge)]
        if self.shape.parent[vertex] is not None:
            attached.append(vertex)
        return tuple(sorted(attached))

    def subtree(self, edge: str) -> "Tree":
        return self.shape.subtrees[edge]

    def path_to_root(self, edge: str) -> Tuple[str, ...]:
        path = []
        current = edge
        while current is not None:
            path.append(current)
            current = self.shape.parent[current]
        return tuple(path)

    def is_below(self, lower: str, upper: str) -> bool:
        return lower in self.path_to_root(upper)

    def comparable(self, first: str, second: str) -> bool:
        return self.is_below(first, second) or self.is_below(second, first)

    def relabel(self, mapping: Dict[str, str]) -> "Tree":
        if self.node is None:
            return Tree(edge=mapping[self.edge])
        return Tree(edge=mapping[self.edge], node=Node(children=tuple(child.relabel(mapping) for child in self.node.children)))

    def __json__(self) -> dict:
        json = {"edge": self.edge}
        if self.node is not None:
            json["node"] = {"children": [child.__json__() for child in self.node.children]}
        return json

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return False
        return self.edge == other.edge and self.node == other.node

    def __hash__(self) -> int:
        return hash((self.edge, self.node))

    def __repr__(self) -> str:
        if self.node is None:
            return self.edge
        return f"{self.edge}[{' '.join(repr(child) for child in self.node.children)}]"

class Node(BaseModel):
    model_config = ConfigDict(frozen=True)

    children: Tuple[Tree, ...] = ()

    @field_validator("children", mode="after")
    @classmethod
    def _sort_children_by_edge(cls, children: Tuple[Tree, ...]) -> Tuple[Tree, ...]:
        return tuple(sorted(children, key=lambda child: child.edge))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Node):
            return False
        return self.children == other.children

    def __hash__(self) -> int:
        return hash(self.children)

Tree.model_rebuild()
Node.model_rebuild()

class TreeShape(BaseModel):
    root: str
    edges: Tuple[str, ...]
    parent: Dict[str, Optional[str]]
    inputs: Dict[str, Tuple[str, ...]]
    depth: Dict[str, int]
    subtrees: Dict[str, Tree]

@lru_cache(maxsize=None)
def shape_of(tree: Tree) -> TreeShape:
    parent: Dict[str, Optional[str]] = {}
    inputs: Dict[str, Tuple[str, ...]] = {}
    depth: Dict[str, int] = {}
    subtrees: Dict[str, Tree] = {}
    stack: List[Tuple[Tree, Optional[str], int]] = [(tree, None, 0)]
    while stack:
        current, below, level = stack.pop()
        parent[current.edge] = below
        depth[current.edge] = level
        subtrees[current.edge] = current
        if current.node is not None:
            inputs[current.edge] = tuple(child.edge for child in current.node.children)
            stack.extend((child, current.edge, level + 1) for child in current.node.children)
    return TreeShape(
        root=tree.edge,
        edges=tuple(sorted(parent)),
        parent=parent,
        inputs=inputs,
        depth=depth,
        subtrees=subtrees
    )

def merge_edge_names(first: str, second: str) -> str:
    parts = set(first.split(EDGE_SEPARATOR)) | set(second.split(EDGE_SEPARATOR))
    return EDGE_SEPARATOR.join(sorted(parts))

def fresh_merged_name(first: str, second: str, taken: Iterable[str]) -> str:
    """`merge_edge_names`, primed until it differs from every name in `taken`."""
    taken = set(taken)
    merged = merge_edge_names(first, second)
    while merged in taken:
        merged += "'"
    return merged

class CanonicalTree(BaseModel):
    model_config = ConfigDict(frozen=True)

    tree: Tree
    code: str
    child_order: Dict[str, Tuple[str, ...]]

    def __json__(self) -> dict:
        return {
            "code": self.code,
            "tree": self.tree.__json__(),
            "child_order": {vertex: list(children) for vertex, children in sorted(self.child_order.items())}
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalTree):
            return False
        return self.tree == other.tree and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.tree, self.code))
