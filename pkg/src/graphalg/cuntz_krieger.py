from itertools import combinations

from errors import PreconditionError
from models.ck_presentation import CKPresentation, CKRelation, CKRelationKind, isometry, projection
from models.directed_graph import DirectedGraph, GraphEdge
from models.tree import Node, Tree

def ck_presentation(graph: DirectedGraph) -> CKPresentation:
    """
    Mutually orthogonal projections per vertex and partial isometries per edge, with
    S_e^* S_e = P_s(e) for every edge and P_v = sum over r(e) = v of S_e S_e^* at every vertex that
    receives an edge.
    """
    vertices = sorted(graph.vertices)
    edges = sorted(graph.edges, key=lambda edge: edge.name)
    relations = [
        CKRelation(kind=CKRelationKind.ORTHOGONAL, vertices=(first, second))
        for first, second in combinations(vertices, 2)
    ]
    relations.extend(
        CKRelation(kind=CKRelationKind.CK1, vertices=(edge.source,), edges=(edge.name,))
        for edge in edges
    )
    for vertex in vertices:
        incoming = graph.edges_into(vertex)
        if incoming:
            relations.append(CKRelation(kind=CKRelationKind.CK2, vertices=(vertex,), edges=tuple(edge.name for edge in incoming)))
    return CKPresentation(
        graph=graph,
        projections=tuple(projection(vertex) for vertex in vertices),
        isometries=tuple(isometry(edge.name) for edge in edges),
        relations=tuple(relations),
        unital=True
    )

def linear_graph(n: int) -> DirectedGraph:
    """v0 <-e1- v1 <-e2- ... <-en- vn, so s(e_i) = v_i and r(e_i) = v_(i-1)."""
    if n < 0:
        raise PreconditionError(f"Linear graph length must be non-negative, got {n}")
    return DirectedGraph(
        vertices=tuple(f"v{index}" for index in range(n + 1)),
        edges=tuple(GraphEdge(name=f"e{index}", source=f"v{index}", range=f"v{index - 1}") for index in range(1, n + 1))
    )

def linear_graph_tree(n: int) -> Tree:
    """The linear tree with edges e1 (root) up to en (leaf), whose modification is the linear graph."""
    if n < 1:
        raise PreconditionError(f"The linear graph tree needs at least one edge, got {n}")
    tree = Tree(edge=f"e{n}")
    for index in range(n - 1, 0, -1):
        tree = Tree(edge=f"e{index}", node=Node(children=(tree,)))
    return tree

def cuntz_graph() -> DirectedGraph:
    return DirectedGraph(
        vertices=("v",),
        edges=(GraphEdge(name="e1", source="v", range="v"), GraphEdge(name="e2", source="v", range="v"))
    )
