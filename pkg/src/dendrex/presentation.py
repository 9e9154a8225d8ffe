"""Presentations of noncommutative dendrices and their abelianizations."""
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from errors import PreconditionError
from models.directed_graph import DecoratedGraph, GraphEdge
from models.star_presentation import StarPresentation
from models.tree import Tree
from omega.canonical import code_of

ROOT_VERTEX = "root"

def vertex_name(edge: str) -> str:
    return f"v({edge})"

def tip_name(leaf: str) -> str:
    return f"tip({leaf})"

def modify(tree: Tree) -> DecoratedGraph:
    """
    Inserts a vertex on top of every leaf and one below the root. Tree vertices are named after their
    output edge, edges point from their upper vertex down to their lower one.
    """
    vertices = [vertex_name(vertex) for vertex in tree.vertices]
    inserted = [tip_name(leaf) for leaf in sorted(tree.leaves)] + [ROOT_VERTEX]
    edges = []
    for edge in tree.edges:
        source = vertex_name(edge) if edge in tree.shape.inputs else tip_name(edge)
        below = tree.shape.parent[edge]
        edges.append(GraphEdge(name=edge, source=source, range=ROOT_VERTEX if below is None else vertex_name(below)))
    return DecoratedGraph(vertices=tuple(vertices + inserted), edges=tuple(edges), inserted=tuple(inserted))

def coherent(tree: Tree, edges: Iterable[str]) -> bool:
    """Whether the edges lie on one directed path of the modified tree, i.e. form a chain towards the root."""
    chosen = set(edges)
    if not chosen:
        raise PreconditionError("Coherence needs a nonempty set of edges")
    unknown = sorted(chosen - set(tree.edges))
    if unknown:
        raise PreconditionError(f"Edges {unknown} are not edges of {tree!r}")
    return all(tree.comparable(first, second) for first, second in combinations(sorted(chosen), 2))

@lru_cache(maxsize=None)
def dendrex(tree: Tree) -> StarPresentation:
    return _presentation(tree, commutative=False)

@lru_cache(maxsize=None)
def abelian_dendrex(tree: Tree) -> StarPresentation:
    return _presentation(tree, commutative=True)

def _presentation(tree: Tree, commutative: bool) -> StarPresentation:
    zero_pairs = tuple(
        (first, second) for first, second in combinations(tree.edges, 2) if not tree.comparable(first, second)
    )
    prefix = "Dab" if commutative else "D"
    return StarPresentation(
        name=f"{prefix}({tree!r})",
        generators=tree.edges,
        unit_sum=tree.edges,
        zero_pairs=zero_pairs,
        commutative=commutative,
        tree=code_of(tree)
    )
