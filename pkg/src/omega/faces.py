from typing import List

from errors import PreconditionError, UnsupportedCaseError
from models.tree import Node, Tree, fresh_merged_name
from models.tree_morphism import MorphismKind, TreeMorphism

def inner_face(tree: Tree, edge: str) -> TreeMorphism:
    if edge not in tree.edges:
        raise PreconditionError(f"Edge '{edge}' is not an edge of {tree!r}")
    if not tree.is_inner(edge):
        raise PreconditionError(f"Edge '{edge}' of {tree!r} is not an inner edge")
    source = _contract(tree, edge)
    return TreeMorphism.trusted(source, tree, _inclusion(source), MorphismKind.INNER_FACE, edge)

def outer_face(tree: Tree, vertex: str) -> TreeMorphism:
    if vertex not in tree.vertices:
        raise PreconditionError(f"'{vertex}' is not a vertex of {tree!r}")
    if len(tree.vertices) < 2:
        raise UnsupportedCaseError(f"Outer faces of the single-vertex tree {tree!r} are not supported")
    attached = tree.inner_edges_at(vertex)
    if len(attached) != 1:
        raise PreconditionError(f"Vertex '{vertex}' of {tree!r} has {len(attached)} inner edges attached, expected exactly one")
    if vertex == tree.root:
        source = tree.subtree(attached[0])
    else:
        source = _replace(tree, vertex, Tree(edge=vertex))
    return TreeMorphism.trusted(source, tree, _inclusion(source), MorphismKind.OUTER_FACE, vertex)

def edge_inclusion(tree: Tree, edge: str) -> TreeMorphism:
    if edge not in tree.edges:
        raise PreconditionError(f"Edge '{edge}' is not an edge of {tree!r}")
    source = Tree(edge=edge)
    return TreeMorphism.trusted(source, tree, {edge: edge}, MorphismKind.EDGE_INCLUSION, edge)

def degeneracy(tree: Tree, vertex: str) -> TreeMorphism:
    if not tree.is_unary(vertex):
        raise PreconditionError(f"'{vertex}' is not a unary vertex of {tree!r}")
    (upper,) = tree.inputs(vertex)
    merged = fresh_merged_name(vertex, upper, set(tree.edges) - {vertex, upper})
    target = _replace(tree, vertex, tree.subtree(upper).relabel(_renaming(tree.subtree(upper), upper, merged)))
    edge_map = {edge: edge for edge in tree.edges}
    edge_map[vertex] = merged
    edge_map[upper] = merged
    return TreeMorphism.trusted(tree, target, edge_map, MorphismKind.DEGENERACY, vertex)

def faces(tree: Tree) -> List[TreeMorphism]:
    """
    The elementary faces of `tree`: inner faces in edge order, then outer faces in vertex order. A tree
    with a single vertex has no outer faces; its faces are the inclusions of its edges instead.
    """
    found = [inner_face(tree, edge) for edge in tree.inner_edges]
    if len(tree.vertices) == 1:
        found.extend(edge_inclusion(tree, edge) for edge in tree.edges)
    elif len(tree.vertices) > 1:
        found.extend(outer_face(tree, vertex) for vertex in tree.vertices if len(tree.inner_edges_at(vertex)) == 1)
    return found

def degeneracies(tree: Tree) -> List[TreeMorphism]:
    return [degeneracy(tree, vertex) for vertex in tree.vertices if tree.is_unary(vertex)]

def _inclusion(tree: Tree) -> dict:
    return {edge: edge for edge in tree.edges}

def _renaming(tree: Tree, old: str, new: str) -> dict:
    renaming = {edge: edge for edge in tree.edges}
    renaming[old] = new
    return renaming

def _contract(tree: Tree, edge: str) -> Tree:
    if tree.node is None:
        return tree
    children = []
    for child in tree.node.children:
        if child.edge == edge:
            children.extend(_contract(grandchild, edge) for grandchild in child.node.children)
        else:
            children.append(_contract(child, edge))
    return Tree(edge=tree.edge, node=Node(children=tuple(children)))

def _replace(tree: Tree, edge: str, replacement: Tree) -> Tree:
    if tree.edge == edge:
        return replacement
    if tree.node is None:
        return tree
    return Tree(edge=tree.edge, node=Node(children=tuple(_replace(child, edge, replacement) for child in tree.node.children)))
