"""
Instances of the seven face/degeneracy identities of the tree category on a given tree.

Each instance carries both composites. Outer-face identities are only generated where the tree has
enough vertices for the faces to exist, and compatibility with isomorphisms is covered by `hom_set`
and `normal_form` rather than listed here.
"""
import logging

from itertools import combinations
from typing import List, Optional

from errors import PreconditionError
from models.identity_instance import IdentityInstance, IdentityName
from models.tree import Tree
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.canonical import code_of
from omega.enumeration import enumerate_trees
from omega.faces import degeneracy, edge_inclusion, faces, inner_face, outer_face
from omega.morphisms import compose

logger = logging.getLogger(__name__)

def identity_instances(tree: Tree) -> List[IdentityInstance]:
    instances = []
    instances.extend(_inner_inner(tree))
    instances.extend(_outer_outer(tree))
    instances.extend(_inner_outer(tree))
    instances.extend(_adjacent_inner_outer(tree))
    instances.extend(_degeneracy_degeneracy(tree))
    instances.extend(_degeneracy_face(tree))
    instances.extend(_degeneracy_section(tree))
    return instances

def identity_suite(max_edges: int) -> List[IdentityInstance]:
    instances = []
    for canonical in enumerate_trees(max_edges):
        instances.extend(identity_instances(canonical.tree))
    failures = sum(1 for instance in instances if not instance.holds)
    logger.info(f"Checked {len(instances)} identity instances on trees with at most {max_edges} edges, {failures} failed")
    return instances

def _try_outer_face(tree: Tree, vertex: str) -> Optional[TreeMorphism]:
    try:
        return outer_face(tree, vertex)
    except PreconditionError:
        return None

def _outer_vertices(tree: Tree) -> List[str]:
    if len(tree.vertices) < 2:
        return []
    return [vertex for vertex in tree.vertices if len(tree.inner_edges_at(vertex)) == 1]

def _instance(name: IdentityName, tree: Tree, locus: str, lhs: TreeMorphism, rhs: TreeMorphism) -> IdentityInstance:
    return IdentityInstance(identity=name, tree=code_of(tree), locus=locus, lhs=lhs, rhs=rhs, holds=lhs == rhs)

def _missing(name: IdentityName, tree: Tree, locus: str, detail: str) -> IdentityInstance:
    return IdentityInstance(identity=name, tree=code_of(tree), locus=locus, holds=False, detail=detail)

def _inner_inner(tree: Tree) -> List[IdentityInstance]:
    instances = []
    for first, second in combinations(tree.inner_edges, 2):
        along_first = inner_face(tree, first)
        along_second = inner_face(tree, second)
        lhs = compose(along_first, inner_face(along_first.source, second))
        rhs = compose(along_second, inner_face(along_second.source, first))
        instances.append(_instance(IdentityName.INNER_INNER, tree, f"{first},{second}", lhs, rhs))
    return instances

def _outer_outer(tree: Tree) -> List[IdentityInstance]:
    if len(tree.vertices) < 3:
        return []
    instances = []
    for first, second in combinations(_outer_vertices(tree), 2):
        locus = f"{first},{second}"
        without_first = outer_face(tree, first)
        without_second = outer_face(tree, second)
        then_second = _try_outer_face(without_first.source, second)
        then_first = _try_outer_face(without_second.source, first)
        if then_second is None or then_first is None:
            instances.append(_missing(IdentityName.OUTER_OUTER, tree, locus, "second outer face does not exist"))
            continue
        lhs = compose(without_first, then_second)
        rhs = compose(without_second, then_first)
        instances.append(_instance(IdentityName.OUTER_OUTER, tree, locus, lhs, rhs))
    return instances

def _inner_outer(tree: Tree) -> List[IdentityInstance]:
    instances = []
    for vertex in _outer_vertices(tree):
        for edge in tree.inner_edges:
            if edge == vertex or tree.shape.parent[edge] == vertex:
                continue
            locus = f"{edge},{vertex}"
            contracted = inner_face(tree, edge)
            removed = outer_face(tree, vertex)
            then_removed = _try_outer_face(contracted.source, vertex)
            if then_removed is None or edge not in removed.source.inner_edges:
                instances.append(_missing(IdentityName.INNER_OUTER, tree, locus, "faces do not commute past each other"))
                continue
            lhs = compose(removed, inner_face(removed.source, edge))
            rhs = compose(contracted, then_removed)
            instances.append(_instance(IdentityName.INNER_OUTER, tree, locus, lhs, rhs))
    return instances

def _adjacent_inner_outer(tree: Tree) -> List[IdentityInstance]:
    instances = []
    for edge in tree.inner_edges:
        lower = tree.shape.parent[edge]
        for vertex, other in ((edge, lower), (lower, edge)):
            removed = _try_outer_face(tree, vertex)
            if removed is None:
                continue
            locus = f"{edge},{vertex}"
            contracted = inner_face(tree, edge)
            along_merged = _try_outer_face(contracted.source, lower)
            along_other = _try_outer_face(removed.source, other)
            if (along_merged is None) != (along_other is None):
                instances.append(_missing(
                    IdentityName.ADJACENT_INNER_OUTER, tree, locus, "exactly one of the two outer faces exists"
                ))
                continue
            if along_merged is None:
                instances.append(IdentityInstance(
                    identity=IdentityName.ADJACENT_INNER_OUTER, tree=code_of(tree), locus=locus, holds=True,
                    detail="neither outer face exists"
                ))
                continue
            lhs = compose(contracted, along_merged)
            rhs = compose(removed, along_other)
            instances.append(_instance(IdentityName.ADJACENT_INNER_OUTER, tree, locus, lhs, rhs))
    return instances

def _degeneracy_degeneracy(tree: Tree) -> List[IdentityInstance]:
    instances = []
    unary = [vertex for vertex in tree.vertices if tree.is_unary(vertex)]
    for first, second in combinations(unary, 2):
        collapse_first = degeneracy(tree, first)
        collapse_second = degeneracy(tree, second)
        lhs = compose(degeneracy(collapse_first.target, collapse_first.edge_map[second]), collapse_first)
        rhs = compose(degeneracy(collapse_second.target, collapse_second.edge_map[first]), collapse_second)
        instances.append(_instance(IdentityName.DEGENERACY_DEGENERACY, tree, f"{first},{second}", lhs, rhs))
    return instances

def _degeneracy_face(tree: Tree) -> List[IdentityInstance]:
    instances = []
    for vertex in tree.vertices:
        if not tree.is_unary(vertex):
            continue
        upper = tree.inputs(vertex)[0]
        collapse = degeneracy(tree, vertex)
        for face in faces(tree):
            if face.kind == MorphismKind.EDGE_INCLUSION:
                continue
            smaller = face.source
            if vertex not in smaller.vertices or smaller.inputs(vertex) != (upper,):
                continue
            locus = f"{vertex},{face.label()}"
            collapse_smaller = degeneracy(smaller, vertex)
            matching = [candidate for candidate in faces(collapse.target) if candidate.source == collapse_smaller.target]
            if not matching:
                instances.append(_missing(IdentityName.DEGENERACY_FACE, tree, locus, "no face between the collapsed trees"))
                continue
            lhs = compose(collapse, face)
            rhs = compose(matching[0], collapse_smaller)
            instances.append(_instance(IdentityName.DEGENERACY_FACE, tree, locus, lhs, rhs))
    return instances

def _degeneracy_section(tree: Tree) -> List[IdentityInstance]:
    instances = []
    for vertex in tree.vertices:
        if not tree.is_unary(vertex):
            continue
        upper = tree.inputs(vertex)[0]
        collapse = degeneracy(tree, vertex)
        for face in _sections(tree, vertex, upper):
            composite = compose(collapse, face)
            renaming = {edge: collapse.edge_map[edge] for edge in face.source.edges}
            relabelling = TreeMorphism.trusted(face.source, collapse.target, renaming, MorphismKind.ISOMORPHISM)
            holds = face.source.relabel(renaming) == collapse.target and composite == relabelling
            instances.append(IdentityInstance(
                identity=IdentityName.DEGENERACY_SECTION, tree=code_of(tree), locus=f"{vertex},{face.label()}",
                lhs=composite, rhs=relabelling, holds=holds
            ))
    return instances

def _sections(tree: Tree, vertex: str, upper: str) -> List[TreeMorphism]:
    if len(tree.vertices) == 1:
        return [edge_inclusion(tree, vertex), edge_inclusion(tree, upper)]
    sections = [inner_face(tree, edge) for edge in (vertex, upper) if tree.is_inner(edge)]
    removed = _try_outer_face(tree, vertex)
    if removed is not None:
        sections.append(removed)
    return sections
