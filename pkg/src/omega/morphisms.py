import logging

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from errors import PreconditionError
from models.tree import Tree
from models.tree_morphism import MorphismKind, TreeMorphism, is_operad_map
from omega.canonical import code_of, isomorphism, isomorphisms
from omega.faces import degeneracy, faces

logger = logging.getLogger(__name__)

def identity(tree: Tree) -> TreeMorphism:
    return TreeMorphism.identity(tree)

def compose(second: TreeMorphism, first: TreeMorphism) -> TreeMorphism:
    if first.target != second.source:
        raise PreconditionError(f"Cannot compose: target {first.target!r} differs from source {second.source!r}")
    if first.is_identity():
        return second
    if second.is_identity():
        return first
    edge_map = {edge: second.edge_map[image] for edge, image in first.edge_map.items()}
    return TreeMorphism.trusted(first.source, second.target, edge_map)

def compose_all(*morphisms: TreeMorphism) -> TreeMorphism:
    """Composes right to left, so `compose_all(h, g, f)` is h after g after f."""
    result = morphisms[-1]
    for morphism in reversed(morphisms[:-1]):
        result = compose(morphism, result)
    return result

def is_morphism(source: Tree, target: Tree, edge_map: Dict[str, str]) -> bool:
    if set(edge_map) != set(source.edges) or not set(edge_map.values()) <= set(target.edges):
        return False
    return is_operad_map(source, target, edge_map)

def isomorphism_between(source: Tree, target: Tree) -> TreeMorphism:
    bijection = isomorphism(source, target)
    if bijection is None:
        raise PreconditionError(f"{source!r} and {target!r} are not isomorphic")
    return TreeMorphism.trusted(source, target, bijection, MorphismKind.ISOMORPHISM)

def relabel(tree: Tree, mapping: Dict[str, str]) -> TreeMorphism:
    renaming = {edge: mapping.get(edge, edge) for edge in tree.edges}
    if len(set(renaming.values())) != len(renaming):
        raise PreconditionError(f"Renaming {mapping} is not injective on {tree!r}")
    return TreeMorphism.trusted(tree, tree.relabel(renaming), renaming, MorphismKind.ISOMORPHISM)

@lru_cache(maxsize=None)
def subfaces(tree: Tree) -> Tuple[Tree, ...]:
    """Every tree reachable from `tree` by elementary faces, `tree` included."""
    seen = {tree}
    frontier = [tree]
    while frontier:
        current = frontier.pop()
        for face in faces(current):
            if face.source not in seen:
                seen.add(face.source)
                frontier.append(face.source)
    return tuple(sorted(seen, key=lambda face: (len(face.edges), code_of(face), face.edges)))

@lru_cache(maxsize=None)
def quotients(tree: Tree) -> Tuple[Tuple[Tree, Tuple[Tuple[str, str], ...]], ...]:
    """
    The targets of all composites of degeneracies out of `tree`, one per set of unary vertices,
    each with its edge map as sorted pairs.
    """
    unary = [vertex for vertex in tree.vertices if tree.is_unary(vertex)]
    found = []
    for size in range(len(unary) + 1):
        for chosen in combinations(unary, size):
            current = tree
            edge_map = {edge: edge for edge in tree.edges}
            for vertex in chosen:
                step = degeneracy(current, edge_map[vertex])
                edge_map = {edge: step.edge_map[image] for edge, image in edge_map.items()}
                current = step.target
            found.append((current, tuple(sorted(edge_map.items()))))
    return tuple(found)

@lru_cache(maxsize=None)
def _hom_set(source: Tree, target: Tree) -> Tuple[TreeMorphism, ...]:
    faces_by_code: Dict[str, List[Tree]] = defaultdict(list)
    for face in subfaces(target):
        faces_by_code[code_of(face)].append(face)

    found: Dict[Tuple[str, ...], TreeMorphism] = {}
    for quotient, pairs in quotients(source):
        collapse = dict(pairs)
        for face in faces_by_code.get(code_of(quotient), []):
            for bijection in isomorphisms(quotient, face):
                edge_map = {edge: bijection[image] for edge, image in collapse.items()}
                morphism = TreeMorphism.trusted(source, target, edge_map)
                found.setdefault(morphism.key, morphism)
    logger.debug(f"Found {len(found)} morphisms {source!r} -> {target!r}")
    return tuple(found[key] for key in sorted(found))

def hom_set(source: Tree, target: Tree) -> List[TreeMorphism]:
    """All morphisms from `source` to `target`, ordered by their images on the sorted source edges."""
    return list(_hom_set(source, target))
