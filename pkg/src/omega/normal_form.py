import logging

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from errors import InternalConsistencyError
from models.tree import Tree
from models.tree_morphism import MorphismKind, NormalForm, TreeMorphism, composite_edge_map
from omega.faces import degeneracy, faces

logger = logging.getLogger(__name__)

def normal_form(morphism: TreeMorphism) -> NormalForm:
    """
    Factors `morphism` as degeneracies, then an isomorphism, then faces. Degeneracies collapse the
    unary vertices whose two edges share an image, lowest first. The isomorphism is then forced, and
    the faces are the first path of elementary faces (in `faces` order) from the image up to the target.
    """
    steps, current, current_map = collapse_identified_edges(morphism.source, morphism.edge_map)
    if len(set(current_map.values())) != len(current_map):
        raise InternalConsistencyError(f"Edge map {morphism.edge_map} stays non-injective after collapsing unary vertices")

    image = current.relabel(current_map)
    kind = MorphismKind.IDENTITY if image == current else MorphismKind.ISOMORPHISM
    isomorphism = TreeMorphism.trusted(current, image, dict(current_map), kind)

    path = face_path(morphism.target, image)
    if path is None:
        raise InternalConsistencyError(f"No face path from {image!r} to {morphism.target!r}")

    factorization = NormalForm(degeneracies=tuple(steps), isomorphism=isomorphism, faces=path)
    if composite_edge_map(factorization.steps(), morphism.source) != morphism.edge_map:
        raise InternalConsistencyError(f"Normal form of {morphism!r} does not recompose to its edge map")
    return factorization

def collapse_identified_edges(source: Tree, edge_map: Dict[str, str]) -> Tuple[List[TreeMorphism], Tree, Dict[str, str]]:
    steps = []
    current = source
    current_map = dict(edge_map)
    while True:
        collapsible = [
            vertex for vertex in current.vertices
            if current.is_unary(vertex) and current_map[vertex] == current_map[current.inputs(vertex)[0]]
        ]
        if not collapsible:
            return steps, current, current_map
        vertex = min(collapsible, key=lambda name: (current.shape.depth[name], name))
        step = degeneracy(current, vertex)
        logger.debug(f"Collapsing unary vertex {vertex} of {current!r}")
        current_map = {step.edge_map[edge]: image for edge, image in current_map.items()}
        steps.append(step)
        current = step.target

@lru_cache(maxsize=None)
def face_path(tree: Tree, goal: Tree) -> Optional[Tuple[TreeMorphism, ...]]:
    """A sequence of elementary faces from `goal` up to `tree`, in the order they are applied."""
    if tree == goal:
        return ()
    wanted = set(goal.edges)
    for face in faces(tree):
        if not wanted <= set(face.source.edges):
            continue
        below = face_path(face.source, goal)
        if below is not None:
            return below + (face,)
    return None
