import logging

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Tuple

from errors import PreconditionError
from models.fin_dendroidal_set import FinDendroidalSet, PresheafAction
from models.tree import Tree
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.canonical import automorphisms, code_of, isomorphism, tree_from_code
from omega.enumeration import enumerate_trees
from omega.faces import degeneracies, faces
from presheaf.elements import validate_presheaf

logger = logging.getLogger(__name__)

def signature(morphism: TreeMorphism) -> str:
    """Element id of a morphism into a fixed tree: `source>image` pairs in source edge order."""
    return ",".join(f"{edge}>{morphism.edge_map[edge]}" for edge in morphism.source.edges)

def canonical_trees(bound: int) -> List[Tree]:
    return [canonical.tree for canonical in enumerate_trees(bound)]

@lru_cache(maxsize=None)
def generating_morphisms(tree: Tree) -> Tuple[TreeMorphism, ...]:
    """
    Generators of the tree category touching the canonical tree `tree`, rewritten between canonical
    trees: faces into it, degeneracies out of it, and its non-identity automorphisms.
    """
    if tree != tree_from_code(code_of(tree)):
        raise PreconditionError(f"{tree!r} is not a canonical representative")
    found = []
    for face in faces(tree):
        representative = tree_from_code(code_of(face.source))
        onto_face = isomorphism(representative, face.source)
        edge_map = {edge: face.edge_map[onto_face[edge]] for edge in representative.edges}
        found.append(TreeMorphism.trusted(representative, tree, edge_map, face.kind, face.locus))
    for step in degeneracies(tree):
        representative = tree_from_code(code_of(step.target))
        onto_representative = isomorphism(step.target, representative)
        edge_map = {edge: onto_representative[step.edge_map[edge]] for edge in tree.edges}
        found.append(TreeMorphism.trusted(tree, representative, edge_map, MorphismKind.DEGENERACY, step.locus))
    for bijection in automorphisms(tree)[1:]:
        found.append(TreeMorphism.trusted(tree, tree, bijection, MorphismKind.ISOMORPHISM))
    return tuple(found)

def generators_within(bound: int) -> List[TreeMorphism]:
    found = []
    for tree in canonical_trees(bound):
        found.extend(generating_morphisms(tree))
    return found

def build_presheaf(
    label: str,
    bound: int,
    elements_at: Callable[[Tree], Iterable[str]],
    act: Callable[[TreeMorphism, str], str]
) -> FinDendroidalSet:
    """
    Tabulates a truncated dendroidal set from its elements over each canonical tree and the action
    of single generating morphisms, then validates it.
    """
    values: Dict[str, Tuple[str, ...]] = {}
    for tree in canonical_trees(bound):
        values[code_of(tree)] = tuple(sorted(set(elements_at(tree))))
    actions = []
    for generator in generators_within(bound):
        source_code, target_code = code_of(generator.source), code_of(generator.target)
        table = {element: act(generator, element) for element in values[target_code]}
        actions.append(PresheafAction(morphism=generator, source_code=source_code, target_code=target_code, table=table))
    presheaf = FinDendroidalSet(label=label, bound=bound, values=values, actions=tuple(actions))
    logger.debug(f"Built {label} with {presheaf.size()} elements and {len(actions)} actions")
    validate_presheaf(presheaf)
    return presheaf
