import logging

from collections import defaultdict, deque
from typing import Dict, List, Optional, Set, Tuple

from errors import PresheafValidationError
from models.element_category import ElementArrow, ElementCategory, ElementObject
from models.fin_dendroidal_set import FinDendroidalSet, PresheafAction
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.canonical import code_of, isomorphisms, tree_from_code
from omega.enumeration import enumerate_trees
from omega.identities import identity_instances
from omega.morphisms import compose
from settings import settings

logger = logging.getLogger(__name__)

ArrowKey = Tuple[str, str, Tuple[str, ...], str]

def _closure(presheaf: FinDendroidalSet) -> Dict[ArrowKey, Tuple[TreeMorphism, str, bool]]:
    """
    All arrows of the category of elements, keyed by (source code, target code, edge map, element over
    the target) and valued by (morphism, element over the source, whether it is a generator). Arrows are
    grown from the identities by post-composing generators; two ways of reaching the same key with
    different source elements mean the actions are not functorial.
    """
    outgoing: Dict[str, List[Tuple[PresheafAction, Dict[str, List[str]]]]] = defaultdict(list)
    for action in presheaf.actions:
        preimages: Dict[str, List[str]] = defaultdict(list)
        for upper, lower in sorted(action.table.items()):
            preimages[lower].append(upper)
        outgoing[action.source_code].append((action, preimages))

    arrows: Dict[ArrowKey, Tuple[TreeMorphism, str, bool]] = {}
    queue = deque()
    for code, elements in sorted(presheaf.values.items()):
        if not elements:
            continue
        identity = TreeMorphism.identity(tree_from_code(code))
        for element in elements:
            arrows[(code, code, identity.key, element)] = (identity, element, False)
            queue.append((identity, code, element, code, element))

    while queue:
        morphism, source_code, source_element, target_code, target_element = queue.popleft()
        for action, preimages in outgoing[target_code]:
            for upper in preimages.get(target_element, ()):
                composite = compose(action.morphism, morphism)
                key = (source_code, action.target_code, composite.key, upper)
                existing = arrows.get(key)
                if existing is None:
                    arrows[key] = (composite, source_element, morphism.is_identity())
                    queue.append((composite, source_code, source_element, action.target_code, upper))
                elif existing[1] != source_element:
                    witness = offending_identity(presheaf.bound, composite)
                    raise PresheafValidationError(
                        f"{presheaf.label}: composites equal to {composite!r} send {upper} at {action.target_code} "
                        f"to both {existing[1]} and {source_element}" + (f"; violates {witness}" if witness else "")
                    )
    return arrows

def offending_identity(bound: int, composite: TreeMorphism) -> Optional[str]:
    """The first face/degeneracy identity within `bound` with a side equal to `composite` up to relabelling its ends."""
    if bound < 1:
        return None
    for canonical in enumerate_trees(min(bound, settings.max_edges)):
        for instance in identity_instances(canonical.tree):
            for side in (instance.lhs, instance.rhs):
                if side is not None and _same_up_to_relabelling(side, composite):
                    return f"identity {instance.identity.value} at {instance.locus} on {instance.tree}"
    return None

def _same_up_to_relabelling(side: TreeMorphism, composite: TreeMorphism) -> bool:
    if code_of(side.source) != code_of(composite.source) or code_of(side.target) != code_of(composite.target):
        return False
    return any(
        all(onto_target[side.edge_map[onto_side[edge]]] == image for edge, image in composite.edge_map.items())
        for onto_side in isomorphisms(composite.source, side.source)
        for onto_target in isomorphisms(side.target, composite.target)
    )

def validate_presheaf(presheaf: FinDendroidalSet) -> int:
    """Raises `PresheafValidationError` unless the generator actions compose functorially; returns the arrow count."""
    arrows = _closure(presheaf)
    logger.debug(f"{presheaf.label} is functorial with {len(arrows)} element arrows")
    return len(arrows)

def is_degenerate(presheaf: FinDendroidalSet, code: str, element: str) -> bool:
    return any(
        element in action.table.values()
        for action in presheaf.actions_out_of(code)
        if action.kind == MorphismKind.DEGENERACY
    )

def degenerate_elements(presheaf: FinDendroidalSet) -> Set[ElementObject]:
    found = set()
    for action in presheaf.actions:
        if action.kind == MorphismKind.DEGENERACY:
            found.update(ElementObject(code=action.source_code, element=element) for element in action.table.values())
    return found

def nondegenerate_count(presheaf: FinDendroidalSet, code: str) -> int:
    return sum(1 for element in presheaf.elements(code) if not is_degenerate(presheaf, code, element))

def category_of_elements(presheaf: FinDendroidalSet, include_degenerate: bool = True) -> ElementCategory:
    arrows = _closure(presheaf)
    objects = [
        ElementObject(code=code, element=element)
        for code, elements in sorted(presheaf.values.items()) for element in elements
    ]
    if not include_degenerate:
        degenerate = degenerate_elements(presheaf)
        objects = [obj for obj in objects if obj not in degenerate]
    kept = set(objects)
    element_arrows = []
    for (source_code, target_code, _, target_element), (morphism, source_element, generating) in arrows.items():
        source = ElementObject(code=source_code, element=source_element)
        target = ElementObject(code=target_code, element=target_element)
        if source in kept and target in kept:
            element_arrows.append(ElementArrow(morphism=morphism, source=source, target=target, generating=generating))
    element_arrows.sort(key=lambda arrow: (arrow.source.label(), arrow.target.label(), arrow.morphism.key))
    logger.debug(f"Category of elements of {presheaf.label}: {len(objects)} objects, {len(element_arrows)} arrows")
    return ElementCategory(objects=tuple(objects), arrows=tuple(element_arrows), include_degenerate=include_degenerate)
