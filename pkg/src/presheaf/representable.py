from typing import Callable, Dict, List, Optional, Set

from errors import PreconditionError
from models.fin_dendroidal_set import FinDendroidalSet, Inclusion, PresheafAction
from models.tree import Tree
from models.tree_morphism import TreeMorphism
from omega.canonical import code_of, tree_from_code
from omega.enumeration import is_open
from omega.faces import faces, inner_face
from omega.morphisms import compose, hom_set
from presheaf.builder import build_presheaf, signature

def representable(tree: Tree, bound: int) -> FinDendroidalSet:
    """The truncation of the representable presheaf of `tree`: over S, the morphisms S -> tree."""
    if len(tree.edges) > bound:
        raise PreconditionError(f"{tree!r} has {len(tree.edges)} edges, more than the bound {bound}")
    by_signature: Dict[str, Dict[str, TreeMorphism]] = {}

    def elements_at(source: Tree) -> List[str]:
        morphisms = {signature(morphism): morphism for morphism in hom_set(source, tree)}
        by_signature[code_of(source)] = morphisms
        return list(morphisms)

    def act(generator: TreeMorphism, element: str) -> str:
        return signature(compose(by_signature[code_of(generator.target)][element], generator))

    return build_presheaf(f"Omega[{tree!r}]", bound, elements_at, act)

def boundary(tree: Tree, bound: int) -> Inclusion:
    """The union of the images of the elementary faces of `tree`, inside its representable."""
    if tree.is_unit():
        raise PreconditionError("The unit tree has no faces, so its boundary is not defined")
    return _face_union(tree, bound, faces(tree), f"boundary[{tree!r}]")

def inner_horn(tree: Tree, edge: str, bound: int) -> Inclusion:
    """The union of the images of every elementary face of `tree` except the inner face at `edge`."""
    excluded = inner_face(tree, edge)
    return _face_union(tree, bound, [face for face in faces(tree) if face != excluded], f"horn[{tree!r},{edge}]")

def _face_union(tree: Tree, bound: int, chosen: List[TreeMorphism], label: str) -> Inclusion:
    ambient = representable(tree, bound)
    kept: Dict[str, Set[str]] = {}
    for code in ambient.values:
        source = tree_from_code(code)
        kept[code] = {
            signature(compose(face, morphism))
            for face in chosen for morphism in hom_set(source, face.source)
        }
    sub = restrict_values(ambient, label, lambda code, element: element in kept[code])
    return Inclusion(sub=sub, ambient=ambient)

def restrict_values(presheaf: FinDendroidalSet, label: str, keep: Callable[[str, str], bool]) -> FinDendroidalSet:
    """The sub-presheaf on the kept elements; the kept elements must be closed under every action."""
    values = {
        code: tuple(element for element in elements if keep(code, element))
        for code, elements in presheaf.values.items()
    }
    actions = []
    for action in presheaf.actions:
        kept = set(values[action.target_code])
        table = {upper: lower for upper, lower in action.table.items() if upper in kept}
        actions.append(action.model_copy(update={"table": table}))
    return FinDendroidalSet(label=label, bound=presheaf.bound, values=values, actions=tuple(actions))

def open_part(presheaf: FinDendroidalSet) -> FinDendroidalSet:
    """Keeps only the elements over open trees, those without stumps."""
    open_codes = {code for code in presheaf.values if is_open(tree_from_code(code))}
    return restrict_values(presheaf, f"open[{presheaf.label}]", lambda code, _: code in open_codes)

def empty_presheaf(bound: int, label: Optional[str] = None) -> FinDendroidalSet:
    return build_presheaf(label or "empty", bound, lambda _: [], lambda generator, element: element)

def is_contained(sub: FinDendroidalSet, ambient: FinDendroidalSet) -> Optional[str]:
    """None when `sub` sits inside `ambient` elementwise with matching actions, otherwise the first violation."""
    if sub.bound != ambient.bound:
        return f"bounds differ: {sub.bound} and {ambient.bound}"
    for code, elements in sub.values.items():
        missing = sorted(set(elements) - set(ambient.elements(code)))
        if missing:
            return f"elements {missing} at {code} are missing from {ambient.label}"
    indexed = {action.key: action for action in ambient.actions}
    for action in sub.actions:
        counterpart: Optional[PresheafAction] = indexed.get(action.key)
        if counterpart is None:
            return f"action {action.morphism.label()} is missing from {ambient.label}"
        for upper, lower in action.table.items():
            if counterpart.table.get(upper) != lower:
                return f"action {action.morphism.label()} disagrees on {upper}"
    return None
