"""
Canonical codes and isomorphisms of non-planar rooted trees.

Codes follow the Aho-Hopcroft-Ullman encoding with edges as the encoded units: a leaf is `(e)`, an
edge carrying a vertex is `(e[` followed by the sorted codes of its children and `])`. A stump is
therefore `(e[])`. Two trees share a code exactly when they are isomorphic in the tree category.
"""
from collections import defaultdict
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Optional, Tuple

from errors import InputError
from models.tree import CanonicalTree, Node, Tree

LEAF_CODE = "(e)"

@lru_cache(maxsize=None)
def code_of(tree: Tree) -> str:
    if tree.node is None:
        return LEAF_CODE
    return "(e[" + "".join(sorted(code_of(child) for child in tree.node.children)) + "])"

def canonicalize(tree: Tree) -> CanonicalTree:
    child_order = {
        vertex: tuple(child.edge for child in _ordered_children(tree.subtree(vertex)))
        for vertex in tree.vertices
    }
    return CanonicalTree(tree=tree, code=code_of(tree), child_order=child_order)

def _ordered_children(tree: Tree) -> List[Tree]:
    return sorted(tree.node.children, key=lambda child: (code_of(child), child.edge))

def tree_from_code(code: str) -> Tree:
    """Builds the tree of a code with edges named `e0`, `e1`, ... in preorder of the canonical child order."""
    counter = [0]
    tree, position = _parse(code, 0, counter)
    if position != len(code):
        raise InputError(f"Trailing characters in tree code '{code}' at position {position}")
    return tree

def _parse(code: str, position: int, counter: List[int]) -> Tuple[Tree, int]:
    if not code.startswith("(e", position):
        raise InputError(f"Expected '(e' in tree code '{code}' at position {position}")
    name = f"e{counter[0]}"
    counter[0] += 1
    position += 2
    if code.startswith(")", position):
        return Tree(edge=name), position + 1
    if not code.startswith("[", position):
        raise InputError(f"Expected '[' or ')' in tree code '{code}' at position {position}")
    position += 1
    children = []
    while not code.startswith("]", position):
        if position >= len(code):
            raise InputError(f"Unterminated vertex in tree code '{code}'")
        child, position = _parse(code, position, counter)
        children.append(child)
    position += 1
    if not code.startswith(")", position):
        raise InputError(f"Expected ')' in tree code '{code}' at position {position}")
    return Tree(edge=name, node=Node(children=tuple(children))), position + 1

def canonical_labelling(tree: Tree) -> Tree:
    return tree_from_code(code_of(tree))

def isomorphisms(source: Tree, target: Tree) -> List[Dict[str, str]]:
    """All edge bijections realizing an isomorphism, ordered by their images on the sorted source edges."""
    return [dict(bijection) for bijection in _isomorphisms(source, target)]

@lru_cache(maxsize=None)
def _isomorphisms(source: Tree, target: Tree) -> Tuple[Dict[str, str], ...]:
    bijections = _subtree_isomorphisms(source, target)
    return tuple(sorted(bijections, key=lambda bijection: tuple(bijection[edge] for edge in source.edges)))

def _subtree_isomorphisms(source: Tree, target: Tree) -> List[Dict[str, str]]:
    if code_of(source) != code_of(target):
        return []
    if source.node is None:
        return [{source.edge: target.edge}]
    source_groups: Dict[str, List[Tree]] = defaultdict(list)
    target_groups: Dict[str, List[Tree]] = defaultdict(list)
    for child in _ordered_children(source):
        source_groups[code_of(child)].append(child)
    for child in _ordered_children(target):
        target_groups[code_of(child)].append(child)

    group_matchings = []
    for code in sorted(source_groups):
        matchings = []
        for arrangement in permutations(target_groups[code]):
            pairs = list(zip(source_groups[code], arrangement))
            for choice in product(*(_subtree_isomorphisms(left, right) for left, right in pairs)):
                merged: Dict[str, str] = {}
                for bijection in choice:
                    merged.update(bijection)
                matchings.append(merged)
        group_matchings.append(matchings)

    bijections = []
    for choice in product(*group_matchings):
        bijection = {source.edge: target.edge}
        for matching in choice:
            bijection.update(matching)
        bijections.append(bijection)
    return bijections

def isomorphism(source: Tree, target: Tree) -> Optional[Dict[str, str]]:
    found = _isomorphisms(source, target)
    if not found:
        return None
    return dict(found[0])

def automorphisms(tree: Tree) -> List[Dict[str, str]]:
    """Every automorphism of `tree`; the identity sorts first."""
    return isomorphisms(tree, tree)

def are_isomorphic(first: Tree, second: Tree) -> bool:
    return code_of(first) == code_of(second)
