import logging

from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from errors import PreconditionError, ResourceLimitError
from models.tree import CanonicalTree, Node, Tree
from omega.canonical import LEAF_CODE, canonicalize, tree_from_code
from settings import settings

logger = logging.getLogger(__name__)

STUMP_CODE = "(e[])"

class TreeKind(str, Enum):
    UNIT = "unit"
    LINEAR = "linear"
    COROLLA = "corolla"

def standard_tree(kind: TreeKind, n: int = 0) -> Tree:
    """
    The unit tree `e0`, the linear tree L_n with root `e0` up to leaf `en`, or the n-corolla with
    root `e0` and leaves `e1`..`en`.
    """
    if n < 0:
        raise PreconditionError(f"Tree size must be non-negative, got {n}")
    if kind == TreeKind.UNIT:
        return Tree(edge="e0")
    if kind == TreeKind.LINEAR:
        tree = Tree(edge=f"e{n}")
        for index in range(n - 1, -1, -1):
            tree = Tree(edge=f"e{index}", node=Node(children=(tree,)))
        return tree
    return Tree(edge="e0", node=Node(children=tuple(Tree(edge=f"e{index}") for index in range(1, n + 1))))

def linear_tree(n: int) -> Tree:
    return standard_tree(TreeKind.LINEAR, n)

def corolla(n: int) -> Tree:
    return standard_tree(TreeKind.COROLLA, n)

def unit_tree() -> Tree:
    return standard_tree(TreeKind.UNIT)

def is_open(tree: Tree) -> bool:
    return not tree.stumps

def enumerate_trees(max_edges: int) -> List[CanonicalTree]:
    """One canonically labelled representative per isomorphism class, by edge count and then code."""
    if max_edges < 1:
        raise PreconditionError(f"max_edges must be positive, got {max_edges}")
    if max_edges > settings.max_edges:
        raise ResourceLimitError(f"max_edges={max_edges} exceeds the configured ceiling of {settings.max_edges}")
    return list(_enumerate_trees(max_edges))

@lru_cache(maxsize=None)
def _enumerate_trees(max_edges: int) -> Tuple[CanonicalTree, ...]:
    representatives = []
    for size in range(1, max_edges + 1):
        codes = shape_codes(size)
        logger.debug(f"{len(codes)} tree shapes with {size} edges")
        representatives.extend(canonicalize(tree_from_code(code)) for code in codes)
    return tuple(representatives)

@lru_cache(maxsize=None)
def shape_codes(size: int) -> Tuple[str, ...]:
    if size == 1:
        return tuple(sorted((LEAF_CODE, STUMP_CODE)))
    codes = []
    smaller = [(code, edges) for edges in range(1, size) for code in shape_codes(edges)]
    smaller.sort()
    for children in _child_multisets(smaller, size - 1, 0):
        codes.append("(e[" + "".join(sorted(children)) + "])")
    return tuple(sorted(codes))

def _child_multisets(candidates: List[Tuple[str, int]], total: int, start: int) -> List[List[str]]:
    if total == 0:
        return [[]]
    found = []
    for index in range(start, len(candidates)):
        code, edges = candidates[index]
        if edges > total:
            continue
        for rest in _child_multisets(candidates, total - edges, index):
            found.append([code] + rest)
    return found
