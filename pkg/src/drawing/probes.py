"""
Edge-level homomorphisms between dendrex presentations and the truncated dendraw probe built from them.

Only homomorphisms sending each generator to a sum of distinct generators are considered, which is
the class every homomorphism induced by a tree morphism belongs to. General *-homomorphisms form a
continuum and are out of reach.
"""
import logging

from itertools import product
from typing import Dict, List

from dendrex.homs import compose_homs, induced_hom, verify_hom
from dendrex.presentation import dendrex
from errors import PreconditionError
from models.fin_dendroidal_set import FinDendroidalSet
from models.star_presentation import StarHom, StarPresentation
from models.tree import Tree
from models.tree_morphism import TreeMorphism
from omega.canonical import code_of
from presheaf.builder import build_presheaf

logger = logging.getLogger(__name__)

def hom_id(hom: StarHom) -> str:
    return ";".join(f"{generator}>{'+'.join(images)}" for generator, images in sorted(hom.normalized().items()))

def edge_homs(source: StarPresentation, target: StarPresentation) -> List[StarHom]:
    """
    Every verified assignment of sums of distinct target generators to source generators. The unit
    relation forces each target generator into exactly one image, so candidates are enumerated as
    functions from target generators to source generators.
    """
    if list(source.unit_sum) != list(source.generators) or list(target.unit_sum) != list(target.generators):
        raise PreconditionError("Edge homomorphisms need presentations whose unit is the sum of all generators")
    found = []
    for choice in product(range(len(source.generators)), repeat=len(target.generators)):
        assignment: Dict[str, List[str]] = {generator: [] for generator in source.generators}
        for name, owner in zip(target.generators, choice):
            assignment[source.generators[owner]].append(name)
        hom = StarHom(
            source=source,
            target=target,
            assignment={generator: tuple(images) for generator, images in assignment.items()},
            label="edge-hom"
        )
        if verify_hom(hom).passed:
            found.append(hom.mark_verified())
    logger.debug(f"{len(found)} edge homomorphisms {source.name} -> {target.name}")
    return found

def dendraw_probe(source: StarPresentation, bound: int) -> FinDendroidalSet:
    """Over each tree T, the edge homomorphisms from `source` to D(T), acted on by the induced homs."""
    by_id: Dict[str, Dict[str, StarHom]] = {}

    def elements_at(tree: Tree) -> List[str]:
        homs = {hom_id(hom): hom for hom in edge_homs(source, dendrex(tree))}
        by_id[code_of(tree)] = homs
        return list(homs)

    def act(generator: TreeMorphism, element: str) -> str:
        return hom_id(compose_homs(induced_hom(generator), by_id[code_of(generator.target)][element]))

    return build_presheaf(f"dd[{source.name}]", bound, elements_at, act)
