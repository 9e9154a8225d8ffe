import logging

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Optional, Tuple

from dendrex.presentation import abelian_dendrex, dendrex
from errors import InternalConsistencyError, PreconditionError
from models.star_presentation import StarHom, StarPresentation, VerificationReport
from models.tree import Tree
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.normal_form import normal_form
from settings import settings

logger = logging.getLogger(__name__)

def compose_homs(second: StarHom, first: StarHom) -> StarHom:
    """Expands sums generator by generator."""
    if first.target != second.source:
        raise PreconditionError(f"Cannot compose {second.source.name} -> {second.target.name} after {first.source.name} -> {first.target.name}")
    assignment = {
        generator: tuple(name for middle in first.assignment[generator] for name in second.assignment[middle])
        for generator in first.source.generators
    }
    return StarHom(source=first.source, target=second.target, assignment=assignment)

def preimage_hom(morphism: TreeMorphism) -> StarHom:
    """The generator rule q_e -> sum of q_a over the edges a sent to e."""
    assignment = {edge: morphism.preimage(edge) for edge in morphism.target.edges}
    return StarHom(source=dendrex(morphism.target), target=dendrex(morphism.source), assignment=assignment)

def step_hom(step: TreeMorphism) -> StarHom:
    source, target = dendrex(step.target), dendrex(step.source)
    if step.kind == MorphismKind.DEGENERACY:
        merged = step.edge_map[step.locus]
        assignment = {edge: (edge,) for edge in step.target.edges}
        assignment[merged] = step.preimage(merged)
    elif step.kind.is_face():
        survivors = set(step.source.edges)
        assignment = {edge: (edge,) if edge in survivors else () for edge in step.target.edges}
    elif step.kind in (MorphismKind.ISOMORPHISM, MorphismKind.IDENTITY):
        inverse = {image: edge for edge, image in step.edge_map.items()}
        assignment = {edge: (inverse[edge],) for edge in step.target.edges}
    else:
        return preimage_hom(step)
    return StarHom(source=source, target=target, assignment=assignment, label=step.label())

@lru_cache(maxsize=None)
def induced_hom(morphism: TreeMorphism) -> StarHom:
    """
    The *-homomorphism D(target) -> D(source) of `morphism`, composed from the generator rules of the
    steps of its normal form and verified before it is returned.
    """
    factorization = normal_form(morphism)
    steps = factorization.steps()
    hom = step_hom(steps[-1])
    for step in reversed(steps[:-1]):
        hom = compose_homs(step_hom(step), hom)
    if not hom.same_assignment(preimage_hom(morphism)):
        raise InternalConsistencyError(f"Induced homomorphism of {morphism!r} disagrees with the preimage rule")
    report = verify_hom(hom)
    if not report.passed:
        raise InternalConsistencyError(f"Induced homomorphism of {morphism!r} fails {report.relation}: {report.counterexample}")
    return hom.model_copy(update={"verified": True, "label": morphism.label()})

def verify_hom(hom: StarHom, max_length: Optional[int] = None) -> VerificationReport:
    """
    Checks positivity, the unit relation and every zero monomial of the source on at most `max_length`
    generators. When a commutative source maps to a noncommutative target, each commutator of images
    must expand to zero monomials as well.
    """
    max_length = max_length or settings.zero_sequence_length
    source, target = hom.source, hom.target
    subject = hom.label or f"{source.name} -> {target.name}"
    _check_well_formed(hom)
    checked = len(source.generators)

    images = Counter(name for generator in source.generators for name in hom.assignment[generator])
    if images != Counter(target.unit_sum):
        return VerificationReport.failure(subject, "unit", f"images sum to {_format_sum(images)}", checked)
    checked += 1

    for monomial in source.minimal_zero_sets(max_length):
        for term in product(*(hom.assignment[generator] for generator in monomial)):
            checked += 1
            if not target.is_zero(term):
                return VerificationReport.failure(subject, "zero", f"{'*'.join(monomial)} -> {'*'.join(term)}", checked)

    if source.commutative and not target.commutative:
        for first, second in combinations(source.generators, 2):
            coefficients = _commutator_coefficients(hom.assignment[first], hom.assignment[second])
            for (left, right), coefficient in sorted(coefficients.items()):
                checked += 1
                if coefficient != 0 and not target.is_zero((left, right)):
                    return VerificationReport.failure(subject, "commutativity", f"[{first},{second}] -> {left}*{right}", checked)

    logger.debug(f"Verified {subject} with {checked} checks")
    return VerificationReport.success(subject, checked)

def _check_well_formed(hom: StarHom):
    if set(hom.assignment) != set(hom.source.generators):
        raise PreconditionError(f"Assignment keys {sorted(hom.assignment)} differ from generators {list(hom.source.generators)}")
    known = set(hom.target.generators)
    for generator, images in hom.assignment.items():
        if not set(images) <= known:
            raise PreconditionError(f"Image of {generator} mentions generators outside {hom.target.name}")
        if len(set(images)) != len(images):
            raise PreconditionError(f"Image of {generator} repeats a generator")

def _commutator_coefficients(first: Tuple[str, ...], second: Tuple[str, ...]) -> Dict[Tuple[str, str], int]:
    coefficients: Dict[Tuple[str, str], int] = Counter()
    for left, right in product(first, second):
        coefficients[(left, right)] += 1
        coefficients[(right, left)] -= 1
    return coefficients

def _format_sum(images: Counter) -> str:
    if not images:
        return "0"
    return " + ".join(name if count == 1 else f"{count}*{name}" for name, count in sorted(images.items()))

def is_generator_surjective(hom: StarHom) -> bool:
    return hom.hit_generators() == set(hom.target.generators)

def abelianization_hom(tree: Tree) -> StarHom:
    assignment = {edge: (edge,) for edge in tree.edges}
    hom = StarHom(source=dendrex(tree), target=abelian_dendrex(tree), assignment=assignment, label="abelianization")
    report = verify_hom(hom)
    if not report.passed:
        raise InternalConsistencyError(f"Abelianization of {tree!r} fails {report.relation}: {report.counterexample}")
    return hom.mark_verified()

def presentation_for(tree: Tree, abelian: bool = False) -> StarPresentation:
    return abelian_dendrex(tree) if abelian else dendrex(tree)
