import logging

from dendrex.homs import compose_homs, induced_hom
from models.star_presentation import VerificationReport
from omega.enumeration import enumerate_trees
from omega.identities import identity_suite
from omega.morphisms import compose, hom_set

logger = logging.getLogger(__name__)

def check_functoriality(max_edges: int) -> VerificationReport:
    """
    For every composable pair f, g between trees with at most `max_edges` edges, the hom induced by
    g after f must equal the hom of f after the hom of g. Every induced hom is verified on the way.
    """
    subject = f"functoriality up to {max_edges} edges"
    trees = [canonical.tree for canonical in enumerate_trees(max_edges)]
    checked = 0
    for first_source in trees:
        for middle in trees:
            firsts = hom_set(first_source, middle)
            if not firsts:
                continue
            for last_target in trees:
                seconds = hom_set(middle, last_target)
                for first in firsts:
                    for second in seconds:
                        checked += 1
                        expected = compose_homs(induced_hom(first), induced_hom(second))
                        if not induced_hom(compose(second, first)).same_assignment(expected):
                            return VerificationReport.failure(subject, "composition", f"{second!r} after {first!r}", checked)
    logger.info(f"Checked {checked} composable pairs on {len(trees)} trees")
    return VerificationReport.success(subject, checked)

def check_identity_transport(max_edges: int) -> VerificationReport:
    """Both sides of every face/degeneracy identity instance induce the same homomorphism."""
    subject = f"identity transport up to {max_edges} edges"
    checked = 0
    for instance in identity_suite(max_edges):
        if instance.lhs is None or instance.rhs is None:
            continue
        checked += 1
        if not induced_hom(instance.lhs).same_assignment(induced_hom(instance.rhs)):
            return VerificationReport.failure(subject, f"identity {instance.identity.value}", f"{instance.tree} at {instance.locus}", checked)
    return VerificationReport.success(subject, checked)
