"""Checks of the square relating linear dendrices, matrix algebras and simplices."""
import logging

from typing import List, Optional

from dendrex.homs import abelianization_hom, is_generator_surjective, verify_hom
from dendrex.presentation import dendrex
from errors import PreconditionError
from graphalg.cuntz_krieger import ck_presentation, linear_graph, linear_graph_tree
from graphalg.matrices import linear_graph_ck_matrices, matrix_rep_s, simplex_sweep, verify_matrix_assignment
from models.star_presentation import VerificationReport

logger = logging.getLogger(__name__)

def verify_zigzag(n: int, seed: Optional[int] = None, count: Optional[int] = None) -> List[VerificationReport]:
    """
    For the linear tree with n edges: the matrix representation of its dendrex, the Cuntz-Krieger
    family of the linear graph, the abelianization map and random points of the n-simplex.
    """
    tree = linear_graph_tree(n)
    reports = [
        verify_matrix_assignment(dendrex(tree), matrix_rep_s(n)),
        verify_matrix_assignment(ck_presentation(linear_graph(n)), linear_graph_ck_matrices(n))
    ]
    projection = abelianization_hom(tree)
    report = verify_hom(projection)
    if report.passed and not is_generator_surjective(projection):
        report = VerificationReport.failure(report.subject, "surjectivity", ",".join(projection.target.generators), report.checked)
    reports.append(report)
    reports.append(simplex_sweep(n, count=count, seed=seed))
    logger.info(f"Zigzag for n={n}: {sum(report.passed for report in reports)}/{len(reports)} checks passed")
    return reports

def verify_zigzag_up_to(max_n: int, seed: Optional[int] = None, count: Optional[int] = None) -> List[VerificationReport]:
    if max_n < 1:
        raise PreconditionError(f"The zigzag needs at least one edge, got {max_n}")
    reports: List[VerificationReport] = []
    for n in range(1, max_n + 1):
        reports.extend(verify_zigzag(n, seed=seed, count=count))
    return reports
