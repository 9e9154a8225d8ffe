import logging
import numpy as np

from itertools import product
from sympy import ImmutableMatrix, eye, zeros
from typing import Sequence, Union

from dendrex.presentation import abelian_dendrex
from errors import PreconditionError
from graphalg.cuntz_krieger import linear_graph_tree
from models.ck_presentation import CKPresentation, CKRelationKind, isometry, projection
from models.matrix_assignment import MatrixAssignment, ScalarAssignment
from models.star_presentation import StarPresentation, VerificationReport
from omega.enumeration import linear_tree
from settings import settings

logger = logging.getLogger(__name__)

def matrix_unit(dimension: int, row: int, column: int) -> ImmutableMatrix:
    matrix = zeros(dimension, dimension)
    matrix[row, column] = 1
    return ImmutableMatrix(matrix)

def linear_graph_ck_matrices(n: int) -> MatrixAssignment:
    """P_(v_i) = e_ii for i = 0..n and S_(e_i) = e_(i-1,i) for i = 1..n, in dimension n + 1."""
    if n < 1:
        raise PreconditionError(f"The linear graph needs at least one edge, got {n}")
    matrices = {projection(f"v{index}"): matrix_unit(n + 1, index, index) for index in range(n + 1)}
    matrices.update({isometry(f"e{index}"): matrix_unit(n + 1, index - 1, index) for index in range(1, n + 1)})
    return MatrixAssignment(dimension=n + 1, matrices=matrices)

def matrix_rep_s(n: int) -> MatrixAssignment:
    """q_(e_i) = e_ii for the n edges e1..en of the linear graph tree, in dimension n."""
    if n < 1:
        raise PreconditionError(f"The matrix representation needs at least one generator, got {n}")
    return MatrixAssignment(
        dimension=n,
        matrices={f"e{index}": matrix_unit(n, index - 1, index - 1) for index in range(1, n + 1)}
    )

def verify_matrix_assignment(presentation: Union[StarPresentation, CKPresentation], assignment: MatrixAssignment) -> VerificationReport:
    for name, matrix in assignment.matrices.items():
        if matrix.shape != (assignment.dimension, assignment.dimension):
            raise PreconditionError(f"Matrix of {name} has shape {matrix.shape}, expected dimension {assignment.dimension}")
    if isinstance(presentation, CKPresentation):
        return _verify_ck(presentation, assignment)
    return _verify_star(presentation, assignment)

def _require(names: Sequence[str], assignment: MatrixAssignment):
    missing = sorted(set(names) - set(assignment.matrices))
    if missing:
        raise PreconditionError(f"No matrices assigned to {missing}")

def _verify_star(presentation: StarPresentation, assignment: MatrixAssignment) -> VerificationReport:
    _require(presentation.generators, assignment)
    matrices = assignment.matrices
    identity = eye(assignment.dimension)
    checked = 0
    for generator in presentation.generators:
        checked += 1
        matrix = matrices[generator]
        if matrix != matrix.H or not matrix.is_positive_semidefinite:
            return VerificationReport.failure(presentation.name, "positivity", generator, checked)
    checked += 1
    total = zeros(assignment.dimension, assignment.dimension)
    for generator in presentation.unit_sum:
        total += matrices[generator]
    if total != identity:
        return VerificationReport.failure(presentation.name, "unit", " + ".join(presentation.unit_sum), checked)
    for length in range(2, settings.zero_sequence_length + 1):
        for monomial in product(presentation.generators, repeat=length):
            if not presentation.is_zero(monomial):
                continue
            checked += 1
            value = identity
            for generator in monomial:
                value = value * matrices[generator]
            if not value.is_zero_matrix:
                return VerificationReport.failure(presentation.name, "zero", "*".join(monomial), checked)
    if presentation.commutative:
        for first, second in product(presentation.generators, repeat=2):
            checked += 1
            if matrices[first] * matrices[second] != matrices[second] * matrices[first]:
                return VerificationReport.failure(presentation.name, "commutativity", f"[{first},{second}]", checked)
    return VerificationReport.success(presentation.name, checked)

def _verify_ck(presentation: CKPresentation, assignment: MatrixAssignment) -> VerificationReport:
    _require(presentation.projections + presentation.isometries, assignment)
    matrices = assignment.matrices
    subject = "C*(" + ",".join(presentation.graph.vertices) + ")"
    checked = 0
    for name in presentation.projections:
        checked += 1
        matrix = matrices[name]
        if matrix * matrix != matrix or matrix.H != matrix:
            return VerificationReport.failure(subject, "projection", name, checked)
    for relation in presentation.relations:
        checked += 1
        if relation.kind == CKRelationKind.ORTHOGONAL:
            first, second = (matrices[projection(vertex)] for vertex in relation.vertices)
            holds = (first * second).is_zero_matrix
        elif relation.kind == CKRelationKind.CK1:
            partial = matrices[isometry(relation.edges[0])]
            holds = partial.H * partial == matrices[projection(relation.vertices[0])]
        else:
            total = zeros(assignment.dimension, assignment.dimension)
            for edge in relation.edges:
                total += matrices[isometry(edge)] * matrices[isometry(edge)].H
            holds = total == matrices[projection(relation.vertices[0])]
        if not holds:
            return VerificationReport.failure(subject, relation.kind.value, relation.text(), checked)
    if presentation.unital:
        checked += 1
        total = zeros(assignment.dimension, assignment.dimension)
        for name in presentation.projections:
            total += matrices[name]
        if total != eye(assignment.dimension):
            return VerificationReport.failure(subject, "unit", " + ".join(presentation.projections), checked)
    return VerificationReport.success(subject, checked)

def simplex_eval(n: int, point: Sequence[float]) -> ScalarAssignment:
    """Evaluates the abelian dendrex of L_n at a point of the n-simplex: q_(e_i) = p_i."""
    if len(point) != n + 1:
        raise PreconditionError(f"A point of the {n}-simplex has {n + 1} coordinates, got {len(point)}")
    if any(coordinate < 0 for coordinate in point):
        raise PreconditionError(f"Negative coordinate in {list(point)}")
    if abs(sum(point) - 1.0) > settings.simplex_tolerance:
        raise PreconditionError(f"Coordinates of {list(point)} sum to {sum(point)}, not 1")
    return ScalarAssignment(values={f"e{index}": float(coordinate) for index, coordinate in enumerate(point)})

def verify_scalar_assignment(presentation: StarPresentation, assignment: ScalarAssignment, tolerance: float = None) -> VerificationReport:
    tolerance = settings.simplex_tolerance if tolerance is None else tolerance
    values = assignment.values
    checked = 0
    for generator in presentation.generators:
        checked += 1
        if values[generator] < 0:
            return VerificationReport.failure(presentation.name, "positivity", generator, checked)
    checked += 1
    if abs(sum(values[generator] for generator in presentation.unit_sum) - 1.0) > tolerance:
        return VerificationReport.failure(presentation.name, "unit", " + ".join(presentation.unit_sum), checked)
    for first, second in presentation.zero_pairs:
        checked += 1
        if abs(values[first] * values[second]) > tolerance:
            return VerificationReport.failure(presentation.name, "zero", f"{first}*{second}", checked)
    return VerificationReport.success(presentation.name, checked)

def random_simplex_points(n: int, count: int, seed: int) -> np.ndarray:
    return np.random.default_rng(seed).dirichlet(np.ones(n + 1), size=count)

def simplex_sweep(n: int, count: int = None, seed: int = None) -> VerificationReport:
    count = settings.sample_points if count is None else count
    seed = settings.seed if seed is None else seed
    presentation = abelian_dendrex(linear_tree(n))
    checked = 0
    for point in random_simplex_points(n, count, seed):
        report = verify_scalar_assignment(presentation, simplex_eval(n, [float(value) for value in point]))
        checked += report.checked
        if not report.passed:
            return VerificationReport.failure(presentation.name, report.relation, f"{list(point)}: {report.counterexample}", checked)
    logger.debug(f"Evaluated {count} random points of the {n}-simplex")
    return VerificationReport.success(presentation.name, checked)
