import logging

from dendrex.homs import compose_homs, induced_hom, verify_hom
from dendrex.presentation import dendrex
from errors import InternalConsistencyError
from models.drawing import DiagramMap, Drawing, DrawingArrow
from models.fin_dendroidal_set import FinDendroidalSet
from models.star_presentation import VerificationReport
from omega.canonical import tree_from_code
from omega.morphisms import compose
from presheaf.elements import category_of_elements
from presheaf.representable import open_part

logger = logging.getLogger(__name__)

def draw(presheaf: FinDendroidalSet, include_degenerate: bool = True, open_only: bool = False) -> Drawing:
    """Computes the diagram of dendrices over the category of elements of `presheaf` and verifies it."""
    if open_only:
        presheaf = open_part(presheaf)
    index = category_of_elements(presheaf, include_degenerate=include_degenerate)
    nodes = {obj.label(): dendrex(tree_from_code(obj.code)) for obj in index.objects}
    arrows = tuple(DrawingArrow(arrow=arrow, hom=induced_hom(arrow.morphism)) for arrow in index.arrows)
    drawing = Drawing(
        label=f"dr({presheaf.label})",
        index=index,
        nodes=nodes,
        arrows=arrows,
        include_degenerate=include_degenerate,
        open_only=open_only
    )
    report = verify_drawing(drawing)
    if not report.passed:
        raise InternalConsistencyError(f"Drawing of {presheaf.label} fails {report.relation} at {report.counterexample}")
    logger.info(f"Drew {presheaf.label}: {len(nodes)} nodes, {len(arrows)} arrows")
    return drawing

def verify_drawing(drawing: Drawing) -> VerificationReport:
    """
    Re-verifies every arrow's homomorphism and checks that homs compose contravariantly along each
    arrow followed by a generating arrow, which covers all composable pairs by induction.
    """
    checked = 0
    for item in drawing.arrows:
        arrow, hom = item.arrow, item.hom
        checked += 1
        if hom.source != drawing.node(arrow.target.label()) or hom.target != drawing.node(arrow.source.label()):
            return VerificationReport.failure(drawing.label, "endpoints", arrow.label(), checked)
        report = verify_hom(hom)
        if not report.passed:
            return VerificationReport.failure(drawing.label, report.relation, f"{arrow.label()}: {report.counterexample}", checked)
        if arrow.is_identity() and any(images != (generator,) for generator, images in hom.assignment.items()):
            return VerificationReport.failure(drawing.label, "identity", arrow.label(), checked)

    homs = {item.arrow.key: item for item in drawing.arrows}
    generating_from = {}
    for item in drawing.arrows:
        if item.arrow.generating:
            generating_from.setdefault(item.arrow.source, []).append(item)
    for first in drawing.arrows:
        for second in generating_from.get(first.arrow.target, []):
            checked += 1
            composite = compose(second.arrow.morphism, first.arrow.morphism)
            found = homs.get((first.arrow.source, second.arrow.target, composite.key))
            if found is None:
                return VerificationReport.failure(drawing.label, "closure", f"{second.arrow.label()} after {first.arrow.label()}", checked)
            if not found.hom.same_assignment(compose_homs(first.hom, second.hom)):
                return VerificationReport.failure(drawing.label, "composition", found.arrow.label(), checked)
    return VerificationReport.success(drawing.label, checked)

def induced_diagram_map(sub: Drawing, ambient: Drawing) -> DiagramMap:
    """The map of diagrams induced by an inclusion of presheaves, checked injective and compatible."""
    subject = f"{sub.label} -> {ambient.label}"
    object_map = {label: label for label in sub.nodes}
    arrow_count = len(sub.arrows)
    missing = sorted(label for label in sub.nodes if label not in ambient.nodes)
    if missing:
        return DiagramMap(object_map=object_map, arrow_count=arrow_count, report=VerificationReport.failure(subject, "objects", missing[0]))
    if len(set(object_map.values())) != len(object_map):
        return DiagramMap(object_map=object_map, arrow_count=arrow_count, report=VerificationReport.failure(subject, "injectivity", subject))
    ambient_arrows = {item.arrow.key: item for item in ambient.arrows}
    checked = len(object_map)
    for item in sub.arrows:
        checked += 1
        counterpart = ambient_arrows.get(item.arrow.key)
        if counterpart is None or sub.node(item.arrow.source.label()) != ambient.node(item.arrow.source.label()):
            return DiagramMap(object_map=object_map, arrow_count=arrow_count, report=VerificationReport.failure(subject, "arrows", item.arrow.label(), checked))
        if not counterpart.hom.same_assignment(item.hom):
            return DiagramMap(object_map=object_map, arrow_count=arrow_count, report=VerificationReport.failure(subject, "homs", item.arrow.label(), checked))
    return DiagramMap(object_map=object_map, arrow_count=arrow_count, report=VerificationReport.success(subject, checked))
