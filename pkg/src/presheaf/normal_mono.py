import logging

from errors import PreconditionError
from models.fin_dendroidal_set import Inclusion, NormalMonoReport
from models.tree_morphism import MorphismKind
from presheaf.representable import is_contained

logger = logging.getLogger(__name__)

def is_normal_mono(inclusion: Inclusion) -> NormalMonoReport:
    """
    Whether the automorphism group of every tree acts freely on the elements of the ambient presheaf
    outside the sub-presheaf. A failure carries an element with a nontrivial stabilizer.
    """
    violation = is_contained(inclusion.sub, inclusion.ambient)
    if violation is not None:
        raise PreconditionError(f"{inclusion.sub.label} is not contained in {inclusion.ambient.label}: {violation}")
    ambient = inclusion.ambient
    for code, elements in sorted(ambient.values.items()):
        outside = sorted(set(elements) - set(inclusion.sub.elements(code)))
        if not outside:
            continue
        symmetries = [
            action for action in ambient.actions_into(code)
            if action.kind == MorphismKind.ISOMORPHISM and action.source_code == code
        ]
        for element in outside:
            stabilizer = [action.morphism.edge_map for action in symmetries if action.table[element] == element]
            if stabilizer:
                logger.debug(f"{element} at {code} is fixed by {len(stabilizer)} nontrivial automorphisms")
                return NormalMonoReport(normal=False, tree=code, element=element, stabilizer=tuple(stabilizer))
    return NormalMonoReport(normal=True)
