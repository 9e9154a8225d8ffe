from pydantic import BaseModel, ConfigDict
from typing import Dict, Tuple

from models.element_category import ElementArrow, ElementCategory
from models.star_presentation import StarHom, StarPresentation, VerificationReport

class DrawingArrow(BaseModel):
    model_config = ConfigDict(frozen=True)

    arrow: ElementArrow
    hom: StarHom

class Drawing(BaseModel):
    """
    The diagram whose colimit is the drawing of a finite dendroidal set: one dendrex per element and,
    for every arrow of the category of elements, the induced homomorphism running the other way.
    """
    model_config = ConfigDict(frozen=True)

    label: str
    index: ElementCategory
    nodes: Dict[str, StarPresentation]
    arrows: Tuple[DrawingArrow, ...]
    include_degenerate: bool = True
    open_only: bool = False

    def node(self, label: str) -> StarPresentation:
        return self.nodes[label]

    def with_arrow(self, position: int, hom: StarHom) -> "Drawing":
        arrows = list(self.arrows)
        arrows[position] = arrows[position].model_copy(update={"hom": hom})
        return self.model_copy(update={"arrows": tuple(arrows)})

    def __json__(self) -> dict:
        return {
            "label": self.label,
            "include_degenerate": self.include_degenerate,
            "open_only": self.open_only,
            "homs": "edge-level generator assignments; general *-homomorphisms are not enumerated",
            "nodes": {label: presentation.__json__() for label, presentation in sorted(self.nodes.items())},
            "arrows": [
                {
                    "index": item.arrow.label(),
                    "from": item.arrow.target.label(),
                    "to": item.arrow.source.label(),
                    "hom": item.hom.__json__()
                }
                for item in self.arrows
            ]
        }

class DiagramMap(BaseModel):
    model_config = ConfigDict(frozen=True)

    object_map: Dict[str, str]
    arrow_count: int
    report: VerificationReport

    def __json__(self) -> dict:
        return {
            "object_map": dict(sorted(self.object_map.items())),
            "arrow_count": self.arrow_count,
            "report": self.report.__json__()
        }
