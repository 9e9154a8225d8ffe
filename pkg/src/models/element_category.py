from pydantic import BaseModel, ConfigDict
from typing import List, Tuple

from models.tree_morphism import TreeMorphism

class ElementObject(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: str
    element: str

    def label(self) -> str:
        return f"{self.code}:{self.element}"

class ElementArrow(BaseModel):
    """A morphism f: S -> T of the tree category with an element over T whose image under f is the element over S."""
    model_config = ConfigDict(frozen=True)

    morphism: TreeMorphism
    source: ElementObject
    target: ElementObject
    generating: bool = False

    @property
    def key(self) -> Tuple[ElementObject, ElementObject, Tuple[str, ...]]:
        return (self.source, self.target, self.morphism.key)

    def is_identity(self) -> bool:
        return self.source == self.target and self.morphism.is_identity()

    def label(self) -> str:
        return f"{self.morphism.label()} {self.source.label()} -> {self.target.label()}"

class ElementCategory(BaseModel):
    model_config = ConfigDict(frozen=True)

    objects: Tuple[ElementObject, ...]
    arrows: Tuple[ElementArrow, ...]
    include_degenerate: bool = True

    def generating_arrows(self) -> List[ElementArrow]:
        return [arrow for arrow in self.arrows if arrow.generating]

    def __json__(self) -> dict:
        return {
            "objects": [obj.label() for obj in self.objects],
            "arrows": [
                {"source": arrow.source.label(), "target": arrow.target.label(), "morphism": arrow.morphism.label(),
                 "edge_map": arrow.morphism.edge_map}
                for arrow in self.arrows
            ],
            "include_degenerate": self.include_degenerate
        }
