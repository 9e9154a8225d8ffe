from pydantic import BaseModel, ConfigDict, model_validator
from typing import Dict, List, Optional, Tuple

from models.tree_morphism import MorphismKind, TreeMorphism

class PresheafAction(BaseModel):
    """The action of one generating morphism S -> T, sending elements over T to elements over S."""
    model_config = ConfigDict(frozen=True)

    morphism: TreeMorphism
    source_code: str
    target_code: str
    table: Dict[str, str]

    @property
    def kind(self) -> MorphismKind:
        return self.morphism.kind

    @property
    def key(self) -> Tuple[str, str, Tuple[str, ...]]:
        return (self.source_code, self.target_code, self.morphism.key)

    def __json__(self) -> dict:
        json = {
            "from": self.source_code,
            "to": self.target_code,
            "map_kind": self.kind.value,
            "edge_map": {edge: self.morphism.edge_map[edge] for edge in self.morphism.source.edges},
            "table": dict(sorted(self.table.items()))
        }
        if self.morphism.locus is not None:
            json["locus"] = self.morphism.locus
        return json

class FinDendroidalSet(BaseModel):
    """
    A dendroidal set truncated to trees with at most `bound` edges. Values are keyed by canonical tree
    code; actions are given for the generating morphisms between canonical representatives only.
    """
    model_config = ConfigDict(frozen=True)

    label: str
    bound: int
    values: Dict[str, Tuple[str, ...]]
    actions: Tuple[PresheafAction, ...] = ()

    @model_validator(mode="after")
    def _check_tables(self) -> "FinDendroidalSet":
        for action in self.actions:
            if action.source_code not in self.values or action.target_code not in self.values:
                raise ValueError(f"Action {action.morphism.label()} leaves the trees of {self.label}")
            if set(action.table) != set(self.values[action.target_code]):
                raise ValueError(f"Action {action.morphism.label()} on {action.target_code} is not defined on every element")
            stray = sorted(set(action.table.values()) - set(self.values[action.source_code]))
            if stray:
                raise ValueError(f"Action {action.morphism.label()} lands outside the values at {action.source_code}: {stray}")
        return self

    def elements(self, code: str) -> Tuple[str, ...]:
        return self.values.get(code, ())

    def size(self) -> int:
        return sum(len(elements) for elements in self.values.values())

    def actions_into(self, code: str) -> List[PresheafAction]:
        return [action for action in self.actions if action.target_code == code]

    def actions_out_of(self, code: str) -> List[PresheafAction]:
        return [action for action in self.actions if action.source_code == code]

    def __json__(self) -> dict:
        return {
            "label": self.label,
            "bound": self.bound,
            "values": {code: list(elements) for code, elements in sorted(self.values.items())},
            "actions": [action.__json__() for action in self.actions]
        }

class Inclusion(BaseModel):
    model_config = ConfigDict(frozen=True)

    sub: FinDendroidalSet
    ambient: FinDendroidalSet

    def __json__(self) -> dict:
        return {"sub": self.sub.__json__(), "ambient": self.ambient.__json__()}

class NormalMonoReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    normal: bool
    tree: Optional[str] = None
    element: Optional[str] = None
    stabilizer: Tuple[Dict[str, str], ...] = ()

    def __bool__(self) -> bool:
        return self.normal

    def __json__(self) -> dict:
        json = {"normal": self.normal}
        if not self.normal:
            json["witness"] = {"tree": self.tree, "element": self.element, "stabilizer": list(self.stabilizer)}
        return json
