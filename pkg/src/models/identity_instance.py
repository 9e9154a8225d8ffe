from enum import Enum
from pydantic import BaseModel, ConfigDict
from typing import Optional

from models.tree_morphism import TreeMorphism

class IdentityName(str, Enum):
    INNER_INNER = "I"
    OUTER_OUTER = "II"
    INNER_OUTER = "III"
    ADJACENT_INNER_OUTER = "IV"
    DEGENERACY_DEGENERACY = "V"
    DEGENERACY_FACE = "VI"
    DEGENERACY_SECTION = "VII"

class IdentityInstance(BaseModel):
    """One instance of a face/degeneracy identity on a tree, with both composites when they exist."""
    model_config = ConfigDict(frozen=True)

    identity: IdentityName
    tree: str
    locus: str
    lhs: Optional[TreeMorphism] = None
    rhs: Optional[TreeMorphism] = None
    holds: bool
    detail: Optional[str] = None

    def __json__(self) -> dict:
        json = {
            "identity": self.identity.value,
            "tree": self.tree,
            "locus": self.locus,
            "holds": self.holds
        }
        if self.lhs is not None:
            json["lhs"] = self.lhs.edge_map
        if self.rhs is not None:
            json["rhs"] = self.rhs.edge_map
        if self.detail:
            json["detail"] = self.detail
        return json
