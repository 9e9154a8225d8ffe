from itertools import combinations
from pydantic import BaseModel, ConfigDict, model_validator
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

class StarPresentation(BaseModel):
    """
    A unital *-algebra given by positive generators of norm at most `norm_bound`, a unit relation
    saying the generators in `unit_sum` add up to 1, and zero monomials. A monomial is zero exactly
    when the set of generators in it contains one of the `zero_pairs`.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    generators: Tuple[str, ...]
    unit_sum: Tuple[str, ...]
    zero_pairs: Tuple[Tuple[str, str], ...] = ()
    commutative: bool = False
    norm_bound: int = 1
    tree: Optional[str] = None

    @model_validator(mode="after")
    def _check_generators(self) -> "StarPresentation":
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"Duplicate generators in {self.generators}")
        known = set(self.generators)
        unknown = sorted({name for pair in self.zero_pairs for name in pair} - known | set(self.unit_sum) - known)
        if unknown:
            raise ValueError(f"Relations mention unknown generators {unknown}")
        return self

    @property
    def zero_pair_sets(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(pair) for pair in self.zero_pairs)

    def is_zero(self, monomial: Iterable[str]) -> bool:
        present = set(monomial)
        return any(pair <= present for pair in self.zero_pair_sets)

    def minimal_zero_sets(self, max_length: int) -> List[Tuple[str, ...]]:
        """Generator sets of size at most `max_length` declared zero, smallest first."""
        found = []
        for size in range(2, max_length + 1):
            for chosen in combinations(self.generators, size):
                if self.is_zero(chosen):
                    found.append(chosen)
        return found

    def __json__(self) -> dict:
        json = {
            "name": self.name,
            "generators": list(self.generators),
            "unit_sum": list(self.unit_sum),
            "zero_pairs": [list(pair) for pair in self.zero_pairs],
            "commutative": self.commutative,
            "norm_bound": self.norm_bound
        }
        if self.tree is not None:
            json["tree"] = self.tree
        return json

class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    subject: str
    checked: int = 0
    relation: Optional[str] = None
    counterexample: Optional[str] = None

    @classmethod
    def success(cls, subject: str, checked: int) -> "VerificationReport":
        return cls(passed=True, subject=subject, checked=checked)

    @classmethod
    def failure(cls, subject: str, relation: str, counterexample: str, checked: int = 0) -> "VerificationReport":
        return cls(passed=False, subject=subject, relation=relation, counterexample=counterexample, checked=checked)

    def __bool__(self) -> bool:
        return self.passed

    def __json__(self) -> dict:
        json = {"passed": self.passed, "subject": self.subject, "checked": self.checked}
        if not self.passed:
            json["relation"] = self.relation
            json["counterexample"] = self.counterexample
        return json

class StarHom(BaseModel):
    """
    A unital *-homomorphism given on generators: each source generator goes to a sum of target
    generators, the empty sum being zero.
    """
    model_config = ConfigDict(frozen=True)

    source: StarPresentation
    target: StarPresentation
    assignment: Dict[str, Tuple[str, ...]]
    label: Optional[str] = None
    verified: bool = False

    def hit_generators(self) -> FrozenSet[str]:
        return frozenset(name for images in self.assignment.values() for name in images)

    def normalized(self) -> Dict[str, Tuple[str, ...]]:
        return {generator: tuple(sorted(images)) for generator, images in self.assignment.items()}

    def same_assignment(self, other: "StarHom") -> bool:
        return self.normalized() == other.normalized()

    def mark_verified(self) -> "StarHom":
        return self.model_copy(update={"verified": True})

    def __json__(self) -> dict:
        json = {
            "source": self.source.name,
            "target": self.target.name,
            "assignment": {generator: list(images) for generator, images in sorted(self.normalized().items())},
            "verified": self.verified
        }
        if self.label is not None:
            json["label"] = self.label
        return json
