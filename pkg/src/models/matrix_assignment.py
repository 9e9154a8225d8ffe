from pydantic import BaseModel, ConfigDict, model_validator
from sympy import ImmutableMatrix
from typing import Dict

class MatrixAssignment(BaseModel):
    """Square matrices with exact rational entries, one per generator."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dimension: int
    matrices: Dict[str, ImmutableMatrix]

    @model_validator(mode="after")
    def _check_exact(self) -> "MatrixAssignment":
        for name, matrix in self.matrices.items():
            if not all(entry.is_Rational for entry in matrix):
                raise ValueError(f"Matrix of {name} has non-rational entries")
        return self

    def with_entry(self, name: str, row: int, column: int, value) -> "MatrixAssignment":
        matrix = self.matrices[name].as_mutable()
        matrix[row, column] = value
        matrices = dict(self.matrices)
        matrices[name] = ImmutableMatrix(matrix)
        return MatrixAssignment(dimension=self.dimension, matrices=matrices)

    def __json__(self) -> dict:
        return {
            "dimension": self.dimension,
            "matrices": {
                name: [[[int(entry.p), int(entry.q)] for entry in matrix.row(row)] for row in range(matrix.rows)]
                for name, matrix in sorted(self.matrices.items())
            }
        }

class ScalarAssignment(BaseModel):
    """Real values for the generators of a commutative presentation, e.g. a point of a simplex."""
    model_config = ConfigDict(frozen=True)

    values: Dict[str, float]

    def __json__(self) -> dict:
        return {"values": dict(sorted(self.values.items()))}
