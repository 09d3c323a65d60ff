"""Pydantic schemas for the group-spec grammar."""

from typing import Annotated, Literal

from pydantic import BaseModel, Field


class CyclicGroupSpec(BaseModel):
    """Cyclic group Z/nZ with residues as labels."""

    type: Literal["cyclic"]
    n: int = Field(ge=1)


class SymmetricGroupSpec(BaseModel):
    """Symmetric group on n points, generated by (1 2) and (1 2 ... n)."""

    type: Literal["symmetric"]
    n: int = Field(ge=1, le=6)


class PermutationGroupSpec(BaseModel):
    """Permutation group generated by one-line images (1-based) or cycle strings."""

    type: Literal["permutations"]
    degree: int = Field(ge=1, le=8)
    generators: list[list[int] | str] = Field(default_factory=list)


class TableGroupSpec(BaseModel):
    """Group given by an explicit multiplication table over indices 0..n-1."""

    type: Literal["table"]
    table: list[list[int]] = Field(min_length=1)


class MatrixGroupSpec(BaseModel):
    """Matrix group over Z/mZ generated by square matrices."""

    type: Literal["matrices"]
    modulus: int = Field(ge=2)
    generators: list[list[list[int]]] = Field(min_length=1)


class ProductGroupSpec(BaseModel):
    """Direct product of factor groups, elements ordered lexicographically."""

    type: Literal["product"]
    factors: list["GroupSpec"] = Field(min_length=1)


GroupSpec = Annotated[
    CyclicGroupSpec | SymmetricGroupSpec | PermutationGroupSpec | TableGroupSpec | MatrixGroupSpec | ProductGroupSpec,
    Field(discriminator="type"),
]

ProductGroupSpec.model_rebuild()
