"""Pydantic schema for problem specs consumed by the CLI."""

from pydantic import BaseModel, Field, model_validator

from group_density.schemas.group import GroupSpec
from group_density.schemas.shift import MeasureSpecModel, PeriodicSpec, SFTSpec, ShiftSpecModel, SubstitutionSpec

ElementRef = str | int


class QuerySpec(BaseModel):
    """Command-specific parameters; every field is optional."""

    K: list[ElementRef] | None = None
    H: list[ElementRef] | None = None
    word: str | None = None
    horizon: int | None = Field(default=None, ge=1)
    max_cylinder: int | None = Field(default=None, ge=0)
    cap: int | None = Field(default=None, ge=1)
    n: int | None = Field(default=None, ge=0)
    scan: int | None = Field(default=None, ge=1)
    terms: int | None = Field(default=None, ge=1)


class ProblemSpec(BaseModel):
    """A group language inside a shift space, with its measure and query."""

    name: str | None = None
    description: str | None = None
    alphabet: list[str] | None = None
    group: GroupSpec
    morphism: dict[str, ElementRef]
    onto: bool = True
    shift: ShiftSpecModel
    measure: MeasureSpecModel | None = None
    query: QuerySpec = Field(default_factory=QuerySpec)

    @model_validator(mode="after")
    def resolve_alphabet(self) -> "ProblemSpec":
        if self.alphabet is None:
            self.alphabet = _shift_alphabet(self.shift)
        for letter in self.alphabet:
            if len(letter) != 1:
                raise ValueError(f"letters must be single characters, got {letter!r}")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has repeated letters")
        missing = sorted(set(self.alphabet) - set(self.morphism))
        extra = sorted(set(self.morphism) - set(self.alphabet))
        if missing:
            raise ValueError(f"morphism is missing letters {missing}")
        if extra:
            raise ValueError(f"morphism maps letters outside the alphabet {extra}")
        return self


def _shift_alphabet(shift: SFTSpec | SubstitutionSpec | PeriodicSpec) -> list[str]:
    if isinstance(shift, SubstitutionSpec):
        return sorted(shift.rules)
    if isinstance(shift, PeriodicSpec):
        return sorted(set(shift.word))
    if shift.alphabet is not None:
        return list(shift.alphabet)
    return sorted({letter for word in shift.forbidden for letter in word})
