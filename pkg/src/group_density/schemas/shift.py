"""Pydantic schemas for the shift-spec and measure-spec grammars."""

from typing import Annotated, Literal

from pydantic import BaseModel, Field, field_validator


class SFTSpec(BaseModel):
    """Shift of finite type: forbidden words of length step+1."""

    type: Literal["sft"]
    step: int = Field(ge=1)
    forbidden: list[str] = Field(default_factory=list)
    alphabet: list[str] | None = None


class SubstitutionSpec(BaseModel):
    """Primitive substitution given letter by letter."""

    type: Literal["substitution"]
    rules: dict[str, str] = Field(min_length=1)

    @field_validator("rules")
    @classmethod
    def single_letter_keys(cls, rules: dict[str, str]) -> dict[str, str]:
        for letter, image in rules.items():
            if len(letter) != 1:
                raise ValueError(f"substitution keys must be single letters, got {letter!r}")
            if not image:
                raise ValueError(f"empty image for letter {letter!r}")
        return rules


class PeriodicSpec(BaseModel):
    """Finite orbit of a periodic bi-infinite word."""

    type: Literal["periodic"]
    word: str = Field(min_length=1)


ShiftSpecModel = Annotated[SFTSpec | SubstitutionSpec | PeriodicSpec, Field(discriminator="type")]


class ParryMeasureSpec(BaseModel):
    """Maximal-entropy Markov measure of an irreducible SFT."""

    type: Literal["parry"]


class MarkovMeasureModel(BaseModel):
    """Stationary r-step Markov measure; probabilities are numbers or 'p/q' strings."""

    type: Literal["markov"]
    step: int = Field(ge=1)
    pi: dict[str, float | str] | None = None
    transitions: dict[str, dict[str, float | str]]


class UniqueMeasureSpec(BaseModel):
    """The unique invariant measure of a substitution or periodic shift."""

    type: Literal["unique"]


MeasureSpecModel = Annotated[ParryMeasureSpec | MarkovMeasureModel | UniqueMeasureSpec, Field(discriminator="type")]
