"""Higher block presentations of shifts of finite type."""

from dataclasses import dataclass

from group_density.core.config import settings
from group_density.core.exceptions import PreconditionError
from group_density.shifts.letters import LetterCoder
from group_density.shifts.spaces import SFTShift


@dataclass(frozen=True)
class HigherBlockPresentation:
    """X^[r] as a 1-step SFT over the r-blocks of X, with the β_r coding."""

    shift: SFTShift
    coder: LetterCoder
    r: int

    def block(self, word: str) -> str:
        """β_r on finite words: the sequence of length-r windows of ``word``."""
        if len(word) < self.r:
            raise PreconditionError(f"words shorter than r={self.r} have no block image")
        return self.coder.encode_word(word[i : i + self.r] for i in range(len(word) - self.r + 1))

    def unblock(self, coded: str) -> str:
        labels = self.coder.decode_word(coded)
        if not labels:
            return ""
        return labels[0] + "".join(label[-1] for label in labels[1:])


def higher_block(shift: SFTShift, r: int) -> HigherBlockPresentation:
    """1-step SFT on L(X)∩A^r with transitions u → v iff u·v[-1] ∈ L(X).

    Raises:
        PreconditionError: If r is below the SFT step or above BLOCK_LENGTH_CAP
    """
    if r < shift.step:
        raise PreconditionError(f"higher block length {r} is below the SFT step {shift.step}")
    if r > settings.BLOCK_LENGTH_CAP:
        raise PreconditionError(f"higher block length {r} exceeds BLOCK_LENGTH_CAP={settings.BLOCK_LENGTH_CAP}")
    blocks = shift.language(r)
    coder = LetterCoder(blocks)
    allowed = {coder.encode(w[:-1]) + coder.encode(w[1:]) for w in shift.language(r + 1)}
    presented = SFTShift(coder.symbols, 1, allowed, name=f"{shift.describe()}^[{r}]")
    return HigherBlockPresentation(presented, coder, r)
