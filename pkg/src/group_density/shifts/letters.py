"""Single-character codes for derived alphabets (skew letters, higher blocks)."""

from collections.abc import Iterable, Sequence

from group_density.core.exceptions import UnknownLetterError

PRIVATE_USE_START = 0xE000


class LetterCoder:
    """Bijection between human-readable letter labels and one-character symbols.

    Words everywhere in the library are plain ``str``. When the labels of a
    derived alphabet are already single characters they are used as-is,
    otherwise each label gets a code point from the private-use area.
    """

    def __init__(self, labels: Sequence[str]):
        if len(set(labels)) != len(labels):
            raise UnknownLetterError("letter labels must be distinct")
        self.labels: tuple[str, ...] = tuple(labels)
        self.identity = all(len(label) == 1 for label in labels)
        if self.identity:
            self.symbols = self.labels
        else:
            self.symbols = tuple(chr(PRIVATE_USE_START + i) for i in range(len(labels)))
        self._encode = dict(zip(self.labels, self.symbols, strict=True))
        self._decode = dict(zip(self.symbols, self.labels, strict=True))

    def __len__(self) -> int:
        return len(self.labels)

    def encode(self, label: str) -> str:
        try:
            return self._encode[label]
        except KeyError as e:
            raise UnknownLetterError(f"unknown letter label {label!r}") from e

    def decode(self, symbol: str) -> str:
        try:
            return self._decode[symbol]
        except KeyError as e:
            raise UnknownLetterError(f"unknown letter symbol {symbol!r}") from e

    def encode_word(self, labels: Iterable[str]) -> str:
        return "".join(self.encode(label) for label in labels)

    def decode_word(self, word: str) -> list[str]:
        return [self.decode(symbol) for symbol in word]

    def render(self, word: str, sep: str = " ") -> str:
        """Readable form of a coded word; identity coders print the word unchanged."""
        if self.identity:
            return word
        return sep.join(self.decode_word(word))
