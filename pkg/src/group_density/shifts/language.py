"""Memoized access to the factor language L(X)∩Aⁿ of a shift space."""

import threading
from collections.abc import Callable

from loguru import logger


class LanguageOracle:
    """Caches ``length -> sorted words`` for one shift.

    Cache fills happen outside the lock and are published under it, so two
    threads may compute the same length but never observe a partial entry.
    """

    def __init__(self, compute: Callable[[int], set[str]], name: str = "shift"):
        self._compute = compute
        self._cache: dict[int, tuple[str, ...]] = {0: ("",)}
        self._sets: dict[int, frozenset[str]] = {0: frozenset({""})}
        self._lock = threading.Lock()
        self.name = name

    def words(self, n: int) -> tuple[str, ...]:
        """L(X)∩Aⁿ as a sorted tuple."""
        if n < 0:
            raise ValueError("word length must be nonnegative")
        with self._lock:
            cached = self._cache.get(n)
        if cached is not None:
            return cached
        words = tuple(sorted(self._compute(n)))
        logger.debug(f"{self.name}: {len(words)} words of length {n}")
        with self._lock:
            self._cache.setdefault(n, words)
            self._sets.setdefault(n, frozenset(words))
            return self._cache[n]

    def word_set(self, n: int) -> frozenset[str]:
        self.words(n)
        with self._lock:
            return self._sets[n]

    def contains(self, word: str) -> bool:
        return word in self.word_set(len(word))

    def cached_lengths(self) -> list[int]:
        with self._lock:
            return sorted(self._cache)
