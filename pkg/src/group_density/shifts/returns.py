"""Certified right return words of minimal shifts."""

from bisect import bisect_left
from dataclasses import dataclass, field

from group_density.core.config import settings
from group_density.core.exceptions import SemiDecisionError
from group_density.core.logging import evidence_logger
from group_density.shifts.spaces import ShiftSpace


@dataclass(frozen=True)
class ReturnWordCertificate:
    """Return set R_X(u) with the scan data that certifies it."""

    u: str
    returns: tuple[str, ...]
    window: int
    max_gap: int
    complete: bool
    notes: list[str] = field(default_factory=list)

    def require_complete(self) -> "ReturnWordCertificate":
        if not self.complete:
            raise SemiDecisionError(
                f"return words of {self.u!r} not certified within a window of {self.window} letters"
            )
        return self


def occurrences(word: str, u: str) -> list[int]:
    """Start positions of (possibly overlapping) occurrences of u in word."""
    found, start = [], word.find(u)
    while start != -1:
        found.append(start)
        start = word.find(u, start + 1)
    return found


def _scan(cover: list[str], u: str, window: int) -> tuple[set[str], int, bool]:
    """Collect returns and gaps; check every length-``window`` factor holds two occurrences of u."""
    returns: set[str] = set()
    max_gap = 0
    dense = True
    for text in cover:
        occ = occurrences(text, u)
        for left, right in zip(occ, occ[1:], strict=False):
            returns.add(text[left:right])
            max_gap = max(max_gap, right - left)
        last_start = len(text) - window
        # The hardest window in each stretch starts right after an occurrence.
        starts = [0] + [o + 1 for o in occ]
        for s in starts:
            if s > last_start:
                break
            k = bisect_left(occ, s)
            if k + 1 >= len(occ) or occ[k + 1] + len(u) > s + window:
                dense = False
                break
        if not dense:
            break
    return returns, max_gap, dense


def return_words(shift: ShiftSpace, u: str, cap: int | None = None) -> ReturnWordCertificate:
    """Right return words of u, certified by window doubling.

    A window length N certifies the set once every word of L(X)∩A^N contains two
    occurrences of u and N ≥ 2·max_gap + 2|u|. Hitting the cap gives an
    incomplete certificate, never a truncated one.

    Raises:
        PreconditionError: If the shift is not a minimal backend
        WordNotInLanguageError: If u is not in L(X)
    """
    shift.require_minimal("return_words")
    shift.require_word(u)
    cap = cap or settings.RETURN_WINDOW_CAP
    log = evidence_logger("return_words")
    if not u:
        returns = tuple(sorted(shift.language(1)))
        return ReturnWordCertificate(u, returns, 1, 1, True)

    window = max(8, 2 * len(u) + 2)
    returns: set[str] = set()
    max_gap = 0
    while window <= cap:
        found, gap, dense = _scan(shift.covering_words(window), u, window)
        returns, max_gap = found, gap
        if dense and window >= 2 * max_gap + 2 * len(u):
            log.info(f"u={u!r} certified: window={window} max_gap={max_gap} returns={len(returns)}")
            return ReturnWordCertificate(u, tuple(sorted(returns)), window, max_gap, True)
        window *= 2
    log.warning(f"u={u!r} not certified below window cap {cap}")
    return ReturnWordCertificate(
        u, tuple(sorted(returns)), cap, max_gap, False, notes=[f"window cap {cap} reached before certification"]
    )
