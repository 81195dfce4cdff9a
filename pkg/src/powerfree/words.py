"""Binary words, exact rational exponents, and fractional-power detection.

Words are plain Python strings over the alphabet {'0', '1'}.  Exponent
thresholds are exact rationals (`fractions.Fraction`); floats are rejected
so that razor-thin distinctions such as "exponent 7/3" versus "exponent
greater than 7/3" are never blurred by rounding.

A repetition inside a word is certified by a :class:`PowerWitness`, the
triple (start, period, length) with ``w[i] == w[i + period]`` for every
``start <= i < start + length - period``.  Its exponent is the exact
rational length/period.  ``find_violation`` returns the first witness in
(start, period) order whose exponent meets the forbidden threshold, with
the length extended as far as the period allows at that start.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

Rational = Fraction

ALPHABET = frozenset("01")

_RATIONAL_RE = re.compile(r"^(\d+)(?:/(\d+))?$")

# find_violation switches to the vectorized per-period scan at this length
_VECTOR_MIN = 256


def parse_word(text: str) -> str:
    """Validate that ``text`` is a binary word and return it.

    A single trailing newline is tolerated (file and pipe input);
    any other character is a hard error.
    """
    if text.endswith("\r\n"):
        text = text[:-2]
    elif text.endswith("\n"):
        text = text[:-1]
    bad = set(text) - ALPHABET
    if bad:
        raise ValueError(f"invalid letters {sorted(bad)!r}: words use only '0' and '1'")
    return text


def parse_rational(text: str) -> Fraction:
    """Parse "P/Q" or a bare integer "P" into an exact rational."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}: expected P/Q or an integer")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"malformed rational {text!r}: denominator is zero")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as "P/Q" (always with an explicit denominator)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _require_word(word: str) -> None:
    if set(word) - ALPHABET:
        raise ValueError("words use only '0' and '1'")


def _require_threshold(alpha: Fraction | int) -> Fraction:
    if isinstance(alpha, float):
        raise TypeError("exponent thresholds must be exact rationals, not floats")
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise ValueError("exponent threshold must exceed 1")
    return alpha


@dataclass(frozen=True)
class PowerWitness:
    """A repetition of ``length`` letters with the given period at ``start``.

    The certified exponent is the exact rational length/period.
    """

    start: int
    period: int
    length: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def is_valid_in(self, host: str) -> bool:
        """Re-validate letter by letter against the claimed host word."""
        if self.start < 0 or self.period < 1 or self.length < self.period:
            return False
        if self.start + self.length > len(host):
            return False
        for i in range(self.start, self.start + self.length - self.period):
            if host[i] != host[i + self.period]:
                return False
        return True

    def as_dict(self) -> dict:
        return {
            "start": self.start,
            "period": self.period,
            "length": self.length,
            "exponent": format_rational(self.exponent),
        }


def _min_runs(alpha: Fraction, strict: bool, max_period: int) -> list[int]:
    """Smallest matched-run r per period p making (p + r)/p cross the threshold.

    Non-strict needs (p + r)/p >= alpha, strict needs a strictly larger
    exponent.  Entry 0 is a placeholder so the list indexes by period.
    """
    num, den = alpha.numerator, alpha.denominator
    d = num - den
    thr = [0] * (max_period + 1)
    for p in range(1, max_period + 1):
        if strict:
            thr[p] = (d * p) // den + 1
        else:
            thr[p] = -((-d * p) // den)  # exact ceiling division
    return thr


def _min_runs_array(alpha: Fraction, strict: bool, max_period: int) -> np.ndarray:
    num, den = alpha.numerator, alpha.denominator
    d = num - den
    p = np.arange(1, max_period + 1, dtype=np.int64)
    if strict:
        return (d * p) // den + 1
    return -((-d * p) // den)


def _suffix_violation(word, thr) -> bool:
    """True if a forbidden repetition ends at the last letter of ``word``.

    ``thr`` is the `_min_runs` table.  Assumes every proper prefix is
    already clean, so only runs ending at the final position matter.
    """
    n = len(word)
    for period in range(1, n):
        need = thr[period]
        if period + need > n:
            break  # needed runs only grow with the period
        run = 0
        j = n - 1 - period
        while j >= 0 and word[j] == word[j + period]:
            run += 1
            if run >= need:
                return True
            j -= 1
    return False


def word_exponent(word: str) -> tuple[Fraction, int]:
    """Exponent of a word: its length over its smallest period.

    The period of ``word`` is the smallest p >= 1 with
    ``word[i] == word[i + p]`` for all valid i (an aperiodic word has
    period equal to its length).
    """
    _require_word(word)
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no exponent")
    # longest proper border via the prefix function; period = n - border
    pi = [0] * n
    k = 0
    for q in range(1, n):
        while k > 0 and word[k] != word[q]:
            k = pi[k - 1]
        if word[k] == word[q]:
            k += 1
        pi[q] = k
    period = n - pi[n - 1]
    return Fraction(n, period), period


def _find_violation_scalar(word: str, thr: list[int]) -> PowerWitness | None:
    n = len(word)
    for start in range(n):
        avail = n - start
        for period in range(1, avail):
            need = thr[period]
            if period + need > avail:
                break
            j = start
            stop = n - period
            while j < stop and word[j] == word[j + period]:
                j += 1
            if j - start >= need:
                return PowerWitness(start, period, period + (j - start))
    return None


def _find_violation_vector(word: str, thr: np.ndarray) -> PowerWitness | None:
    n = len(word)
    arr = np.frombuffer(word.encode("ascii"), dtype=np.uint8)
    best_start = None
    best_period = None
    for period in range(1, n):
        need = int(thr[period - 1])
        if period + need > n:
            break
        match = arr[: n - period] == arr[period:]
        if match.size < need:
            continue
        # starts whose next `need` comparisons all match
        sums = np.concatenate(([0], np.cumsum(match, dtype=np.int64)))
        ok = (sums[need:] - sums[:-need]) == need
        if best_start is not None:
            ok = ok[:best_start]  # only a strictly earlier start can win
        if not ok.any():
            continue
        s = int(np.argmax(ok))
        if best_start is None or s < best_start:
            best_start, best_period = s, period
            if best_start == 0:
                break  # nothing precedes start 0, and the smallest period won
    if best_start is None:
        return None
    j = best_start
    stop = n - best_period
    while j < stop and word[j] == word[j + best_period]:
        j += 1
    return PowerWitness(best_start, best_period, best_period + (j - best_start))


def find_violation(word: str, alpha: Fraction | int, strict: bool = False) -> PowerWitness | None:
    """First subword repetition whose exponent violates the threshold.

    With ``strict=False`` any exponent >= alpha violates; with
    ``strict=True`` only exponents > alpha do (so exponent exactly alpha
    is still allowed).  Witnesses are ordered by (start, period) and carry
    the maximal length for that pair.  Returns None when the word is
    power-free at the requested threshold.
    """
    alpha = _require_threshold(alpha)
    _require_word(word)
    n = len(word)
    if n >= _VECTOR_MIN:
        return _find_violation_vector(word, _min_runs_array(alpha, strict, n))
    return _find_violation_scalar(word, _min_runs(alpha, strict, n))


def is_power_free(word: str, alpha: Fraction | int, strict: bool = False) -> bool:
    """True iff ``find_violation`` finds nothing."""
    return find_violation(word, alpha, strict) is None


def extend_check(word: str, letter: str, alpha: Fraction | int, strict: bool = False) -> bool:
    """Would appending ``letter`` keep an already power-free word power-free?

    Only repetitions ending at the new letter are examined, which is
    complete when ``word`` itself is power-free at the same threshold.
    """
    alpha = _require_threshold(alpha)
    if letter not in ALPHABET:
        raise ValueError("letter must be '0' or '1'")
    _require_word(word)
    extended = word + letter
    return not _suffix_violation(extended, _min_runs(alpha, strict, len(extended)))


class IncrementalChecker:
    """Letter-at-a-time power-freeness checker for long streams.

    Maintains, for every period p, the length of the current matched run
    ``w[i] == w[i + p]`` ending at the last letter, and reports the first
    letter whose arrival completes a forbidden repetition.  Appending costs
    one vectorized pass over the periods, so scanning a word of length n
    is O(n^2) elementwise work done in numpy.
    """

    def __init__(self, alpha: Fraction | int, strict: bool = False, capacity: int = 1024):
        self.alpha = _require_threshold(alpha)
        self.strict = strict
        self._n = 0
        self._letters = np.zeros(max(capacity, 16), dtype=np.uint8)
        self._runs = np.zeros(max(capacity, 16), dtype=np.int64)
        self._thr = _min_runs_array(self.alpha, strict, self._letters.size)
        self._violation: PowerWitness | None = None

    def __len__(self) -> int:
        return self._n

    @property
    def violation(self) -> PowerWitness | None:
        return self._violation

    def _grow(self) -> None:
        cap = self._letters.size * 2
        letters = np.zeros(cap, dtype=np.uint8)
        letters[: self._n] = self._letters[: self._n]
        runs = np.zeros(cap, dtype=np.int64)
        runs[: self._n] = self._runs[: self._n]
        self._letters, self._runs = letters, runs
        self._thr = _min_runs_array(self.alpha, self.strict, cap)

    def append(self, letter: str) -> PowerWitness | None:
        """Feed one letter; returns a witness the moment freeness is lost."""
        if self._violation is not None:
            raise RuntimeError("checker already found a violation; word cannot recover")
        if letter not in ALPHABET:
            raise ValueError("letter must be '0' or '1'")
        if self._n >= self._letters.size:
            self._grow()
        k = self._n
        code = ord(letter)
        self._letters[k] = code
        if k:
            runs = self._runs[:k]
            np.add(runs, 1, out=runs)
            runs *= self._letters[k - 1 :: -1] == code
            crossed = runs >= self._thr[:k]
            if crossed.any():
                p = int(np.argmax(crossed)) + 1
                run = int(runs[p - 1])
                self._violation = PowerWitness(k - p - run + 1, p, p + run)
        self._n += 1
        return self._violation

    def extend(self, word: str) -> PowerWitness | None:
        """Feed a whole word, stopping at the first violation."""
        for letter in word:
            if self.append(letter) is not None:
                break
        return self._violation
