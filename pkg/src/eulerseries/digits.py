"""Base-B digit machinery: expansions, block counts, lengths, epsilon."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class WordSpec:
    """A non-empty word over the alphabet {0, ..., base-1}."""

    base: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if not self.letters:
            raise ValueError("word must be non-empty")
        if any(not 0 <= d < self.base for d in self.letters):
            raise ValueError(f"letters must lie in [0, {self.base - 1}]")
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def parse(cls, text: str, base: int) -> "WordSpec":
        """Parse ``"0110"``; for bases above 10 separate letters with commas."""
        if "," in text:
            letters = tuple(int(t) for t in text.split(","))
        else:
            letters = tuple(int(c, 36) for c in text)
        return cls(base, letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def value(self) -> int:
        v = 0
        for d in self.letters:
            v = v * self.base + d
        return v

    def __str__(self) -> str:
        if self.base <= 10:
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))


def expand(n: int, B: int) -> list[int]:
    """Digits of n in base B, most significant first; [] for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if B < 2:
        raise ValueError("base must be >= 2")
    out = []
    while n:
        n, r = divmod(n, B)
        out.append(r)
    out.reverse()
    return out


def _count(word: Sequence[int], digits: Sequence[int]) -> int:
    w = len(word)
    word = list(word)
    return sum(1 for i in range(len(digits) - w + 1) if list(digits[i:i + w]) == word)


def count_occurrences(word: WordSpec, n: int, pad: int | None = None) -> int:
    """N_{w,B}(n): overlapping occurrences of ``word`` in the expansion of n.

    Words that start with 0 but have non-zero value see the expansion
    preceded by zeros (``pad`` of them, default ``len(word) - 1``).  The
    all-zero words use the shortest expansion.
    """
    if n == 0:
        return 0
    digits = expand(n, word.base)
    if word.value != 0 and word.letters[0] == 0:
        digits = [0] * (word.length - 1 if pad is None else pad) + digits
    return _count(word.letters, digits)


def length_B(k: int, B: int) -> int:
    """Number of base-B digits of k >= 1, i.e. floor(log_B(B k))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 0
    while k:
        k //= B
        n += 1
    return n


def epsilon(n: int, B: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return B - 1 if n % B == 0 else -1


def parity_counts(n: int, B: int) -> tuple[int, int]:
    """(odd digits, even digits) in the shortest base-B expansion of n."""
    if B % 2:
        raise ValueError("parity counts need an even base")
    odd = even = 0
    while n:
        n, r = divmod(n, B)
        if r % 2:
            odd += 1
        else:
            even += 1
    return odd, even
