"""Raw monomials in the generators a_0, ..., a_{n-1} of the affine nilTemperley-Lieb algebra.

A :class:`Word` is an ordered sequence of generator indices.  ``letters[0]`` is
the leftmost algebraic factor, so when a word acts on particle configurations
the *last* letter acts first.

>>> w = Word(5, (0, 2))
>>> commutation_equal(w, Word(5, (2, 0)))
True
>>> is_nonzero(Word(3, (0, 1, 0)))
False
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Word",
    "check_rank",
    "is_nonzero",
    "commutation_equal",
    "zn_degree",
    "concat",
    "parse_word",
]


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"rank must be an int, got {type(n).__name__}")
    if n < 3:
        raise ValueError(f"rank must be at least 3, got {n}")
    return n


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        check_rank(self.n)
        letters = tuple(self.letters)
        for j in letters:
            if not 0 <= j < self.n:
                raise ValueError(f"generator index {j} out of range for rank {self.n}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Word":
        """Build a word, reducing every index modulo ``n``."""
        check_rank(n)
        return cls(n, tuple(j % n for j in indices))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def parse_word(n: int, text: str) -> Word:
    """Parse whitespace- or comma-separated indices, e.g. ``"6 4 2 1"``."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip().strip("[]")) if t]
    try:
        return Word(n, tuple(int(t) for t in tokens))
    except ValueError as exc:
        raise ValueError(f"bad word {text!r}: {exc}") from None


def _positions(w: Word) -> list[list[int]]:
    pos: list[list[int]] = [[] for _ in range(w.n)]
    for p, j in enumerate(w.letters):
        pos[j].append(p)
    return pos


def is_nonzero(w: Word) -> bool:
    """Combinatorial zero test.

    Between any two neighbouring occurrences of ``i`` there must be exactly one
    ``i+1`` and exactly one ``i-1`` (indices mod n).
    """
    n, letters = w.n, w.letters
    pos = _positions(w)
    for i in range(n):
        occ = pos[i]
        if len(occ) < 2:
            continue
        up, down = (i + 1) % n, (i - 1) % n
        for a, b in zip(occ, occ[1:]):
            between = letters[a + 1:b]
            if between.count(up) != 1 or between.count(down) != 1:
                return False
    return True


def _interleaving(w: Word, i: int) -> tuple[bool, ...]:
    """Order in which occurrences of i (False) and i+1 (True) appear."""
    up = (i + 1) % w.n
    return tuple(j == up for j in w.letters if j == i or j == up)


def commutation_equal(w1: Word, w2: Word) -> bool:
    """Equality of two nonzero monomials in the algebra.

    Two nonzero words agree iff they use every generator equally often and
    every pair of cyclically adjacent generators is interleaved identically.
    """
    if w1.n != w2.n:
        raise ValueError(f"rank mismatch: {w1.n} != {w2.n}")
    if not is_nonzero(w1) or not is_nonzero(w2):
        raise ValueError("commutation_equal is only defined on nonzero words")
    if zn_degree(w1) != zn_degree(w2):
        return False
    return all(_interleaving(w1, i) == _interleaving(w2, i) for i in range(w1.n))


def zn_degree(w: Word) -> tuple[int, ...]:
    counts = [0] * w.n
    for j in w.letters:
        counts[j] += 1
    return tuple(counts)


def concat(w1: Word, w2: Word) -> Word:
    if w1.n != w2.n:
        raise ValueError(f"rank mismatch: {w1.n} != {w2.n}")
    return Word(w1.n, w1.letters + w2.letters)
