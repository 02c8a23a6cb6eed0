"""Block normal form of nonzero monomials and the (in, out, ell) invariant.

Normalizing a word peels off, repeatedly, every letter ``i`` that has no
``i-1`` to its right; each peeled layer is a *block*.  Blocks are listed left
to right as ``Block^(m) ... Block^(1) Block^(0)`` and each block is sorted
cyclically starting from a fixed gap index.

>>> nf = normalize(Word(7, (6, 4, 2, 1, 3, 5, 4, 2, 0, 6, 1, 3, 2, 5)))
>>> str(nf)
'(6 2)(4 5 1)(3 4 0)(2 3 6)(1 2 5)'
>>> psi(nf)
PsiKey(i_in=frozenset({1, 2, 5}), i_out=frozenset({2, 4, 6}), ell=1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .words import Word, check_rank, is_nonzero

__all__ = [
    "NormalForm",
    "Zero",
    "ZERO",
    "Strand",
    "PsiKey",
    "IntegralSequence",
    "NotInImage",
    "InvalidKey",
    "normalize",
    "canonical_word",
    "strands",
    "psi",
    "integral_lift",
    "reconstruct",
    "parse_normal_form",
]


class NotInImage(ValueError):
    """No normal form maps to the requested key."""


class InvalidKey(ValueError):
    """The key violates |i_in| = |i_out|."""


class Zero:
    """The zero monomial; it has no word representative."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "0"

    def __reduce__(self):
        return (Zero, ())


ZERO = Zero()


@dataclass(frozen=True)
class NormalForm:
    """A nonzero monomial in normal form.

    ``blocks`` runs left to right, i.e. ``blocks[-1]`` is Block^(0).  The empty
    block sequence is the identity monomial.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def one(cls, n: int) -> "NormalForm":
        return cls(check_rank(n), ())

    @property
    def is_one(self) -> bool:
        return not self.blocks

    @property
    def block0(self) -> tuple[int, ...]:
        return self.blocks[-1]

    def block(self, level: int) -> tuple[int, ...]:
        """Block^(level), counting from the right."""
        return self.blocks[len(self.blocks) - 1 - level]

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(j for b in self.blocks for j in b)

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        return "".join("(" + " ".join(map(str, b)) + ")" for b in self.blocks)


NormalFormLike = Union[NormalForm, Zero]


@dataclass(frozen=True)
class Strand:
    n: int
    start: int
    length: int

    @property
    def end(self) -> int:
        return (self.start + self.length - 1) % self.n

    def indices(self) -> tuple[int, ...]:
        return tuple((self.start + t) % self.n for t in range(self.length))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.indices())) + "]"


@dataclass(frozen=True)
class PsiKey:
    i_in: frozenset
    i_out: frozenset
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "i_in", frozenset(self.i_in))
        object.__setattr__(self, "i_out", frozenset(self.i_out))


@dataclass(frozen=True)
class IntegralSequence:
    """Normal form lifted to integer indices.

    Indices are first shifted so that Block^(0) starts a cyclic run at 0.

    ``blocks`` keeps the order of the originating normal form; ``strand_data``
    lists ``(i_r, n_r)`` with the strand covering ``i_r, ..., i_r + n_r``.
    """

    n: int
    shift: int
    blocks: tuple[tuple[int, ...], ...]
    strand_data: tuple[tuple[int, int], ...]

    @property
    def strand_ends(self) -> tuple[int, ...]:
        return tuple(i + m for i, m in self.strand_data)

    def reduce(self) -> NormalForm:
        return NormalForm(
            self.n,
            tuple(tuple((x + self.shift) % self.n for x in b) for b in self.blocks),
        )

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, b)) + ")" for b in self.blocks)


def _peel(n: int, letters: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Split a nonzero word into its layers, Block^(0) first."""
    layers = []
    rest = list(letters)
    while rest:
        seen = [False] * n
        take = [False] * len(rest)
        # scan right to left, remembering which indices already occurred
        for p in range(len(rest) - 1, -1, -1):
            j = rest[p]
            if not seen[(j - 1) % n]:
                take[p] = True
            seen[j] = True
        layers.append(tuple(j for j, t in zip(rest, take) if t))
        rest = [j for j, t in zip(rest, take) if not t]
    return layers


def _gap_start(n: int, block0: tuple[int, ...]) -> int:
    present = set(block0)
    return max(i for i in range(n) if i not in present and (i - 1) % n in present)


@lru_cache(maxsize=1 << 18)
def _normal_blocks(n: int, letters: tuple[int, ...]):
    """Canonical blocks (left to right) or None for a zero word."""
    if not is_nonzero(Word(n, letters)):
        return None
    if not letters:
        return ()
    layers = _peel(n, letters)
    start = _gap_start(n, layers[0])
    ordered = [
        tuple(sorted(layer, key=lambda j, s=(start + lvl) % n: (j - s) % n))
        for lvl, layer in enumerate(layers)
    ]
    return tuple(reversed(ordered))


def normalize(w: Word) -> NormalFormLike:
    blocks = _normal_blocks(w.n, w.letters)
    if blocks is None:
        return ZERO
    return NormalForm(w.n, blocks)


def canonical_letters(n: int, letters: tuple[int, ...]):
    """Letters of the canonical word, or None when the monomial is zero."""
    blocks = _normal_blocks(n, tuple(letters))
    if blocks is None:
        return None
    return tuple(j for b in blocks for j in b)


def canonical_word(nf: NormalFormLike) -> Word:
    if isinstance(nf, Zero):
        raise ValueError("zero has no word representative")
    return Word(nf.n, nf.letters)


def _require_blocks(nf: NormalFormLike) -> NormalForm:
    if isinstance(nf, Zero) or nf.is_one:
        raise ValueError(f"operation needs a nonconstant nonzero monomial, got {nf}")
    return nf


def strands(nf: NormalFormLike) -> list[Strand]:
    nf = _require_blocks(nf)
    n = nf.n
    levels = [set(nf.block(lvl)) for lvl in range(len(nf.blocks))]
    out = []
    for start in sorted(nf.block0):
        length = 1
        while length < len(levels) and (start + length) % n in levels[length]:
            length += 1
        out.append(Strand(n, start, length))
    return out


def psi(nf: NormalFormLike) -> PsiKey:
    nf = _require_blocks(nf)
    return PsiKey(
        frozenset(nf.block0),
        frozenset(s.end for s in strands(nf)),
        nf.letters.count(0),
    )


def _run_start(n: int, indices) -> int:
    """Smallest index whose cyclic predecessor is absent; it becomes 0 after shifting."""
    present = set(indices)
    return min(i for i in present if (i - 1) % n not in present)


def integral_lift(nf: NormalFormLike) -> IntegralSequence:
    nf = _require_blocks(nf)
    n = nf.n
    shift = _run_start(n, nf.block0)
    depth = len(nf.blocks)
    blocks = []
    for pos, b in enumerate(nf.blocks):
        lvl = depth - 1 - pos
        # the strand through index j at this level started at j - lvl
        blocks.append(tuple(((j - shift - lvl) % n) + lvl for j in b))
    data = tuple(
        ((s.start - shift) % n, s.length - 1)
        for s in sorted(strands(nf), key=lambda s: (s.start - shift) % n)
    )
    return IntegralSequence(n, shift, tuple(blocks), data)


def _strand_ends(n: int, starts: list[int], outs: list[int], zeros: int):
    """Integer strand ends for i_1 = 0, given the number of zeros ``zeros``."""
    k = len(starts)
    t, r = divmod(zeros - 1, k)
    s = k - r
    # d_{s+1} < ... < d_k < d_1 < ... < d_s
    d = outs[k - s:] + outs[:k - s]
    return [n * t + d[idx] if idx < s else n * (t + 1) + d[idx] for idx in range(k)]


def _count_residue(lo: int, hi: int, residue: int, n: int) -> int:
    """How many x in [lo, hi] satisfy x = residue (mod n)."""
    if hi < lo:
        return 0
    return (hi - residue) // n - (lo - 1 - residue) // n


def reconstruct(key: PsiKey, n: int) -> NormalForm:
    """Invert :func:`psi` on its image."""
    check_rank(n)
    k = len(key.i_in)
    if k != len(key.i_out):
        raise InvalidKey(f"|i_in| = {k} but |i_out| = {len(key.i_out)}")
    if k == 0:
        raise NotInImage("empty key does not label a nonconstant monomial")
    if key.ell < 0:
        raise InvalidKey("ell must be non-negative")
    for x in key.i_in | key.i_out:
        if not 0 <= x < n:
            raise InvalidKey(f"index {x} out of range for rank {n}")
    shift = _run_start(n, key.i_in)
    starts = sorted((x - shift) % n for x in key.i_in)
    outs = sorted((x - shift) % n for x in key.i_out)
    zero_residue = (-shift) % n
    # zeros counted after shifting differ from the original count by at most k
    for shifted_zeros in range(max(1, key.ell - k), key.ell + k + 2):
        ends = _strand_ends(n, starts, outs, shifted_zeros)
        if any(e < i for i, e in zip(starts, ends)):
            continue
        zeros = sum(_count_residue(i, e, zero_residue, n) for i, e in zip(starts, ends))
        if zeros != key.ell:
            continue
        depth = max(e - i for i, e in zip(starts, ends)) + 1
        layers = [
            [i + lvl for i, e in zip(starts, ends) if i + lvl <= e] for lvl in range(depth)
        ]
        letters = tuple(
            (x + shift) % n for layer in reversed(layers) for x in sorted(layer)
        )
        nf = normalize(Word(n, letters))
        if isinstance(nf, NormalForm) and psi(nf) == key:
            return nf
    raise NotInImage(f"no normal form has key {key}")


_BLOCK_RE = re.compile(r"\(([^()]*)\)")


def parse_normal_form(n: int, text: str) -> NormalFormLike:
    """Parse the ``(6 2)(4 5 1)`` rendering; ``0`` and ``1`` are accepted."""
    text = text.strip()
    if text == "0":
        return ZERO
    if text == "1":
        return NormalForm.one(n)
    if _BLOCK_RE.sub("", text).strip():
        raise ValueError(f"bad normal form {text!r}")
    blocks = tuple(
        tuple(int(t) for t in re.split(r"[\s,]+", m.strip()) if t)
        for m in _BLOCK_RE.findall(text)
    )
    nf = normalize(Word(n, tuple(j for b in blocks for j in b)))
    if nf != NormalForm(n, blocks):
        raise ValueError(f"{text!r} is not in normal form")
    return nf
