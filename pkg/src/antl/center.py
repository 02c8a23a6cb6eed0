"""Projector monomials, central generators, the e_IJ monomials and the basis built from them.

Index sets are given as circle labels or positions; both are read modulo
``n``, so label 0 and position ``n`` name the same site.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .element import Element
from .fock import Config, act_word
from .normal_form import NormalForm, canonical_letters, normalize, psi
from .qpoly import QPoly
from .words import Word, check_rank

__all__ = [
    "BasisLabel",
    "projector_monomial",
    "central_generator",
    "unsigned_central_generator",
    "central_from_character",
    "e_word",
    "factorize",
    "basis_word",
    "basis_element",
    "enumerate_basis",
    "fntl_dimension",
]


def _positions(n: int, indices: Iterable[int]) -> list[int]:
    pos = sorted({(x % n) or n for x in indices})
    if len(pos) != len(list(indices)):
        raise ValueError(f"repeated index in {list(indices)}")
    return pos


def _gap(n: int, pos: Sequence[int]) -> int:
    """Split point l of the sequence: pos[l-1] + 1 < pos[l] cyclically.

    The wrap-around gap (after the last particle) is preferred, then the
    first gap scanning from the left.
    """
    k = len(pos)
    if pos[-1] + 1 < pos[0] + n:
        return k
    for l in range(1, k):
        if pos[l - 1] + 1 < pos[l]:
            return l
    raise ValueError("configuration has no gap")


def _step_all(n: int, pos: Sequence[int]) -> list[int]:
    """Letters moving every particle one step clockwise, leftmost factor first."""
    l = _gap(n, pos)
    return [p % n for p in list(pos[l:]) + list(pos[:l])]


def projector_monomial(I: Iterable[int], n: int) -> Word:
    """The monomial fixing configuration I up to ``(-1)**(k-1) q`` and killing all others."""
    check_rank(n)
    I = list(I)
    pos = _positions(n, I)
    k = len(pos)
    if not 1 <= k <= n - 1:
        raise ValueError(f"projector needs 1 <= |I| <= {n - 1}, got {k}")
    letters = [x % n for x in range(pos[0] - 1 + n, pos[-1], -1)]
    for s in range(k - 1):
        letters += range(pos[s + 1] - 1, pos[s], -1)
    letters += _step_all(n, pos)
    return Word(n, tuple(letters))


def _check_k(k: int, n: int) -> None:
    check_rank(n)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}, got {k}")


def unsigned_central_generator(k: int, n: int) -> Element:
    """Sum of all projector monomials with k particles."""
    _check_k(k, n)
    return Element.from_terms(
        n, ((projector_monomial(I, n).letters, 1) for I in combinations(range(n), k))
    )


def central_generator(k: int, n: int) -> Element:
    """``t_k``: acts by q on k-particle configurations and by 0 elsewhere."""
    return unsigned_central_generator(k, n) * (-1) ** (k - 1)


def central_from_character(n: int, chars: Sequence[QPoly]) -> Element:
    """The central element acting by ``chars[k-1]`` on the k-particle sector.

    All characters must share their constant term, which becomes the
    coefficient of 1; the rest is ``sum_k (p_k - p_k(0))(t_k)``.
    """
    check_rank(n)
    if len(chars) != n - 1:
        raise ValueError(f"expected {n - 1} characters, got {len(chars)}")
    constants = {p.coeff(0) for p in chars}
    if len(constants) != 1:
        raise ValueError("characters of a central element share one constant term")
    out = Element.one(n) * constants.pop()
    for k, p in enumerate(chars, start=1):
        t = central_generator(k, n)
        power = t
        for e in range(1, p.degree() + 1):
            if p.coeff(e):
                out = out + power * p.coeff(e)
            power = power * t
    return out


def _targets(n: int, src: Sequence[int], dst: Sequence[int]) -> list[int]:
    """Smallest order-preserving lifted targets with every particle moving."""
    k = len(src)

    def lifted(t: int) -> int:
        q, r = divmod(t, k)
        return dst[r] + n * q

    t0 = 0
    while lifted(t0) < src[0] + 1:
        t0 += 1
    while any(lifted(t0 + r) < src[r] + 1 for r in range(k)):
        t0 += 1
    return [lifted(t0 + r) for r in range(k)]


def e_word(I: Iterable[int], J: Iterable[int], n: int) -> Word:
    """Minimal-q monomial moving every particle of J to land on I."""
    check_rank(n)
    I, J = list(I), list(J)
    dst, src = _positions(n, I), _positions(n, J)
    k = len(src)
    if len(dst) != k:
        raise ValueError(f"|I| = {len(dst)} but |J| = {k}")
    _check_k(k, n)
    if dst == src:
        return projector_monomial(I, n)
    targets = _targets(n, src, dst)
    applied = list(reversed(_step_all(n, src)))
    cur = [p + 1 for p in src]
    occupied = {p % n for p in cur}
    while cur != targets:
        moved = False
        for r in reversed(range(k)):
            while cur[r] < targets[r] and (cur[r] + 1) % n not in occupied:
                applied.append(cur[r] % n)
                occupied.discard(cur[r] % n)
                cur[r] += 1
                occupied.add(cur[r] % n)
                moved = True
        if not moved:
            raise RuntimeError("particle routing deadlocked")
    return Word(n, tuple(reversed(applied)))


@dataclass(frozen=True)
class BasisLabel:
    """Label ``(k, ell, I, J)`` of the basis monomial ``p_k**ell * e_IJ``.

    I (output) and J (input) are sorted circle labels.
    """

    k: int
    ell: int
    i_out: tuple[int, ...]
    i_in: tuple[int, ...]

    def __post_init__(self):
        if not len(self.i_out) == len(self.i_in) == self.k:
            raise ValueError("|I| = |J| = k is required")
        if self.ell < 0:
            raise ValueError("ell must be non-negative")

    def __str__(self) -> str:
        fmt = lambda s: "(" + ",".join(map(str, s)) + ")"
        return f"k={self.k} l={self.ell} I={fmt(self.i_out)} J={fmt(self.i_in)}"

    @classmethod
    def parse(cls, text: str) -> "BasisLabel":
        m = re.fullmatch(r"\s*k=(\d+)\s+l=(\d+)\s+I=\(([\d,\s]*)\)\s+J=\(([\d,\s]*)\)\s*", text)
        if not m:
            raise ValueError(f"bad basis label {text!r}")
        seq = lambda s: tuple(sorted(int(t) for t in re.split(r"[,\s]+", s.strip()) if t))
        return cls(int(m.group(1)), int(m.group(2)), seq(m.group(3)), seq(m.group(4)))


def _q_exponent(w: Word, c: Config) -> tuple[int, Config]:
    res = act_word(w, c)
    if res is None:
        raise ValueError(f"{w} kills {c}")
    poly, out = res
    (exp, _), = poly.items()
    return exp, out


def factorize(w: Word) -> BasisLabel:
    """Basis label of a nonzero nonconstant monomial."""
    nf = normalize(w)
    if not isinstance(nf, NormalForm) or nf.is_one:
        raise ValueError("factorize needs a nonzero, nonconstant monomial")
    key = psi(nf)
    J = Config.from_labels(w.n, key.i_in)
    total, out = _q_exponent(w, J)
    e_exp, _ = _q_exponent(e_word(out.labels(), J.labels(), w.n), J)
    return BasisLabel(J.k, total - e_exp, out.labels(), J.labels())


def basis_word(label: BasisLabel, n: int) -> Word:
    """Canonical word of ``p_k**ell * e_IJ``; only the a(I) summand of p_k survives."""
    letters = projector_monomial(label.i_out, n).letters * label.ell
    letters += e_word(label.i_out, label.i_in, n).letters
    key = canonical_letters(n, letters)
    if key is None:
        raise ArithmeticError(f"basis monomial {label} vanished")
    return Word(n, key)


def basis_element(label: BasisLabel, n: int) -> Element:
    """``p_k**ell * e_IJ`` computed as a full product of elements."""
    return unsigned_central_generator(label.k, n) ** label.ell * Element.from_word(
        e_word(label.i_out, label.i_in, n)
    )


def enumerate_basis(n: int, ell_max: int) -> list[tuple[BasisLabel, Word]]:
    check_rank(n)
    if ell_max < 0:
        raise ValueError("ell_max must be non-negative")
    out = []
    for k in range(1, n):
        subsets = list(combinations(range(n), k))
        for ell in range(ell_max + 1):
            for I in subsets:
                for J in subsets:
                    label = BasisLabel(k, ell, I, J)
                    out.append((label, basis_word(label, n)))
    return out


def basis_size(n: int, ell_max: int) -> int:
    return (ell_max + 1) * sum(comb(n, k) ** 2 for k in range(1, n))


def fntl_dimension(n: int) -> int:
    """Number of nonzero monomials (including 1) in a_1, ..., a_{n-1}."""
    check_rank(n)
    seen = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for g in range(1, n):
                key = canonical_letters(n, (g,) + w)
                if key is not None and key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return len(seen)
