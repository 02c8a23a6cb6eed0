"""Integer linear combinations of canonical monomials."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .fock import FockVector, act_element, configs
from .normal_form import canonical_letters
from .qpoly import QPoly
from .words import Word, check_rank

__all__ = [
    "Element",
    "NotCentral",
    "add",
    "scale",
    "mul",
    "is_central",
    "central_character",
    "parse_element",
]


class NotCentral(ValueError):
    pass


class Element:
    """An element of the algebra in the basis of canonical monomials.

    ``terms`` maps canonical letter tuples (``()`` is the identity) to nonzero
    integers.  Construct through :meth:`from_word`, :meth:`from_terms` or the
    arithmetic operators; the constructor trusts its keys to be canonical.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls(check_rank(n))

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls(check_rank(n), {(): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> "Element":
        return cls.from_word(Word(n, (i % n,)))

    @classmethod
    def from_word(cls, w: Word, coef: int = 1) -> "Element":
        key = canonical_letters(w.n, w.letters)
        if key is None:
            return cls(w.n)
        return cls(w.n, {key: coef})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[Iterable[int], int]]) -> "Element":
        """Sum of ``coef * word`` over arbitrary (not necessarily canonical) words."""
        check_rank(n)
        out: dict[tuple, int] = {}
        for letters, coef in terms:
            key = canonical_letters(n, Word(n, tuple(letters)).letters)
            if key is not None:
                out[key] = out.get(key, 0) + coef
        return cls(n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def words(self) -> list[Word]:
        return [Word(self.n, w) for w in self.terms]

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Element(self.n, out)

    def __neg__(self) -> "Element":
        return Element(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.n, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        n = self.n
        out: dict[tuple, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = canonical_letters(n, w1 + w2)
                if key is not None:
                    out[key] = out.get(key, 0) + c1 * c2
        return Element(n, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, m: int) -> "Element":
        result = Element.one(self.n)
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d}·[{' '.join(map(str, w))}]" for w, c in self.terms.items())

    def __repr__(self) -> str:
        return f"Element(n={self.n}, {self})"


_TERM_RE = re.compile(r"([+-]\d+)·\[([^\]]*)\]")


def parse_element(n: int, text: str) -> Element:
    """Parse the ``+1·[2 1 0] -3·[]`` rendering."""
    text = text.strip()
    if text == "0":
        return Element.zero(n)
    if not _TERM_RE.search(text) or _TERM_RE.sub("", text).strip():
        raise ValueError(f"bad element {text!r}")
    terms = [([int(t) for t in body.split()], int(c)) for c, body in _TERM_RE.findall(text)]
    return Element.from_terms(n, terms)


def add(e1: Element, e2: Element) -> Element:
    return e1 + e2


def scale(c: int, e: Element) -> Element:
    return e * c


def mul(e1: Element, e2: Element) -> Element:
    return e1 * e2


def is_central(e: Element) -> bool:
    for i in range(e.n):
        a = Element.generator(e.n, i)
        if e * a != a * e:
            return False
    return True


def central_character(e: Element) -> list[QPoly]:
    """Scalars ``p_1, ..., p_{n-1}`` by which e acts on each particle sector."""
    chars = []
    for k in range(1, e.n):
        cfgs = configs(e.n, k)
        p = None
        for c in cfgs:
            img = act_element(e, FockVector.basis(c))
            if set(img.terms) - {c}:
                raise NotCentral(f"{e} does not preserve configuration {c}")
            val = img.terms.get(c, QPoly())
            if p is None:
                p = val
            elif val != p:
                raise NotCentral(f"{e} acts by different scalars on {k}-particle configurations")
        chars.append(p)
    return chars
