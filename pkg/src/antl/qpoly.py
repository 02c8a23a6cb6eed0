"""Polynomials in q with exact integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

__all__ = ["QPoly"]


class QPoly:
    """Sparse integer polynomial in q, stored as ``{exponent: coefficient}``.

    >>> q = QPoly.q()
    >>> str((q + 1) * (q - 1))
    '-1·q^0 +1·q^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                clean[int(e)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "QPoly":
        return cls({exp: coef})

    @classmethod
    def q(cls) -> "QPoly":
        return cls({1: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max(self._terms) if self._terms else -1

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "QPoly":
        result = QPoly.const(1)
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def evaluate(self, value):
        """Evaluate at an int or Fraction; 0**0 counts as 1."""
        value = Fraction(value)
        return sum((c * value**e for e, c in self._terms.items()), Fraction(0))

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "QPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return cls(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(f"{c:+d}·q^{e}" for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"QPoly({self._terms!r})"

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        text = text.strip()
        if text == "0":
            return cls()
        terms = re.findall(r"([+-]?\d+)·q\^(\d+)", text)
        if not terms or re.sub(r"[+-]?\d+·q\^\d+", "", text).strip():
            raise ValueError(f"bad q-polynomial {text!r}")
        return cls.from_pairs((int(e), int(c)) for c, e in terms)
