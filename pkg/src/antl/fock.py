"""The representation on fermionic particle configurations on a circle.

Configurations store positions in ``1..n``; position ``n`` is circle position
0.  The generator ``a_j`` moves a particle from ``j`` to ``j+1``; ``a_0`` moves
a particle from position ``n`` to ``1`` and multiplies by ``(-1)**(k-1) * q``
where ``k`` is the number of particles.

Elements are consumed by duck typing: anything with an ``n`` attribute and a
``terms`` mapping from letter tuples to integer coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .linalg import nullity
from .qpoly import QPoly
from .words import Word, check_rank

__all__ = [
    "Config",
    "FockVector",
    "RepMatrix",
    "act_generator",
    "act_word",
    "act_element",
    "matrix_block",
    "full_matrix",
    "endomorphism_dimension",
    "configs",
]


@dataclass(frozen=True, order=True)
class Config:
    n: int
    positions: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(self.positions)
        if any(not 1 <= p <= self.n for p in pos) or any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions must be strictly increasing in 1..{self.n}: {pos}")
        object.__setattr__(self, "positions", pos)

    @classmethod
    def from_labels(cls, n: int, labels: Iterable[int]) -> "Config":
        """Build from circle labels ``0..n-1`` (label 0 is stored as ``n``)."""
        check_rank(n)
        labels = list(labels)
        if any(not 0 <= x < n for x in labels):
            raise ValueError(f"circle labels must lie in 0..{n - 1}: {labels}")
        pos = sorted(x if x else n for x in labels)
        if len(set(pos)) != len(pos):
            raise ValueError(f"repeated particle position in {labels}")
        return cls(n, tuple(pos))

    @property
    def k(self) -> int:
        return len(self.positions)

    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(p % self.n for p in self.positions))

    def mask(self) -> int:
        m = 0
        for p in self.positions:
            m |= 1 << p
        return m

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.labels())) + ")"


def configs(n: int, k: int) -> list[Config]:
    """All k-particle configurations, sorted by circle labels."""
    return sorted(
        (Config.from_labels(n, c) for c in combinations(range(n), k)),
        key=Config.labels,
    )


def _mask_to_positions(n: int, mask: int) -> tuple[int, ...]:
    return tuple(p for p in range(1, n + 1) if mask >> p & 1)


def _act_mask(n: int, letters: tuple[int, ...], mask: int, k: int):
    """Apply letters right to left; return (sign, q exponent, mask) or None."""
    sign, qexp = 1, 0
    wrap_sign = -1 if (k - 1) % 2 else 1
    top = 1 << n
    for j in reversed(letters):
        if j:
            src, dst = 1 << j, 1 << (j + 1)
        else:
            src, dst = top, 2
            sign *= wrap_sign
            qexp += 1
        if not mask & src or mask & dst:
            return None
        mask ^= src | dst
    return sign, qexp, mask


def act_generator(j: int, c: Config) -> Optional[tuple[QPoly, Config]]:
    return act_word(Word(c.n, (j % c.n,)), c)


def act_word(w: Word, c: Config) -> Optional[tuple[QPoly, Config]]:
    if w.n != c.n:
        raise ValueError(f"rank mismatch: {w.n} != {c.n}")
    res = _act_mask(c.n, w.letters, c.mask(), c.k)
    if res is None:
        return None
    sign, qexp, mask = res
    return QPoly.monomial(sign, qexp), Config(c.n, _mask_to_positions(c.n, mask))


class FockVector:
    """Finite ``Z[q]``-combination of configurations."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = check_rank(n)
        self.terms = {c: p for c, p in (terms or {}).items() if p}

    @classmethod
    def basis(cls, c: Config) -> "FockVector":
        return cls(c.n, {c: QPoly.const(1)})

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")
        out = dict(self.terms)
        for c, p in other.terms.items():
            out[c] = out.get(c, QPoly()) + p
        return FockVector(self.n, out)

    def scale(self, p: QPoly) -> "FockVector":
        return FockVector(self.n, {c: p * v for c, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = sorted(self.terms.items(), key=lambda kv: kv[0].labels())
        return " + ".join(f"{p} · {c}" for c, p in parts)

    __repr__ = __str__


def act_element(e, v: FockVector) -> FockVector:
    if e.n != v.n:
        raise ValueError(f"rank mismatch: {e.n} != {v.n}")
    n = v.n
    out: dict[Config, QPoly] = {}
    for c, p in v.terms.items():
        mask, k = c.mask(), c.k
        for letters, coef in e.terms.items():
            res = _act_mask(n, letters, mask, k)
            if res is None:
                continue
            sign, qexp, new = res
            target = Config(n, _mask_to_positions(n, new))
            out[target] = out.get(target, QPoly()) + p * QPoly.monomial(sign * coef, qexp)
    return FockVector(n, out)


@dataclass
class RepMatrix:
    """Sparse block of the representation on k-particle configurations.

    ``entries`` maps ``(row, col)`` to a nonzero QPoly: the column is the
    input configuration, the row the output configuration.
    """

    n: int
    k: int
    entries: dict

    def __post_init__(self):
        self.entries = {rc: p for rc, p in self.entries.items() if p}

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (self.n, self.k, self.entries) == (other.n, other.k, other.entries)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("block shape mismatch")
        by_row: dict[Config, list] = {}
        for (r, c), p in other.entries.items():
            by_row.setdefault(r, []).append((c, p))
        out: dict = {}
        for (r, m), p in self.entries.items():
            for c, p2 in by_row.get(m, ()):
                out[r, c] = out.get((r, c), QPoly()) + p * p2
        return RepMatrix(self.n, self.k, out)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        out = dict(self.entries)
        for rc, p in other.entries.items():
            out[rc] = out.get(rc, QPoly()) + p
        return RepMatrix(self.n, self.k, out)

    def nonzero_count(self) -> int:
        return len(self.entries)

    def specialize(self, value) -> dict:
        """Entries evaluated at ``q = value`` (zeros dropped)."""
        out = {}
        for rc, p in self.entries.items():
            v = p.evaluate(value)
            if v:
                out[rc] = v
        return out

    def to_json(self) -> str:
        items = sorted(self.entries.items(), key=lambda kv: (kv[0][0].labels(), kv[0][1].labels()))
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "entries": [
                    {"row": list(r.labels()), "col": list(c.labels()), "poly": p.to_pairs()}
                    for (r, c), p in items
                ],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "RepMatrix":
        data = json.loads(text)
        n, k = data["n"], data["k"]
        entries = {}
        for ent in data["entries"]:
            r = Config.from_labels(n, ent["row"])
            c = Config.from_labels(n, ent["col"])
            if r.k != k or c.k != k:
                raise ValueError("entry outside the k-particle block")
            entries[r, c] = QPoly.from_pairs(ent["poly"])
        return cls(n, k, entries)


def matrix_block(e, k: int) -> RepMatrix:
    n = e.n
    if not 0 <= k <= n:
        raise ValueError(f"particle count {k} out of range 0..{n}")
    entries: dict = {}
    for col in configs(n, k):
        img = act_element(e, FockVector.basis(col))
        for row, p in img.terms.items():
            entries[row, col] = p
    return RepMatrix(n, k, entries)


def full_matrix(e) -> dict[int, RepMatrix]:
    """All nontrivial blocks ``k = 1..n-1``."""
    return {k: matrix_block(e, k) for k in range(1, e.n)}


def _generator_maps(n: int, k: int, q_value: Fraction):
    cfgs = configs(n, k)
    index = {c: i for i, c in enumerate(cfgs)}
    maps = []
    for j in range(n):
        img: dict[int, tuple[int, Fraction]] = {}
        for c in cfgs:
            res = act_word(Word(n, (j,)), c)
            if res is None:
                continue
            p, target = res
            v = p.evaluate(q_value)
            if v:
                img[index[c]] = (index[target], v)
        maps.append(img)
    return len(cfgs), maps


def endomorphism_dimension(n: int, k: int, q_value=0) -> int:
    """Dimension of the commutant of the generators on the k-particle block.

    Solves ``X A_j = A_j X`` for all generators with q specialized; each
    generator is a partial permutation with scalars, so every equation has at
    most two unknowns.
    """
    check_rank(n)
    if not 1 <= k <= n - 1:
        raise ValueError(f"particle count {k} out of range 1..{n - 1}")
    q_value = Fraction(q_value)
    size, maps = _generator_maps(n, k, q_value)
    rows = []
    for img in maps:
        pre = {t: (s, v) for s, (t, v) in img.items()}
        for r in range(size):
            for c in range(size):
                # (X A)[r, c] - (A X)[r, c]
                eq: dict[int, Fraction] = {}
                if c in img:
                    t, v = img[c]
                    eq[r * size + t] = eq.get(r * size + t, 0) + v
                if r in pre:
                    s, v = pre[r]
                    eq[s * size + c] = eq.get(s * size + c, 0) - v
                eq = {key: val for key, val in eq.items() if val}
                if eq:
                    rows.append(eq)
    return nullity(rows, size * size)
