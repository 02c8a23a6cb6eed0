"""Desk-scale property suites shared by the ``verify`` command and the tests."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .center import (
    central_generator,
    e_word,
    enumerate_basis,
    factorize,
    projector_monomial,
)
from .element import Element, is_central
from .embeddings import embed_element, embed_word, relation_images, shift_label
from .fock import act_word, configs
from .linalg import SparseEchelon
from .normal_form import Zero, canonical_letters, normalize, psi, reconstruct
from .words import Word, check_rank, is_nonzero

__all__ = [
    "CheckResult",
    "SUITES",
    "max_len",
    "monomials",
    "full_action_vector",
    "run_suite",
]

DEFAULT_MAX_LEN = 8


def max_len() -> int:
    raw = os.environ.get("ANTL_MAX_LEN", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_LEN
    except ValueError:
        raise ValueError(f"ANTL_MAX_LEN must be an integer, got {raw!r}") from None


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{tag} {self.suite}: {self.name}{extra}"


def monomials(n: int, length: int) -> list[tuple[int, ...]]:
    """Canonical letter tuples of all nonzero monomials of length at most ``length``."""
    check_rank(n)
    seen = {()}
    out = [()]
    frontier = [()]
    for _ in range(length):
        nxt = []
        for w in frontier:
            for g in range(n):
                key = canonical_letters(n, (g,) + w)
                if key is not None and key not in seen:
                    seen.add(key)
                    nxt.append(key)
        out += nxt
        frontier = nxt
    return out


def full_action_vector(n: int, letters: tuple[int, ...]) -> dict:
    """Sparse flattening of all blocks k=1..n-1 of a monomial's action."""
    vec = {}
    for k in range(1, n):
        for c in configs(n, k):
            res = act_word(Word(n, letters), c)
            if res is None:
                continue
            poly, out = res
            for exp, coef in poly.items():
                vec[k, out.positions, c.positions, exp] = coef
    return vec


def _relations(n: int, L: int) -> list[CheckResult]:
    res = []
    rel_words = []
    for i in range(n):
        rel_words.append((i, i))
        rel_words.append((i, (i + 1) % n, i))
        rel_words.append((i, (i - 1) % n, i))
    zero_alg = all(isinstance(normalize(Word(n, w)), Zero) for w in rel_words)
    res.append(CheckResult("relations", "nilpotent and braid words vanish", zero_alg))
    zero_rep = all(
        act_word(Word(n, w), c) is None
        for w in rel_words
        for k in range(n + 1)
        for c in configs(n, k)
    )
    res.append(CheckResult("relations", "relation words act by zero", zero_rep))
    commute = True
    for i, j in combinations(range(n), 2):
        if (j - i) % n in (1, n - 1):
            continue
        for k in range(n + 1):
            for c in configs(n, k):
                if act_word(Word(n, (i, j)), c) != act_word(Word(n, (j, i)), c):
                    commute = False
    res.append(CheckResult("relations", "distant generators commute on configurations", commute))
    return res


def _center(n: int, L: int) -> list[CheckResult]:
    ts = [central_generator(k, n) for k in range(1, n)]
    res = [CheckResult("center", "t_k central", all(is_central(t) for t in ts))]
    ortho = all((a * b).is_zero() for a, b in combinations(ts, 2))
    res.append(CheckResult("center", "t_k t_l = 0 for k != l", ortho))
    powers = all(not (t**m).is_zero() for t in ts for m in range(1, 4))
    res.append(CheckResult("center", "t_k^m nonzero for m <= 3", powers))
    action = True
    for k in range(1, n):
        for I in combinations(range(n), k):
            w = projector_monomial(I, n)
            for kk in range(n + 1):
                for c in configs(n, kk):
                    got = act_word(w, c)
                    if c.labels() == I:
                        sign = (-1) ** (k - 1)
                        ok = got is not None and got[1] == c and dict(got[0].items()) == {1: sign}
                    else:
                        ok = got is None
                    action = action and ok
    res.append(CheckResult("center", "projector monomials select one configuration", action))
    return res


def _faithfulness(n: int, L: int) -> list[CheckResult]:
    monos = monomials(n, L)
    ech = SparseEchelon()
    indep = all(ech.add(full_action_vector(n, m)) for m in monos)
    return [
        CheckResult(
            "faithfulness",
            f"actions of canonical monomials up to length {L} independent",
            indep,
            f"{len(monos)} monomials",
        )
    ]


def _psi(n: int, L: int) -> list[CheckResult]:
    monos = [m for m in monomials(n, L) if m]
    keys = {}
    injective = True
    roundtrip = True
    for m in monos:
        nf = normalize(Word(n, m))
        key = psi(nf)
        if key in keys and keys[key] != m:
            injective = False
        keys[key] = m
        roundtrip = roundtrip and reconstruct(key, n) == nf
    return [
        CheckResult("psi", "psi injective on normal forms", injective, f"{len(monos)} monomials"),
        CheckResult("psi", "reconstruct inverts psi", roundtrip),
    ]


def _basis(n: int, L: int) -> list[CheckResult]:
    basis = enumerate_basis(n, 1)
    inverse = all(factorize(w) == lab for lab, w in basis)
    distinct = len({w.letters for _, w in basis}) == len(basis)
    ident = all(e_word(I, I, n) == projector_monomial(I, n)
                for k in range(1, n) for I in combinations(range(n), k))
    return [
        CheckResult("basis", "factorize inverts enumerate_basis", inverse, f"{len(basis)} labels"),
        CheckResult("basis", "basis words pairwise distinct", distinct),
        CheckResult("basis", "e_II equals the projector monomial", ident),
    ]


def _embeddings(n: int, L: int) -> list[CheckResult]:
    rng = random.Random(n)
    vanish = all(
        not is_nonzero(w) for m in range(n) for w in relation_images(m, n).values()
    )
    monos = monomials(n, min(L, 5))
    hom = True
    for m in range(n):
        for _ in range(30):
            x = Element(n, {rng.choice(monos): 1, rng.choice(monos): 2})
            y = Element(n, {rng.choice(monos): -1, rng.choice(monos): 1})
            hom = hom and embed_element(m, x * y) == embed_element(m, x) * embed_element(m, y)
    shifted = all(
        factorize(embed_word(m, w)) == shift_label(m, lab)
        for m in range(n)
        for lab, w in enumerate_basis(n, 1)
    )
    return [
        CheckResult("embeddings", "relation images vanish", vanish),
        CheckResult("embeddings", "embedding is multiplicative", hom),
        CheckResult("embeddings", "basis words map to shifted basis words", shifted),
    ]


SUITES: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "relations": _relations,
    "center": _center,
    "faithfulness": _faithfulness,
    "psi": _psi,
    "basis": _basis,
    "embeddings": _embeddings,
}


def run_suite(name: str, n: int, length: int | None = None) -> list[CheckResult]:
    check_rank(n)
    length = max_len() if length is None else length
    names = list(SUITES) if name == "all" else [name]
    out = []
    for s in names:
        out += SUITES[s](n, length)
    return out
