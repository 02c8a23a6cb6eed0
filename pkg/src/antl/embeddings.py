"""The embeddings ``eps_m`` from rank n into rank n+1.

``eps_m`` fixes ``a_i`` for ``i < m``, sends ``a_m`` to ``a_{m+1} a_m`` and
shifts ``a_i`` to ``a_{i+1}`` for ``i > m``.  On particle configurations this
inserts an unused site after ``m``.
"""

from __future__ import annotations

from .center import BasisLabel
from .element import Element
from .words import Word, check_rank

__all__ = [
    "embed_letter",
    "embed_word",
    "embed_element",
    "shift_label",
    "relation_images",
]


def _check_m(m: int, n: int) -> None:
    check_rank(n)
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must lie in 0..{n - 1}, got {m}")


def embed_letter(m: int, i: int) -> tuple[int, ...]:
    if i < m:
        return (i,)
    if i == m:
        return (m + 1, m)
    return (i + 1,)


def embed_word(m: int, w: Word) -> Word:
    """Raw letterwise image; no canonicalization."""
    _check_m(m, w.n)
    return Word(w.n + 1, tuple(x for i in w.letters for x in embed_letter(m, i)))


def embed_element(m: int, e: Element) -> Element:
    _check_m(m, e.n)
    return Element.from_terms(
        e.n + 1, ((embed_word(m, Word(e.n, w)).letters, c) for w, c in e.terms.items())
    )


def shift_label(m: int, label: BasisLabel) -> BasisLabel:
    """Relabel sites for rank n+1: sites up to m stay, later ones move up by one."""
    up = lambda s: tuple(p if p <= m else p + 1 for p in s)
    return BasisLabel(label.k, label.ell, up(label.i_out), up(label.i_in))


def relation_images(m: int, n: int) -> dict[str, Word]:
    """Images of the relations involving ``a_m``, written in rank n+1 letters.

    Each word must vanish in rank n+1 for ``eps_m`` to be well defined.
    """
    _check_m(m, n)
    big = n + 1
    pair = (m + 1, m)
    after, before = (m + 2) % big, (m - 1) % big
    words = {
        "square": pair + pair,
        "braid_after": (after,) + pair + (after,),
        "braid_before": (before,) + pair + (before,),
        "pair_after_pair": pair + (after,) + pair,
        "pair_before_pair": pair + (before,) + pair,
    }
    return {name: Word(big, letters) for name, letters in words.items()}
