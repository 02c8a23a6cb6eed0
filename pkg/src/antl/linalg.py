"""Exact sparse row reduction over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

__all__ = ["SparseEchelon", "rank", "nullity"]


class SparseEchelon:
    """Incrementally built row echelon form.

    Columns may be any sortable hashables.  Each stored row is scaled so its
    leading (smallest) column has coefficient 1.
    """

    def __init__(self):
        self.pivots: dict[Hashable, dict[Hashable, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping) -> bool:
        """Insert a row; return True if it was independent of the previous ones."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                lead = row[c]
                self.pivots[c] = {c2: v2 / lead for c2, v2 in row.items()}
                return True
            v = row[c]
            for c2, v2 in piv.items():
                nv = row.get(c2, 0) - v * v2
                if nv:
                    row[c2] = nv
                else:
                    row.pop(c2, None)
        return False


def rank(rows: Iterable[Mapping]) -> int:
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def nullity(rows: Iterable[Mapping], nvars: int) -> int:
    return nvars - rank(rows)
