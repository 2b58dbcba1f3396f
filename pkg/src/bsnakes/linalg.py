"""Sparse exact row-echelon elimination over the rationals.

Rows live in dicts {column: integer coefficient} and are kept primitive
(content 1, positive leading coefficient).  Columns are plain integers and
the elimination priority is the natural integer order, so callers encode
their pivot preference in the column indexing.  No back-substitution is
performed: a registered pivot row may still mention later pivot columns,
and vector reduction simply walks columns monotonically, which terminates
because a pivot row's off-pivot entries all sit at strictly later columns.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_REGULARIZE_BOUND = 1 << 63  # renormalize integer rows past this magnitude


def _normalize(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for k in row:
            row[k] //= g
    if row and row[min(row)] < 0:
        for k in row:
            row[k] = -row[k]


class SparseEchelon:
    """Incremental echelon form; one pivot row per leading column."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_row(self, row: dict[int, int]) -> bool:
        """Reduce a row against the current pivots; register it if nonzero.

        Returns True when the row increased the rank.
        """
        row = self._reduce_int(dict(row))
        if not row:
            return False
        _normalize(row)
        self.pivots[min(row)] = row
        return True

    def _reduce_int(self, row: dict[int, int]) -> dict[int, int]:
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            a = piv[c]
            b = row.pop(c)
            g = gcd(a, b)
            ma, mb = a // g, b // g
            if ma != 1:
                for k in row:
                    row[k] *= ma
            for k, v in piv.items():
                if k == c:
                    continue
                nv = row.get(k, 0) - mb * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            if row and max(map(abs, row.values())) > _REGULARIZE_BOUND:
                _normalize(row)
        return row

    def reduce_vector(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        """Eliminate every pivot column from an exact rational vector.

        The remainder is supported on non-pivot columns only; it is zero
        exactly when the input lies in the row space.
        """
        out = {k: Fraction(v) for k, v in vec.items() if v}
        while True:
            c = min((k for k in out if k in self.pivots), default=None)
            if c is None:
                return out
            piv = self.pivots[c]
            mult = out.pop(c) / piv[c]
            for k, v in piv.items():
                if k == c:
                    continue
                nv = out.get(k, 0) - mult * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)

    def contains(self, vec: dict[int, Fraction]) -> bool:
        return not self.reduce_vector(vec)


def rank_of_rows(rows) -> int:
    """Exact rank of a collection of sparse integer rows."""
    ech = SparseEchelon()
    for row in rows:
        ech.add_row(row)
    return ech.rank
