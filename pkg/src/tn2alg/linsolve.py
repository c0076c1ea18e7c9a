"""
Deterministic exact sparse linear algebra over the rationals.

Rows enter as sparse mappings with integer or Fraction coefficients and are
stored as primitive integer rows (content stripped, leading entry positive).
Elimination keeps a monic pivot row per column: reducing a row subtracts
rational multiples of pivot rows, so every step is exact and coefficient
growth is tamed by Fraction normalization instead of fraction-free
cross-multiplication (whose intermediate integers explode on long
elimination cascades like the ones the derivation systems produce).

Determinism: rows are consumed in insertion order, the leading column of a
row is always the smallest one, and the pivot row for a column is the first
inserted row that leads in that column after reduction.  Identical inputs
therefore produce bit-identical echelon forms and nullspace bases.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

_ONE = Fraction(1)


def _normalize_int_row(row: dict) -> dict:
    """Divide by the content and make the leading entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        for c in list(row):
            row[c] //= g
    return row


def make_int_row(coeffs: dict) -> dict:
    """Clear denominators and strip content; returns {} for the zero row."""
    row = {}
    lcm = 1
    for col, val in coeffs.items():
        if val == 0:
            continue
        val = Fraction(val)
        row[col] = val
        d = val.denominator
        lcm = lcm // gcd(lcm, d) * d
    out = {}
    for col, val in row.items():
        out[col] = int(val * lcm)
    return _normalize_int_row(out)


def _insert_row(row: dict, pivots: dict) -> bool:
    """Reduce a row against the monic pivots; adopt it if independent.

    `row` maps columns to nonzero Fractions (ints allowed; they mix fine).
    Returns True when the row contributed a new pivot.
    """
    while row:
        lead = min(row)
        piv = pivots.get(lead)
        a = row.pop(lead)
        if piv is None:
            monic = {lead: _ONE}
            for c, v in row.items():
                monic[c] = Fraction(v) / a
            pivots[lead] = monic
            return True
        for c, coeff in piv.items():
            if c == lead:
                continue
            cur = row.get(c)
            if cur is None:
                row[c] = -a * coeff
            else:
                cur = cur - a * coeff
                if cur == 0:
                    del row[c]
                else:
                    row[c] = cur
    return False


class SparseLinearSystem:
    """A homogeneous system: rows of integer coefficients over ordered unknowns."""

    def __init__(self, num_cols: int):
        self.num_cols = num_cols
        self.rows = []
        self._pivots = None

    def add_row(self, coeffs: dict) -> bool:
        """Add one equation; identically-zero rows are dropped (returns False)."""
        row = make_int_row(coeffs)
        if not row:
            return False
        if max(row) >= self.num_cols or min(row) < 0:
            raise ValueError("row references undeclared unknowns")
        self.rows.append(row)
        self._pivots = None
        return True

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    # -- elimination ----------------------------------------------------

    def echelon(self) -> dict:
        """Pivot-column -> monic reduced row, computed once and cached.

        Rows are processed shortest-first (stable on insertion order), which
        lets the many single-entry boundary rows kill their columns before
        longer rows cascade through them.  The pivot-column set of an
        echelon form depends only on the matrix, so this reordering does not
        change the nullspace basis.
        """
        if self._pivots is None:
            pivots = {}
            for row in sorted(self.rows, key=len):
                _insert_row(dict(row), pivots)
            self._pivots = pivots
        return self._pivots

    def rank(self) -> int:
        return len(self.echelon())

    def free_columns(self) -> list:
        pivots = self.echelon()
        return [c for c in range(self.num_cols) if c not in pivots]

    def nullspace(self) -> list:
        """Canonical nullspace basis, one sparse Fraction dict per free column.

        Basis vector k has value 1 at the k-th free column and 0 at every
        other free column (the reduced-echelon convention), so the output is
        unique given the unknown ordering.
        """
        pivots = self.echelon()
        pivot_cols = sorted(pivots, reverse=True)
        basis = []
        for free in self.free_columns():
            v = {free: _ONE}
            for p in pivot_cols:
                if p > free:
                    continue
                row = pivots[p]
                s = 0
                for c, coeff in row.items():
                    if c != p:
                        vc = v.get(c)
                        if vc is not None:
                            s += coeff * vc
                if s != 0:
                    v[p] = -s
            basis.append(v)
        return basis

    # -- checks ----------------------------------------------------------

    def residual(self, row: dict, v: dict):
        s = 0
        if len(row) <= len(v):
            for c, coeff in row.items():
                vc = v.get(c)
                if vc is not None:
                    s += coeff * vc
        else:
            for c, vc in v.items():
                coeff = row.get(c)
                if coeff is not None:
                    s += coeff * vc
        return s

    def is_solution(self, v: dict) -> bool:
        """Exact nullspace membership, tested against the echelon form.

        Row operations preserve the solution set, so this is equivalent to
        checking every original row; see `residual_rows` for the literal
        row-by-row version used by the slow checks in the test suite.
        """
        for row in self.echelon().values():
            if self.residual(row, v) != 0:
                return False
        return True

    def residual_rows(self, v: dict) -> list:
        """Indices of original rows with nonzero residual against v."""
        return [k for k, row in enumerate(self.rows) if self.residual(row, v) != 0]


def rank_of_vectors(vectors, restrict_to=None) -> int:
    """Rank of a family of sparse vectors (dicts), optionally restricted.

    `restrict_to`, when given, is a set of coordinates; entries outside it
    are dropped before ranking (used for the sub-window span comparisons).
    """
    pivots = {}
    count = 0
    for vec in vectors:
        if restrict_to is not None:
            vec = {c: x for c, x in vec.items() if c in restrict_to}
        if _insert_row(make_int_row(vec), pivots):
            count += 1
    return count
