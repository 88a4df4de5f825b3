"""Sparse exact linear algebra over a field (Q(q) or Q).

Vectors are dicts mapping a hashable column key to a nonzero field element.
The workhorse is Echelon, an incremental row-echelon store: feed vectors,
read off rank, reduce further vectors against the span, and extract
representations.  Everything is exact; no pivot thresholds.
"""

from __future__ import annotations


class Echelon:
    """Incremental echelon form over an exact field.

    Pivot columns are chosen greedily per inserted vector (preferring, among
    the surviving entries, a fixed column order when one is supplied).
    Stored rows are normalised to pivot coefficient 1.
    """

    def __init__(self, field, column_order=None):
        self.field = field
        self.rows = {}          # pivot col -> row dict (pivot coeff 1)
        self.order = column_order  # optional: col -> sortable rank

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Remainder of vec modulo the current row space (fresh dict)."""
        v = dict(vec)
        rows = self.rows
        zero = self.field.is_zero
        # iterate until no pivot col of v is in rows
        while True:
            hit = None
            for col in v:
                if col in rows:
                    hit = col
                    break
            if hit is None:
                return v
            c = v.pop(hit)
            for col2, c2 in rows[hit].items():
                if col2 == hit:
                    continue
                acc = v.get(col2)
                acc = -c * c2 if acc is None else acc - c * c2
                if zero(acc):
                    v.pop(col2, None)
                else:
                    v[col2] = acc

    def add(self, vec):
        """Insert vec; returns the new pivot column or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        if self.order is not None:
            piv = min(r, key=self.order)
        else:
            piv = min(r, key=_generic_key)
        c = r[piv]
        row = {col: v / c for col, v in r.items()}
        self.rows[piv] = row
        return piv

    def contains(self, vec):
        return not self.reduce(vec)

    def coordinates(self, vec):
        """Write vec over the inserted echelon rows; None if outside the span.

        Returns {pivot col: coefficient} such that vec = sum coeff * row.
        """
        v = dict(vec)
        rows = self.rows
        zero = self.field.is_zero
        out = {}
        while True:
            hit = None
            for col in v:
                if col in rows:
                    hit = col
                    break
            if hit is None:
                break
            c = v.pop(hit)
            out[hit] = c
            for col2, c2 in rows[hit].items():
                if col2 == hit:
                    continue
                acc = v.get(col2)
                acc = -c * c2 if acc is None else acc - c * c2
                if zero(acc):
                    v.pop(col2, None)
                else:
                    v[col2] = acc
        if v:
            return None
        return out


def _generic_key(col):
    return (repr(type(col)), repr(col))


def rank(field, vectors):
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(field, rows, columns):
    """Kernel basis of the linear map with the given equation rows.

    rows: iterable of dicts {column key: coeff}, one equation each;
    columns: the full ordered list of unknown columns.  Returns a list of
    dicts over the columns spanning the solution space.
    """
    # eliminate: build echelon of the row space with pivots in column order
    col_rank = {c: i for i, c in enumerate(columns)}
    ech = Echelon(field, column_order=lambda c: col_rank[c])
    for r in rows:
        if r:
            ech.add(r)
    pivots = set(ech.rows)
    free = [c for c in columns if c not in pivots]
    basis = []
    for fc in free:
        # back-substitute: x_fc = 1, solve pivot entries
        vec = {fc: field.one}
        # process pivots in reverse column order for triangular solve
        for pc in sorted(pivots, key=lambda c: -col_rank[c]):
            row = ech.rows[pc]
            s = field.zero
            for col, c in row.items():
                if col == pc:
                    continue
                if col in vec:
                    s = s + c * vec[col]
            if not field.is_zero(s):
                vec[pc] = -s
        basis.append(vec)
    return basis


def determinant(field, matrix):
    """Exact determinant of a dense square matrix (list of row lists)."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    det = field.one
    for j in range(n):
        piv = None
        for i in range(j, n):
            if not field.is_zero(m[i][j]):
                piv = i
                break
        if piv is None:
            return field.zero
        if piv != j:
            m[j], m[piv] = m[piv], m[j]
            det = -det
        det = det * m[j][j]
        inv = m[j][j]
        for i in range(j + 1, n):
            if field.is_zero(m[i][j]):
                continue
            f = m[i][j] / inv
            for k in range(j, n):
                m[i][k] = m[i][k] - f * m[j][k]
    return det
