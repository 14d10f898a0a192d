"""Exact linear algebra over a field: sparse incremental row reduction and a
dense Gauss-Jordan solver for any field-like element type."""

from __future__ import annotations


def _axpy(acc: dict, c, vec: dict):
    for k, v in vec.items():
        x = acc.get(k, 0) + c * v
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


class SparseBasis:
    """Reduced row echelon basis of a growing span of sparse vectors.

    Vectors are dicts ``key -> scalar``. Every stored row keeps the
    combination of inserted vectors that produced it, so basis rows can be
    mapped back to the objects they came from.
    """

    def __init__(self, sort_key=None):
        self.rows: dict = {}  # pivot key -> (row vector, combination)
        self.sort_key = sort_key or (lambda k: k)
        self.count = 0

    def reduce(self, vec: dict):
        vec = dict(vec)
        combo: dict = {}
        for piv in [k for k in vec if k in self.rows]:
            c = vec.get(piv)
            if not c:
                continue
            row, rcombo = self.rows[piv]
            _axpy(vec, -c, row)
            _axpy(combo, -c, rcombo)
        return vec, combo

    def add(self, vec: dict) -> bool:
        """Insert a vector; return True when it enlarged the span."""
        idx = self.count
        self.count += 1
        rest, combo = self.reduce(vec)
        if not rest:
            return False
        combo[idx] = combo.get(idx, 0) + 1
        piv = min(rest, key=self.sort_key)
        inv = 1 / rest[piv]
        rest = {k: v * inv for k, v in rest.items()}
        combo = {k: v * inv for k, v in combo.items() if v}
        for key, (row, rcombo) in list(self.rows.items()):
            c = row.get(piv)
            if c:
                row, rcombo = dict(row), dict(rcombo)
                _axpy(row, -c, rest)
                _axpy(rcombo, -c, combo)
                self.rows[key] = (row, rcombo)
        self.rows[piv] = (rest, combo)
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def express(self, vec: dict):
        """Combination of inserted vectors equal to ``vec``, or None."""
        rest, combo = self.reduce(vec)
        if rest:
            return None
        return {k: -v for k, v in combo.items() if v}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self):
        """(pivot, row, combination) triples sorted by pivot."""
        return [(k, *self.rows[k]) for k in sorted(self.rows, key=self.sort_key)]


def rank(vectors, sort_key=None) -> int:
    b = SparseBasis(sort_key)
    for v in vectors:
        b.add(v)
    return b.rank


def solve(matrix, rhs_columns, is_zero=lambda x: not x):
    """Solve ``matrix @ X = rhs`` exactly by Gauss-Jordan elimination.

    ``matrix`` is a square list of rows and ``rhs_columns`` a list of rows of
    the right-hand side (same row count). Entries need ``+ - * /``.
    Raises ``ZeroDivisionError`` when the matrix is singular.
    """
    n = len(matrix)
    aug = [list(matrix[i]) + list(rhs_columns[i]) for i in range(n)]
    width = len(aug[0]) if n else 0
    for col in range(n):
        piv = next((r for r in range(col, n) if not is_zero(aug[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if is_zero(f):
                continue
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:width] for row in aug]
