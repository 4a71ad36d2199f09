"""Small exact linear algebra helpers over the integers and rationals.

Matrices are lists of lists of ``int`` or ``Fraction``; nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("inner dimensions do not match")
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(rows: Iterable[Sequence]) -> int:
    """Rank over Q of a matrix given as rows."""
    return len(_EchelonBasis.from_rows(rows).pivots)


def is_square(a: Sequence[Sequence]) -> bool:
    return all(len(row) == len(a) for row in a)


class _EchelonBasis:
    """Incrementally maintained reduced echelon basis of sparse rational vectors.

    Vectors are dicts ``column -> Fraction``.  Used for exact ranks of large
    sparse matrices (the Fock action matrices) where dense elimination would be
    wasteful.
    """

    def __init__(self) -> None:
        self.pivots: dict = {}

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "_EchelonBasis":
        basis = cls()
        for row in rows:
            basis.add({j: Fraction(x) for j, x in enumerate(row) if x})
        return basis

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        # pivots are processed in insertion order; each stored row has zeros
        # at all pivots inserted before it, but not necessarily after
        for col, row in self.pivots.items():
            c = vec.get(col)
            if c:
                for j, x in row.items():
                    y = vec.get(j, 0) - c * x
                    if y:
                        vec[j] = y
                    else:
                        vec.pop(j, None)
        return vec

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when it was independent of the basis."""
        vec = self.reduce(vec)
        if not vec:
            return False
        col = min(vec)
        lead = vec[col]
        row = {j: Fraction(x) / lead for j, x in vec.items()}
        self.pivots[col] = row
        return True


def sparse_rank(vectors: Iterable[dict]) -> int:
    """Rank over Q of a family of sparse vectors (dicts with hashable, orderable keys)."""
    basis = _EchelonBasis()
    return sum(basis.add(v) for v in vectors)


def rational_nullspace(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel ``{v : a v = 0}`` over Q."""
    if not a:
        return []
    cols = len(a[0])
    m = [[Fraction(x) for x in row] for row in a]
    pivot_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    """Whether two families of vectors span the same subspace over Q."""
    ru, rv = rank(u), rank(v)
    return ru == rv == rank(list(u) + list(v))
