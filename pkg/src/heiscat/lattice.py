"""Integer lattices with (possibly non-symmetric) bilinear forms.

A :class:`Lattice` is ``Z^r`` together with an integer Gram matrix.  This module
also provides the Smith normal form with unimodular certificates, radicals,
the numerical quotient by the radical, the change-of-form construction, and
Euler matrices computed from tables of graded Hom dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import _linalg
from ._linalg import Matrix


class LatticeError(ValueError):
    pass


class DimensionMismatch(LatticeError):
    pass


class KernelMismatch(LatticeError):
    """Left and right radicals of a form differ."""


class NonUnimodular(LatticeError):
    pass


def _as_matrix(x: Sequence[Sequence[int]]) -> Matrix:
    return [[int(v) for v in row] for row in x]


def _freeze(x: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in x)


@dataclass(frozen=True)
class Lattice:
    """``Z^rank`` with the bilinear form ``<v, w> = v^T gram w``.

    ``gram`` is stored as a tuple of tuples so that lattices are hashable and
    can key caches.  No symmetry is assumed.
    """

    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram: Sequence[Sequence[int]]):
        g = _freeze(gram)
        if any(len(row) != len(g) for row in g):
            raise DimensionMismatch(f"Gram matrix must be square, got {[len(r) for r in g]} columns for {len(g)} rows")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Lattice":
        if isinstance(data, str):
            data = json.loads(data)
        lat = cls(data["gram"])
        if "rank" in data and int(data["rank"]) != lat.rank:
            raise DimensionMismatch(f"declared rank {data['rank']} but gram has side {lat.rank}")
        return lat

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [list(r) for r in self.gram]}

    def pair(self, v: Sequence[int], w: Sequence[int]) -> int:
        return pair(self, v, w)

    def is_degenerate(self) -> bool:
        return _linalg.det(self.gram) == 0

    def is_symmetric(self) -> bool:
        return all(self.gram[i][j] == self.gram[j][i] for i in range(self.rank) for j in range(i))


def pair(lattice: Lattice, v: Sequence[int], w: Sequence[int]) -> int:
    """Evaluate ``v^T gram w``."""
    if len(v) != lattice.rank or len(w) != lattice.rank:
        raise DimensionMismatch(f"vectors of length {len(v)}, {len(w)} on a rank {lattice.rank} lattice")
    return sum(v[i] * g * w[j] for i, row in enumerate(lattice.gram) for j, g in enumerate(row))


# --------------------------------------------------------------------------
# Smith normal form
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`: ``left @ matrix @ right == diagonal``."""

    left: Matrix
    diagonal: Matrix
    right: Matrix

    def __iter__(self):
        return iter((self.left, self.diagonal, self.right))

    @property
    def invariants(self) -> list[int]:
        return [self.diagonal[i][i] for i in range(min(len(self.diagonal), len(self.diagonal[0]) if self.diagonal else 0))]


def _pick_pivot(a: Matrix, t: int):
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            x = a[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def smith_normal_form(x: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form ``S X T = D`` with ``S``, ``T`` unimodular.

    Pivots are the entries of least absolute value, ties broken by first
    position in row-major order, so certificates are reproducible.  The
    diagonal is nonnegative with ``d_1 | d_2 | ...`` and zeros last.
    """
    a = _as_matrix(x)
    m = len(a)
    n = len(a[0]) if m else 0
    s = _linalg.identity(m)
    t_ = _linalg.identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t_:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        a[dst] = [u + c * v for u, v in zip(a[dst], a[src])]
        s[dst] = [u + c * v for u, v in zip(s[dst], s[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in t_:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            best = _pick_pivot(a, t)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            s[t] = [-v for v in s[t]]
    return SmithForm(s, a, t_)


def is_unimodular(u: Sequence[Sequence[int]]) -> bool:
    return _linalg.is_square(u) and abs(_linalg.det(u)) == 1


# --------------------------------------------------------------------------
# Radicals and the numerical quotient
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Radical:
    left: Matrix
    """Rows ``u`` with ``u^T X = 0`` (saturated integer basis)."""
    right: Matrix
    """Rows ``v`` with ``X v = 0`` (saturated integer basis)."""
    agree: bool

    def __iter__(self):
        return iter((self.left, self.right))


def radical(x: Sequence[Sequence[int]]) -> Radical:
    """Left and right kernels of ``x`` and whether they span the same space.

    Bases come from the Smith certificate: the rows of ``S`` and the columns
    of ``T`` facing zero invariants, hence primitive.
    """
    s, d, t = smith_normal_form(x)
    size = len(d)
    zero = [i for i in range(size) if d[i][i] == 0]
    left = [list(s[i]) for i in zero]
    right = [[t[r][i] for r in range(size)] for i in zero]
    return Radical(left, right, _linalg.same_span(left, right))


@dataclass(frozen=True)
class NumericalQuotient:
    lattice: Lattice
    projection: Matrix
    """``lattice.rank x original.rank`` integer matrix, kernel = radical."""


def numerical_quotient(lattice: Lattice) -> NumericalQuotient:
    """Quotient of ``lattice`` by the radical of its form.

    The pairing descends: ``<v, w> == <P v, P w>'`` for the returned
    projection ``P``.
    """
    x = [list(r) for r in lattice.gram]
    rad = radical(x)
    if not rad.agree:
        raise KernelMismatch(f"left kernel {rad.left} and right kernel {rad.right} differ")
    r = lattice.rank
    if not rad.right:
        return NumericalQuotient(lattice, _linalg.identity(r))
    s, d, t = smith_normal_form(x)
    keep = [i for i in range(r) if d[i][i] != 0]
    # T is unimodular, so T^-1 is integral; its rows split Z^r along the radical.
    t_inv = _integer_inverse(t)
    projection = [t_inv[i] for i in keep]
    lifts = [[t[row][i] for row in range(r)] for i in keep]
    gram = _linalg.matmul(_linalg.matmul(lifts, x), _linalg.transpose(lifts))
    return NumericalQuotient(Lattice(gram), projection)


def _integer_inverse(u: Sequence[Sequence[int]]) -> Matrix:
    # for unimodular u: S u T = I gives u^-1 = T S
    s, d, t = smith_normal_form(u)
    if any(d[i][i] != 1 for i in range(len(d))):
        raise NonUnimodular("matrix is not invertible over Z")
    return _linalg.matmul(t, s)


# --------------------------------------------------------------------------
# Change of form
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorMap:
    """Substitution ``q_{e_a} -> q_{q_images[a]}``, ``p_{e_b} -> p_{p_images[b]}``.

    It maps generators of the Heisenberg algebra of ``source`` (the changed
    form ``S X T``) to vector-indexed generators over ``target`` (the
    original form ``X``), and is an isomorphism of algebras.
    """

    source: Lattice
    target: Lattice
    q_images: tuple[tuple[int, ...], ...]
    p_images: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "source_gram": [list(r) for r in self.source.gram],
            "target_gram": [list(r) for r in self.target.gram],
            "q": [list(v) for v in self.q_images],
            "p": [list(v) for v in self.p_images],
        }


def change_of_form(lattice: Lattice, left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> GeneratorMap:
    """Lattice with Gram ``S X T`` and the generator map back to ``lattice``.

    ``<S^T a, T b>_X == <a, b>_{SXT}``, which is exactly what makes
    ``q_a -> q_{S^T a}``, ``p_b -> p_{T b}`` respect the commutation relation.
    """
    r = lattice.rank
    for name, u in (("S", left), ("T", right)):
        if len(u) != r or not _linalg.is_square(u):
            raise DimensionMismatch(f"{name} must be {r}x{r}")
        if not is_unimodular(u):
            raise NonUnimodular(f"{name} has determinant {_linalg.det(u)}")
    s, t = _as_matrix(left), _as_matrix(right)
    gram = _linalg.matmul(_linalg.matmul(s, [list(row) for row in lattice.gram]), t)
    # S^T e_a is the a-th row of S; T e_b is the b-th column of T
    q_images = tuple(tuple(s[a]) for a in range(r))
    p_images = tuple(tuple(t[row][b] for row in range(r)) for b in range(r))
    return GeneratorMap(Lattice(gram), lattice, q_images, p_images)


def diagonalizing_map(lattice: Lattice) -> GeneratorMap:
    """Change of form by the Smith certificate: the source form is diagonal."""
    s, _, t = smith_normal_form([list(r) for r in lattice.gram])
    return change_of_form(lattice, s, t)


# --------------------------------------------------------------------------
# Euler matrices from Ext tables
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtTable:
    """Graded Hom dimensions ``hom[(a, b)][n] = dim Hom^n(a, b)``.

    Degrees may be negative.  Every ordered pair of objects must be present.
    """

    objects: tuple[str, ...]
    hom: Mapping[tuple[str, str], Mapping[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        objs = tuple(self.objects)
        object.__setattr__(self, "objects", objs)
        missing = [(a, b) for a in objs for b in objs if (a, b) not in self.hom]
        if missing:
            raise LatticeError(f"Ext table is missing pairs {missing}")
        for key, dims in self.hom.items():
            if any(d < 0 for d in dims.values()):
                raise LatticeError(f"negative dimension in Hom{key}")

    @classmethod
    def from_json(cls, data: Mapping | str) -> "ExtTable":
        if isinstance(data, str):
            data = json.loads(data)
        objects = [str(o) for o in data.get("objects", [])]
        hom = {}
        for key, dims in data.get("hom", {}).items():
            a, b = (part.strip() for part in key.split(","))
            hom[(a, b)] = {int(deg): int(dim) for deg, dim in dims.items()}
        return cls(tuple(objects), hom)


def euler_matrix(table: ExtTable) -> Matrix:
    """``X[a][b] = sum_n (-1)^n dim Hom^n(a, b)``."""
    return [
        [sum((-1) ** (n % 2) * d for n, d in table.hom[(a, b)].items()) for b in table.objects]
        for a in table.objects
    ]
