"""The Fock space representation.

The Fock space is the quotient of the algebra by the left ideal generated by
the annihilators, which identifies it with the polynomial ring in commuting
creation symbols ``P(i, m)`` (basis index ``i``, level ``m``).  A basis monomial
of degree ``n`` is a multiset of ``(i, m)`` with levels summing to ``n``.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import _linalg
from .heisenberg import AlgebraElement, Word, mul, normal_word, s_binom
from .lattice import Lattice, LatticeError

Monomial = tuple[tuple[int, int], ...]
"""Sorted tuple of ``(basis_index, level)`` factors."""


class DegenerateForm(LatticeError):
    pass


def degree(mono: Monomial) -> int:
    return sum(m for _, m in mono)


class FockVector(Mapping):
    """Immutable finite map ``Monomial -> Fraction`` with no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(sorted(tuple(f) for f in mono))
            c = Fraction(c)
            if c:
                s = acc.get(mono, 0) + c
                if s:
                    acc[mono] = s
                else:
                    del acc[mono]
        self._terms = acc

    def __getitem__(self, mono):
        return self._terms[mono]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, FockVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, c) -> "FockVector":
        c = Fraction(c)
        return FockVector({m: c * x for m, x in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def homogeneous(self, n: int) -> "FockVector":
        return FockVector({m: c for m, c in self._terms.items() if degree(m) == n})

    def degrees(self) -> set[int]:
        return {degree(m) for m in self._terms}

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda t: (degree(t[0]), t[0])):
            ms = "*".join(f"P({i + 1},{m})" for i, m in mono) or "vac"
            parts.append(ms if c == 1 else f"{c}*{ms}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockVector({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c.numerator if c.denominator == 1 else str(c), "monomial": [list(f) for f in mono]}
            for mono, c in sorted(self._terms.items(), key=lambda t: (degree(t[0]), t[0]))
        ]

    @classmethod
    def from_json(cls, rows: Sequence[Mapping]) -> "FockVector":
        return cls((tuple(tuple(f) for f in r["monomial"]), Fraction(r["coeff"])) for r in rows)


def vacuum() -> FockVector:
    return FockVector({(): 1})


def monomial(*factors: tuple[int, int]) -> FockVector:
    return FockVector({tuple(sorted(factors)): 1})


def act(x: AlgebraElement, v: FockVector, lattice: Lattice) -> FockVector:
    """Action of ``x`` on ``v``.

    Each monomial is lifted to its creation word ending in ``1_0``; after
    multiplying by ``x`` and normal ordering, terms with a surviving
    annihilator lie in the left ideal and are dropped.
    """
    acc: list = []
    for mono, c in v.items():
        lifted = AlgebraElement.word(normal_word(mono, (), 0))
        for w, c2 in mul(x, lifted, lattice).items():
            if w.weight == 0 and not w.q_part:
                acc.append((w.p_part, c * c2))
    return FockVector(acc)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` as nonincreasing tuples, in reverse lexicographic order."""
    if n < 0:
        return ()
    return _partitions(n, n)


def basis(n: int, rank: int) -> list[Monomial]:
    """All degree-``n`` monomials in the creation symbols ``P(i, m)``, ``i < rank``.

    Ordered by the sorted factor tuple, so the result is deterministic.
    """
    if n < 0:
        return []
    symbols = [(i, m) for i in range(rank) for m in range(1, n + 1)]
    out: list[Monomial] = []

    def extend(start: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(start, len(symbols)):
            i, m = symbols[k]
            if m <= remaining:
                acc.append((i, m))
                extend(k, remaining - m, acc)
                acc.pop()

    extend(0, n, [])
    return sorted(out)


def graded_dim(n: int, rank: int) -> int:
    """Coefficient of ``t^n`` in ``prod_{m >= 1} (1 - t^m)^(-rank)``.

    Factors with ``m > n`` cannot reach ``t^n`` and are left out.
    """
    if n < 0:
        return 0
    series = [1] + [0] * n
    for m in range(1, n + 1):
        for _ in range(rank):
            # multiply by 1/(1 - t^m) in place
            for k in range(m, n + 1):
                series[k] += series[k - m]
    return series[n]


def multiplicities(lam: Sequence[int]) -> tuple[int, ...]:
    """``(k_1, k_2, ...)`` where ``k_m`` counts the parts of ``lam`` equal to ``m``."""
    top = max(lam, default=0)
    return tuple(list(lam).count(m) for m in range(1, top + 1))


def partition_sum_dim(n: int, rank: int) -> int:
    """``sum_{lambda |- n} prod_m s^{k_m}(rank)`` with ``k_m`` the multiplicity of ``m`` in ``lambda``.

    Writing a partition by its multiplicities, ``(1^{k_1} 2^{k_2} ...)``, the
    factor for part size ``m`` is the dimension of ``Sym^{k_m}`` of the
    ``rank``-dimensional space of level-``m`` creation operators.  This is the
    reading that agrees with the generating function in :func:`graded_dim`.
    """
    total = 0
    for lam in partitions(n):
        term = 1
        for k in multiplicities(lam):
            term *= s_binom(k, rank)
        total += term
    return total


def partition_parts_dim(n: int, rank: int) -> int:
    """``sum_{lambda |- n} prod_j s^{lambda_j}(rank)`` over the parts ``lambda_j``.

    Agrees with :func:`graded_dim` only for ``rank <= 1`` (``n = 2``, ``rank = 2``
    gives 7 against 5); kept to document the alternative reading.
    """
    total = 0
    for lam in partitions(n):
        term = 1
        for part in lam:
            term *= s_binom(part, rank)
        total += term
    return total


def matrix_of(x: AlgebraElement, n_src: int, lattice: Lattice, n_tgt: int | None = None) -> list[list[Fraction]]:
    """Matrix of ``act(x, -)`` from degree ``n_src`` to degree ``n_tgt``.

    ``n_tgt`` defaults to ``n_src`` plus the (uniform) degree shift of ``x``.
    Columns follow ``basis(n_src, rank)``, rows ``basis(n_tgt, rank)``.
    """
    if n_tgt is None:
        shifts = {w.shift for w in x}
        if len(shifts) > 1:
            raise ValueError("x is not homogeneous; pass n_tgt explicitly")
        n_tgt = n_src + (shifts.pop() if shifts else 0)
    src = basis(n_src, lattice.rank)
    tgt = basis(n_tgt, lattice.rank)
    row_of = {m: i for i, m in enumerate(tgt)}
    out = [[Fraction(0)] * len(src) for _ in tgt]
    for j, mono in enumerate(src):
        for m, c in act(x, FockVector({mono: 1}), lattice).items():
            if m in row_of:
                out[row_of[m]][j] += c
    return out


# --------------------------------------------------------------------------
# Faithfulness
# --------------------------------------------------------------------------

def _creation_parts(max_degree: int, rank: int) -> list[Monomial]:
    return [m for d in range(max_degree + 1) for m in basis(d, rank)]


def normal_words(max_degree: int, rank: int, weight: int | None = None) -> list[Word]:
    """Normal words with ``p``- and ``q``-degrees at most ``max_degree``."""
    parts = _creation_parts(max_degree, rank)
    return [normal_word(ps, qs, weight) for ps, qs in itertools.product(parts, parts)]


@dataclass(frozen=True)
class FaithfulnessReport:
    word_count: int
    rank: int
    source_degree: int
    max_degree: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.word_count

    def to_json(self) -> dict:
        return {
            "words": self.word_count, "rank": self.rank, "full_rank": self.full_rank,
            "max_degree": self.max_degree, "source_degree": self.source_degree,
        }


def faithfulness_report(max_degree: int, lattice: Lattice, max_weight_span: int | None = None) -> FaithfulnessReport:
    """Rank of the action of all normal words on the low-degree Fock space.

    Every normal word with ``p``- and ``q``-degree at most ``max_degree`` is
    turned into the vector of its action on each basis vector of degree at
    most ``max_weight_span`` (default ``max_degree``).  Words are taken without
    an idempotent: with one, ``1_k`` confines a word to a single degree and
    the low-degree pieces cannot separate words.
    """
    if lattice.rank and lattice.is_degenerate():
        raise DegenerateForm("the form has a nonzero radical; the Fock space is not faithful")
    span = max_degree if max_weight_span is None else max_weight_span
    sources = _creation_parts(span, lattice.rank)
    words = normal_words(max_degree, lattice.rank)
    vectors = []
    for w in words:
        x = AlgebraElement.word(w)
        vec = {}
        for j, mono in enumerate(sources):
            for m, c in act(x, FockVector({mono: 1}), lattice).items():
                vec[(j, m)] = c
        vectors.append(vec)
    return FaithfulnessReport(len(words), _linalg.sparse_rank(vectors), span, max_degree)
