"""The idempotent-modified Heisenberg algebra of a lattice.

Elements are finite rational combinations of words in the generators
``p_i^(n)`` and ``q_i^(n)`` (``i`` a basis index of the lattice, ``n >= 1``
the divided-power level) ending in an idempotent ``1_k``.  A word may also
carry no idempotent at all, which stands for the element of the unital
algebra; ``1_k`` then acts on it as a projection.

Normal ordering moves every ``q`` to the right of every ``p`` using

    q_a^(n) p_b^(m) = sum_k s^k(<a, b>) p_b^(m-k) q_a^(n-k)

and sorts generators of the same kind, which commute.  Normal words are the
canonical representatives used for equality.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .lattice import DimensionMismatch, GeneratorMap, Lattice

P, Q = "p", "q"

Letter = tuple[str, int, int]
"""``(kind, basis_index, level)``."""


def s_binom(k: int, r: int) -> int:
    """``(r + k - 1 choose k)``, i.e. ``r (r+1) ... (r+k-1) / k!``, for any integer ``r``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    for j in range(k):
        num *= r + j
    return num // math.factorial(k)


def exterior_binom(k: int, r: int) -> int:
    """``r (r-1) ... (r-k+1) / k!``: dimension of the k-th exterior power for ``r >= 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    for j in range(k):
        num *= r - j
    return num // math.factorial(k)


# --------------------------------------------------------------------------
# Words and elements
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Word:
    """A product of generators followed by an optional idempotent ``1_weight``.

    ``weight`` is the source weight (the idempotent on the right); ``None``
    means the word lives in the unital algebra.
    """

    letters: tuple[Letter, ...]
    weight: int | None = None

    @property
    def shift(self) -> int:
        """Target weight minus source weight."""
        return sum(n if kind == P else -n for kind, _, n in self.letters)

    @property
    def target(self) -> int | None:
        return None if self.weight is None else self.weight + self.shift

    def is_normal(self) -> bool:
        kinds = [k for k, _, _ in self.letters]
        n_p = kinds.count(P)
        if kinds != [P] * n_p + [Q] * (len(kinds) - n_p):
            return False
        ps, qs = self.letters[:n_p], self.letters[n_p:]
        return list(ps) == sorted(ps) and list(qs) == sorted(qs)

    @property
    def p_part(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, n) for k, i, n in self.letters if k == P)

    @property
    def q_part(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, n) for k, i, n in self.letters if k == Q)

    @property
    def p_degree(self) -> int:
        return sum(n for _, n in self.p_part)

    @property
    def q_degree(self) -> int:
        return sum(n for _, n in self.q_part)

    def sort_key(self):
        return (len(self.letters), self.p_degree + self.q_degree, self.letters,
                -10**9 if self.weight is None else self.weight)

    def __str__(self) -> str:
        parts = [f"{k}[{i + 1}]^({n})" for k, i, n in self.letters]
        if self.weight is not None:
            parts.append(f"1_{{{self.weight}}}")
        return "*".join(parts) if parts else "1"


def normal_word(p_part: Iterable[tuple[int, int]] = (), q_part: Iterable[tuple[int, int]] = (),
                weight: int | None = None) -> Word:
    ps = sorted(p_part)
    qs = sorted(q_part)
    return Word(tuple((P, i, n) for i, n in ps) + tuple((Q, i, n) for i, n in qs), weight)


def compose_words(u: Word, v: Word) -> Word | None:
    """The word ``u v``, or ``None`` when the idempotents are orthogonal."""
    if u.weight is None:
        weight = v.weight
    elif v.weight is None:
        weight = u.weight - v.shift
    elif v.target == u.weight:
        weight = v.weight
    else:
        return None
    return Word(u.letters + v.letters, weight)


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class AlgebraElement(Mapping):
    """An immutable finite map ``Word -> Fraction`` with no zero coefficients.

    Addition, subtraction and scalar multiplication are defined here;
    products need the bilinear form and go through :func:`mul` or
    :class:`HeisenbergAlgebra`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            c = _coerce(c)
            if c:
                s = acc.get(w, 0) + c
                if s:
                    acc[w] = s
                else:
                    del acc[w]
        self._terms = acc
        self._hash = None

    @classmethod
    def word(cls, w: Word, coeff=1) -> "AlgebraElement":
        return cls({w: coeff})

    def __getitem__(self, w: Word) -> Fraction:
        return self._terms[w]

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = _coerce(c)
        return AlgebraElement({w: c * x for w, x in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def is_normal(self) -> bool:
        return all(w.is_normal() for w in self._terms)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            ws = str(w)
            if c == 1:
                term = ws
            elif c == -1:
                term = "-" + ws
            else:
                cs = str(c) if c.denominator == 1 else f"({c})"
                term = cs if ws == "1" else f"{cs}*{ws}"
            out.append(term)
        s = out[0]
        for t in out[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    def __repr__(self) -> str:
        return f"AlgebraElement({str(self)!r})"

    def to_json(self) -> list[dict]:
        rows = []
        for w, c in self.sorted_terms():
            if not w.is_normal():
                raise ValueError("only normal-ordered elements serialize; call normal_order first")
            rows.append({
                "coeff": c.numerator if c.denominator == 1 else str(c),
                "p": [[i, n] for i, n in w.p_part],
                "q": [[i, n] for i, n in w.q_part],
                "weight": w.weight,
            })
        return rows

    @classmethod
    def from_json(cls, rows: Sequence[Mapping]) -> "AlgebraElement":
        return cls((normal_word(map(tuple, r.get("p", [])), map(tuple, r.get("q", [])), r.get("weight")),
                    Fraction(r["coeff"])) for r in rows)


ZERO = AlgebraElement()


def generator(kind: str, index: int, level: int, weight: int | None = None) -> AlgebraElement:
    """``p_index^(level)`` or ``q_index^(level)``, optionally followed by ``1_weight``.

    Level 0 is the unit and negative levels give zero.
    """
    if kind not in (P, Q):
        raise ValueError(f"kind must be 'p' or 'q', not {kind!r}")
    if level < 0:
        return ZERO
    if level == 0:
        return AlgebraElement.word(Word((), weight))
    return AlgebraElement.word(Word(((kind, index, level),), weight))


def idempotent(k: int) -> AlgebraElement:
    return AlgebraElement.word(Word((), k))


def one() -> AlgebraElement:
    return AlgebraElement.word(Word(()))


def scalar(c, weight: int | None = None) -> AlgebraElement:
    return AlgebraElement.word(Word((), weight), c)


# --------------------------------------------------------------------------
# Normal ordering
# --------------------------------------------------------------------------

def _insert(part: tuple, item) -> tuple:
    i = bisect.bisect_left(part, item)
    return part[:i] + (item,) + part[i:]


@lru_cache(maxsize=None)
def _commute_q(gram_row: tuple[int, ...], n: int, ps: tuple[tuple[int, int], ...]):
    """``q_a^(n) * prod(ps)`` as ``{(ps', n'): c}`` meaning ``c * prod(ps') q_a^(n')``.

    ``gram_row`` is row ``a`` of the Gram matrix, so only ``<a, b>`` enters.
    """
    if not ps:
        return {((), n): 1}
    (b, m), rest = ps[0], ps[1:]
    chi = gram_row[b]
    out: dict = {}
    for k in range(min(m, n) + 1):
        c = s_binom(k, chi)
        if not c:
            continue
        for (ps2, n2), c2 in _commute_q(gram_row, n - k, rest).items():
            new_ps = _insert(ps2, (b, m - k)) if m > k else ps2
            key = (new_ps, n2)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _left_multiply(letter: Letter, terms: Mapping[tuple, Fraction], gram) -> dict:
    # terms: {(ps, qs, weight): coeff} already normal
    kind, a, n = letter
    out: dict = {}
    if kind == P:
        for (ps, qs, wt), c in terms.items():
            key = (_insert(ps, (a, n)), qs, wt)
            out[key] = out.get(key, 0) + c
        return out
    row = gram[a]
    for (ps, qs, wt), c in terms.items():
        for (ps2, n2), c2 in _commute_q(row, n, ps).items():
            qs2 = _insert(qs, (a, n2)) if n2 else qs
            key = (ps2, qs2, wt)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _check_indices(x: AlgebraElement, lattice: Lattice) -> None:
    for w in x:
        for _, i, _ in w.letters:
            if not 0 <= i < lattice.rank:
                raise DimensionMismatch(f"generator index {i} outside a rank {lattice.rank} lattice")


def _normal_order_word(w: Word, gram) -> dict:
    terms = {((), (), w.weight): Fraction(1)}
    for letter in reversed(w.letters):
        terms = _left_multiply(letter, terms, gram)
    return terms


def normal_order(x: AlgebraElement, lattice: Lattice) -> AlgebraElement:
    """Rewrite ``x`` into sorted ``p``'s, then sorted ``q``'s, then one idempotent."""
    _check_indices(x, lattice)
    gram = lattice.gram
    acc: list = []
    for w, c in x.items():
        if w.is_normal():
            acc.append((w, c))
            continue
        for (ps, qs, wt), c2 in _normal_order_word(w, gram).items():
            acc.append((normal_word(ps, qs, wt), c * c2))
    return AlgebraElement(acc)


def mul(x: AlgebraElement, y: AlgebraElement, lattice: Lattice) -> AlgebraElement:
    """Product ``x y`` in normal form; orthogonal idempotents give zero."""
    acc = []
    for u, a in x.items():
        for v, b in y.items():
            w = compose_words(u, v)
            if w is not None:
                acc.append((w, a * b))
    return normal_order(AlgebraElement(acc), lattice)


def product(factors: Sequence[AlgebraElement], lattice: Lattice) -> AlgebraElement:
    if not factors:
        return one()
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = mul(f, out, lattice)
    return normal_order(out, lattice)


def commutator(x: AlgebraElement, y: AlgebraElement, lattice: Lattice) -> AlgebraElement:
    return mul(x, y, lattice) - mul(y, x, lattice)


def equal(x: AlgebraElement, y: AlgebraElement, lattice: Lattice) -> bool:
    return normal_order(x, lattice) == normal_order(y, lattice)


# --------------------------------------------------------------------------
# Step-by-step rewriting (independent of the memoised fast path above)
# --------------------------------------------------------------------------

def redexes(w: Word) -> list[int]:
    """Positions ``i`` where letters ``i, i+1`` are a ``q p`` pair or an unsorted same-kind pair."""
    out = []
    for i in range(len(w.letters) - 1):
        a, b = w.letters[i], w.letters[i + 1]
        if (a[0] == Q and b[0] == P) or (a[0] == b[0] and b < a):
            out.append(i)
    return out


def rewrite_step(w: Word, i: int, gram) -> list[tuple[Word, int]]:
    """Apply one relation at position ``i`` of ``w``."""
    a, b = w.letters[i], w.letters[i + 1]
    head, tail = w.letters[:i], w.letters[i + 2:]
    if a[0] == b[0]:
        return [(Word(head + (b, a) + tail, w.weight), 1)]
    _, ia, n = a
    _, ib, m = b
    chi = gram[ia][ib]
    out = []
    for k in range(min(m, n) + 1):
        c = s_binom(k, chi)
        if not c:
            continue
        mid = ((P, ib, m - k),) if m > k else ()
        mid += ((Q, ia, n - k),) if n > k else ()
        out.append((Word(head + mid + tail, w.weight), c))
    return out


def rewrite(x: AlgebraElement, lattice: Lattice, strategy: str = "leftmost",
            rng: random.Random | None = None, max_steps: int = 10**6) -> AlgebraElement:
    """Normal form by applying single relations one at a time.

    ``strategy`` picks the redex in each word: ``"leftmost"``, ``"rightmost"``
    or ``"random"`` (drawn from ``rng``).  Raises ``RuntimeError`` if
    ``max_steps`` rewrites do not reach a normal form.
    """
    _check_indices(x, lattice)
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    gram = lattice.gram
    pending = dict(x.items())
    done: dict[Word, Fraction] = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        pos = redexes(w)
        if not pos:
            done[w] = done.get(w, 0) + c
            continue
        if strategy == "leftmost":
            i = pos[0]
        elif strategy == "rightmost":
            i = pos[-1]
        elif strategy == "random":
            i = rng.choice(pos)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        for w2, c2 in rewrite_step(w, i, gram):
            pending[w2] = pending.get(w2, 0) + c * c2
            if not pending[w2]:
                del pending[w2]
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"rewriting did not terminate within {max_steps} steps")
    return AlgebraElement(done)


# --------------------------------------------------------------------------
# Generators indexed by arbitrary lattice vectors
# --------------------------------------------------------------------------

def _series_mul(f: list, g: list, lattice: Lattice, order: int) -> list:
    out = [ZERO] * (order + 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j in range(order + 1 - i):
            if g[j]:
                out[i + j] = out[i + j] + mul(a, g[j], lattice)
    return out


def expand_vector_generator(kind: str, v: Sequence[int], n: int, lattice: Lattice) -> AlgebraElement:
    """``p_v^(n)`` (or ``q_v^(n)``) as a polynomial in basis-indexed generators.

    Additivity in the index makes ``sum_n p_v^(n) t^n`` multiplicative in
    ``v``, so it is the product over basis directions of the basis series raised
    to the coordinate of ``v``; negative coordinates use the inverse series,
    forced by ``p_0^(n) = 0`` for ``n > 0``.
    """
    if len(v) != lattice.rank:
        raise DimensionMismatch(f"vector of length {len(v)} on a rank {lattice.rank} lattice")
    if n < 0:
        return ZERO
    series = [one()] + [ZERO] * n
    for i, c in enumerate(v):
        if c == 0:
            continue
        base = _basis_series(kind, i, n)
        if c < 0:
            base = _inverse_series(base, lattice)
        for _ in range(abs(c)):
            series = _series_mul(series, base, lattice, n)
    return series[n]


def _basis_series(kind: str, i: int, order: int) -> list:
    return [generator(kind, i, k) for k in range(order + 1)]


def _inverse_series(f: list, lattice: Lattice) -> list:
    # f[0] = 1, so g[n] = -sum_{k>=1} f[k] g[n-k]
    g = [one()]
    for m in range(1, len(f)):
        acc = ZERO
        for k in range(1, m + 1):
            acc = acc - mul(f[k], g[m - k], lattice)
        g.append(acc)
    return g


def substitute(x: AlgebraElement, gmap: GeneratorMap) -> AlgebraElement:
    """Image of ``x`` (over ``gmap.source``) under the generator map, normal-ordered over ``gmap.target``."""
    target = gmap.target
    _check_indices(x, gmap.source)
    cache: dict[Letter, AlgebraElement] = {}
    acc = ZERO
    for w, c in x.items():
        img = AlgebraElement.word(Word((), w.weight))
        for letter in reversed(w.letters):
            if letter not in cache:
                kind, i, n = letter
                vec = gmap.q_images[i] if kind == Q else gmap.p_images[i]
                cache[letter] = expand_vector_generator(kind, vec, n, target)
            img = mul(cache[letter], img, target)
        acc = acc + img.scale(c)
    return acc


# --------------------------------------------------------------------------
# Power-sum generators a_b(n)
# --------------------------------------------------------------------------

def to_power_sums(index: int, n: int, lattice: Lattice) -> AlgebraElement:
    """``a_index(n)`` in terms of divided powers.

    ``n < 0`` is the creation side: ``a(-n)`` is the power sum ``p_n`` when the
    ``p^(k)`` are read as complete homogeneous functions ``h_k``, via Newton's
    identity ``p_n = n h_n - sum_{k<n} p_k h_{n-k}``.  ``n > 0`` is the same with
    ``q``'s.
    """
    if n == 0:
        raise ValueError("a(0) is not a generator")
    return _newton_table(P if n < 0 else Q, index, abs(n), lattice)[abs(n)]


def _newton_table(kind: str, index: int, n: int, lattice: Lattice) -> list:
    h = [generator(kind, index, k) for k in range(n + 1)]
    ps = [ZERO]
    for k in range(1, n + 1):
        acc = h[k].scale(k)
        for j in range(1, k):
            acc = acc - mul(ps[j], h[k - j], lattice)
        ps.append(acc)
    return ps


PowerSumPolynomial = Mapping[tuple[tuple[int, int], ...], object]
"""Noncommutative polynomial in ``a_b(n)``: ``{((b1, n1), (b2, n2), ...): coeff}``."""


def from_power_sums(expr: PowerSumPolynomial, lattice: Lattice) -> AlgebraElement:
    """Evaluate a polynomial in the ``a_b(n)`` as an element in divided powers."""
    cache: dict = {}
    acc = ZERO
    for word, c in expr.items():
        factors = []
        for b, n in word:
            if (b, n) not in cache:
                cache[(b, n)] = to_power_sums(b, n, lattice)
            factors.append(cache[(b, n)])
        acc = acc + product(factors, lattice).scale(c)
    return acc


def divided_power_in_power_sums(kind: str, index: int, n: int) -> dict:
    """``p_index^(n)`` (or ``q``) as a polynomial in ``a_index(-k)`` (or ``a_index(k)``).

    Solves Newton's triangular system ``n h_n = sum_k p_k h_{n-k}``; same-side
    power sums commute, so monomials are returned sorted.
    """
    sign = -1 if kind == P else 1
    h: list[dict] = [{(): Fraction(1)}]
    for m in range(1, n + 1):
        acc: dict = {}
        for k in range(1, m + 1):
            for mono, c in h[m - k].items():
                key = tuple(sorted(mono + ((index, sign * k),)))
                acc[key] = acc.get(key, 0) + c / m
        h.append({k: v for k, v in acc.items() if v})
    return h[n]


# --------------------------------------------------------------------------
# Convenience wrapper bound to one lattice
# --------------------------------------------------------------------------

class HeisenbergAlgebra:
    """The Heisenberg algebra of ``lattice`` with the operations bound to it."""

    def __init__(self, lattice: Lattice | Sequence[Sequence[int]]):
        self.lattice = lattice if isinstance(lattice, Lattice) else Lattice(lattice)

    def __repr__(self):
        return f"HeisenbergAlgebra({[list(r) for r in self.lattice.gram]})"

    def _check(self, i: int):
        if not 0 <= i < self.lattice.rank:
            raise DimensionMismatch(f"index {i} outside a rank {self.lattice.rank} lattice")

    def p(self, i: int, n: int = 1, weight: int | None = None) -> AlgebraElement:
        self._check(i)
        return generator(P, i, n, weight)

    def q(self, i: int, n: int = 1, weight: int | None = None) -> AlgebraElement:
        self._check(i)
        return generator(Q, i, n, weight)

    def a(self, i: int, n: int) -> AlgebraElement:
        self._check(i)
        return to_power_sums(i, n, self.lattice)

    def pv(self, v: Sequence[int], n: int = 1) -> AlgebraElement:
        return expand_vector_generator(P, v, n, self.lattice)

    def qv(self, v: Sequence[int], n: int = 1) -> AlgebraElement:
        return expand_vector_generator(Q, v, n, self.lattice)

    idempotent = staticmethod(idempotent)
    one = staticmethod(one)

    def mul(self, *factors: AlgebraElement) -> AlgebraElement:
        return product(list(factors), self.lattice)

    def normal_order(self, x: AlgebraElement) -> AlgebraElement:
        return normal_order(x, self.lattice)

    def commutator(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        return commutator(x, y, self.lattice)

    def equal(self, x: AlgebraElement, y: AlgebraElement) -> bool:
        return equal(x, y, self.lattice)
