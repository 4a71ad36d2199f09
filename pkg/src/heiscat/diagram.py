"""Combinatorial shadow of the Heisenberg 2-category.

Three pieces live here:

* the rational group algebra of ``S_n`` with the symmetrisers and Young
  idempotents that cut out the divided-power 1-morphisms;
* a formal calculus of arc-diagram symbols ``<s,t|m,n|i>`` (``s`` downward
  strands on the left, ``t`` upward strands on the right, ``m`` and ``n``
  strands crossing in the middle, ``i`` pairs of arcs) with the strand
  untwisting relations, used to re-derive the coefficient identities behind
  ``g o f = 1``;
* decategorified checks that the categorified ``Q^(m) P^(n)`` decompositions
  reduce to the commutation relation of the Heisenberg algebra.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import heisenberg as hz
from .heisenberg import AlgebraElement, exterior_binom, s_binom
from .lattice import Lattice

Permutation = tuple[int, ...]
"""One-line notation on ``{0, ..., n-1}``: ``sigma[i]`` is the image of ``i``."""


class InvalidPartition(ValueError):
    pass


class ReductionMismatch(AssertionError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness


# --------------------------------------------------------------------------
# Symmetric group algebra
# --------------------------------------------------------------------------

def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma o tau``: apply ``tau`` first."""
    return tuple(sigma[t] for t in tau)


def sign(sigma: Permutation) -> int:
    seen = [False] * len(sigma)
    s = 1
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def from_cycles(n: int, *cycles: Sequence[int]) -> Permutation:
    """Permutation of ``{0..n-1}`` from 1-based cycles, e.g. ``from_cycles(3, (1, 2, 3))``."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


class GroupAlgebraElement(Mapping):
    """Rational combination of permutations of a fixed degree ``n``."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Permutation, object] | Iterable[tuple[Permutation, object]] = ()):
        self.n = n
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sigma, c in items:
            sigma = tuple(sigma)
            if sorted(sigma) != list(range(n)):
                raise ValueError(f"{sigma} is not a permutation of {n} letters")
            c = Fraction(c)
            if c:
                s = acc.get(sigma, 0) + c
                if s:
                    acc[sigma] = s
                else:
                    del acc[sigma]
        self._terms = acc

    @classmethod
    def of(cls, sigma: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(len(sigma), {tuple(sigma): coeff})

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls.of(tuple(range(n)))

    def __getitem__(self, sigma):
        return self._terms[sigma]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _same_n(self, other):
        if other.n != self.n:
            raise ValueError(f"degrees differ: S_{self.n} vs S_{other.n}")

    def __add__(self, other):
        self._same_n(other)
        return GroupAlgebraElement(self.n, list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {s: c * x for s, x in self.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return group_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"GroupAlgebraElement({self.n}, 0)"
        body = " + ".join(f"{c}*{list(s)}" for s, c in sorted(self.items()))
        return f"GroupAlgebraElement({self.n}, {body})"


def group_mul(x: GroupAlgebraElement, y: GroupAlgebraElement) -> GroupAlgebraElement:
    x._same_n(y)
    acc: dict = {}
    for s, a in x.items():
        for t, b in y.items():
            st = compose(s, t)
            acc[st] = acc.get(st, 0) + a * b
    return GroupAlgebraElement(x.n, acc)


def e_triv(n: int) -> GroupAlgebraElement:
    c = Fraction(1, math.factorial(n))
    return GroupAlgebraElement(n, {s: c for s in itertools.permutations(range(n))})


def e_sign(n: int) -> GroupAlgebraElement:
    c = Fraction(1, math.factorial(n))
    return GroupAlgebraElement(n, {s: c * sign(s) for s in itertools.permutations(range(n))})


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(not isinstance(p, int) or p <= 0 for p in lam) or list(lam) != sorted(lam, reverse=True):
        raise InvalidPartition(f"{lam} is not a partition")
    return lam


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = _check_partition(lam)
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def hook_dimension(lam: Sequence[int]) -> int:
    """Dimension of the Specht module of ``lam`` by the hook length formula."""
    lam = _check_partition(lam)
    cols = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c - 1) + (cols[c] - r - 1) + 1
    return math.factorial(sum(lam)) // hooks


def _subgroup(blocks: Sequence[Sequence[int]], n: int) -> Iterator[Permutation]:
    """Permutations of ``{0..n-1}`` preserving each block (and fixing nothing else)."""
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        sigma = list(range(n))
        for block, img in zip(blocks, images):
            for a, b in zip(block, img):
                sigma[a] = b
        yield tuple(sigma)


def young_symmetriser(lam: Sequence[int]) -> GroupAlgebraElement:
    """Idempotent ``(dim lam / n!) * (row sum) * (signed column sum)``.

    Uses the row-reading tableau: row ``r`` holds ``lam_0 + ... + lam_{r-1}``
    onwards.
    """
    lam = _check_partition(lam)
    n = sum(lam)
    rows, start = [], 0
    for p in lam:
        rows.append(list(range(start, start + p)))
        start += p
    cols = [[rows[r][c] for r in range(len(lam)) if lam[r] > c] for c in range(lam[0] if lam else 0)]
    row_sum = GroupAlgebraElement(n, {s: 1 for s in _subgroup(rows, n)})
    col_sum = GroupAlgebraElement(n, {s: sign(s) for s in _subgroup(cols, n)})
    return group_mul(row_sum, col_sum).scale(Fraction(hook_dimension(lam), math.factorial(n)))


# --------------------------------------------------------------------------
# Arc-diagram symbols
# --------------------------------------------------------------------------

Symbol = tuple[int, int, int, int, int]
"""``(s, t, m, n, i)``."""


class DcrossExpr(Mapping):
    """Rational combination of arc-diagram symbols ``<s,t|m,n|i>``.

    Symbols with a negative entry are zero and are dropped on construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Symbol, object] | Iterable[tuple[Symbol, object]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sym, c in items:
            sym = tuple(int(v) for v in sym)
            if len(sym) != 5:
                raise ValueError(f"symbol {sym} must have five entries")
            if min(sym) < 0:
                continue
            c = Fraction(c)
            if c:
                s = acc.get(sym, 0) + c
                if s:
                    acc[sym] = s
                else:
                    del acc[sym]
        self._terms = acc

    def __getitem__(self, sym):
        return self._terms[sym]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, DcrossExpr):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return DcrossExpr(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "DcrossExpr":
        c = Fraction(c)
        return DcrossExpr({s: c * x for s, x in self.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def strand_counts(self) -> set[tuple[int, int]]:
        """The pairs ``(s + m + i, t + n + i)`` occurring; a single pair when well formed."""
        return {(s + m + i, t + n + i) for s, t, m, n, i in self._terms}

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c}*<{s},{t}|{m},{n}|{i}>" for (s, t, m, n, i), c in sorted(self.items())
        )

    def __repr__(self):
        return f"DcrossExpr({str(self)!r})"

    def to_json(self) -> list:
        return [{"symbol": list(sym), "coeff": str(c)} for sym, c in sorted(self.items())]


def dcross(s: int, t: int, m: int, n: int, i: int, coeff=1) -> DcrossExpr:
    return DcrossExpr({(s, t, m, n, i): coeff})


def sdcross(s: int, m: int, i: int, coeff=1) -> DcrossExpr:
    """Symmetric symbol ``<s,s|m,m|i>``."""
    return dcross(s, s, m, m, i, coeff)


def _falling(n: int, k: int) -> int:
    # n! / (n-k)!
    return math.perm(n, k)


def untwist_left(sym: Symbol) -> dict:
    """Pull the innermost left strand into the middle crossing.

    ``<s,t|m,n|i> = <s-1,t|m+1,n|i> + n <s-1,t|m,n-1|i+1>``: straightening a
    down strand past ``n`` up strands creates ``n`` extra arc pairs.
    """
    s, t, m, n, i = sym
    return {(s - 1, t, m + 1, n, i): 1, (s - 1, t, m, n - 1, i + 1): n}


def untwist_right(sym: Symbol) -> dict:
    """``<s,t|m,n|i> = <s,t-1|m,n+1|i> + m <s,t-1|m-1,n|i+1>``."""
    s, t, m, n, i = sym
    return {(s, t - 1, m, n + 1, i): 1, (s, t - 1, m - 1, n, i + 1): m}


def link_rule(sym: Symbol) -> dict:
    """The link relation for a symmetric core ``<1,1|m,m|i>`` inside padding.

    ``<s,t|m,m|i> = <s-1,t-1|m+1,m+1|i> + (m+1) <s-1,t-1|m,m|i+1>
    + sum_{j=1}^{m} (-1)^(j+1) m!/(m-j)! <s,t|m-j,m-j|i+j>``
    """
    s, t, m, n, i = sym
    if n != m or s < 1 or t < 1:
        raise ValueError(f"link relation needs a symmetric core with padding, got {sym}")
    out = {(s - 1, t - 1, m + 1, m + 1, i): 1, (s - 1, t - 1, m, m, i + 1): m + 1}
    for j in range(1, m + 1):
        out[(s, t, m - j, m - j, i + j)] = (-1) ** (j + 1) * _falling(m, j)
    return out


STRATEGIES = ("link", "untwist")


def _step(sym: Symbol, strategy: str) -> dict | None:
    s, t, m, n, i = sym
    if s == 0 and t == 0:
        return None
    if strategy == "link" and s >= 1 and t >= 1 and m == n:
        return link_rule(sym)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    return untwist_left(sym) if s >= 1 else untwist_right(sym)


def rewrite_link(x: DcrossExpr, strategy: str = "link") -> DcrossExpr:
    """Reduce every symbol to the spanning symbols ``<0,0|m,n|i>``.

    With ``strategy="link"`` symmetric padded symbols are rewritten by the link
    relation and the single-strand untwisting relations handle asymmetric
    padding; ``strategy="untwist"`` uses the single-strand relations only.
    Every step lowers ``(s + t, m + n)`` lexicographically.
    """
    pending = dict(x.items())
    done: dict = {}
    while pending:
        # largest padding first so that shared descendants are merged before expansion
        sym = max(pending, key=lambda v: (v[0] + v[1], v[2] + v[3], v))
        c = pending.pop(sym)
        rule = _step(sym, strategy)
        if rule is None:
            done[sym] = done.get(sym, 0) + c
            continue
        for new, k in rule.items():
            if k and min(new) >= 0:
                pending[new] = pending.get(new, 0) + c * k
                if not pending[new]:
                    del pending[new]
    return DcrossExpr(done)


# --------------------------------------------------------------------------
# Verification of the coefficient identities
# --------------------------------------------------------------------------

@dataclass
class CheckResult:
    identity: str
    params: dict
    status: str
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    name: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _compare(report: VerificationReport, name: str, params: dict, lhs: DcrossExpr, rhs: DcrossExpr,
             strategy: str) -> None:
    a, b = rewrite_link(lhs, strategy), rewrite_link(rhs, strategy)
    if a == b:
        report.checks.append(CheckResult(name, params, "pass"))
    else:
        report.checks.append(CheckResult(name, params, "fail", {
            "lhs": str(lhs), "rhs": str(rhs), "lhs_reduced": str(a), "rhs_reduced": str(b),
            "difference": str(a - b), "strategy": strategy,
        }))


def link_identity(n: int, i: int = 0) -> tuple[DcrossExpr, DcrossExpr]:
    """Both sides of the link relation for ``<1,1|n,n|i>``."""
    rhs = sdcross(0, n + 1, i) + sdcross(0, n, i + 1, n + 1)
    for j in range(1, n + 1):
        rhs = rhs + sdcross(1, n - j, i + j, (-1) ** (j + 1) * _falling(n, j))
    return sdcross(1, n, i), rhs


def verify_sdcross_lemma(max_n: int, strategy: str = "link", strict: bool = True) -> VerificationReport:
    """Re-derive the symmetric and asymmetric arc identities up to ``max_n``.

    Checks, for all parameters up to ``max_n``: the link relation against the
    single-strand relations, the unsimplified expansion of ``<0,0|n,n|0>``,
    ``<1,1|n,n|0> = <0,0|n+1,n+1|0> + (2n+1) <0,0|n,n|1> + n^2 <0,0|n-1,n-1|2>``,
    ``<k,k|0,0|0> = sum_i i! C(k,i)^2 <0,0|k-i,k-i|i>`` and
    ``<m,n|0,0|0> = sum_i i! C(m,i) C(n,i) <0,0|m-i,n-i|i>``, plus agreement of
    both reduction strategies on every symbol involved.

    Raises :class:`ReductionMismatch` on the first failing identity when
    ``strict``.
    """
    rep = VerificationReport("sdcross")
    other = "untwist" if strategy == "link" else "link"
    for n in range(max_n + 1):
        for i in range(max_n + 1 - n):
            lhs, rhs = link_identity(n, i)
            # the link relation is an axiom of the "link" strategy; check it against the other one
            _compare(rep, "link_relation", {"n": n, "i": i}, lhs, rhs, "untwist")
    for n in range(1, max_n + 1):
        rhs = sdcross(1, n - 1, 0) + sdcross(0, n - 1, 1, -n)
        for j in range(1, n):
            rhs = rhs + sdcross(1, n - 1 - j, j, (-1) ** j * _falling(n - 1, j))
        _compare(rep, "straighten_first_strand", {"n": n}, sdcross(0, n, 0), rhs, strategy)
        _compare(rep, "untwist_down_strand", {"n": n}, sdcross(0, n, 0),
                 dcross(1, 0, n - 1, n, 0) + sdcross(0, n - 1, 1, -n), strategy)
        _compare(rep, "untwist_up_strand", {"n": n}, dcross(1, 0, n - 1, n, 0),
                 sdcross(1, n - 1, 0) + dcross(1, 0, n - 2, n - 1, 1, -(n - 1)), strategy)
    for n in range(max_n + 1):
        rhs = sdcross(0, n + 1, 0) + sdcross(0, n, 1, 2 * n + 1) + sdcross(0, n - 1, 2, n * n)
        _compare(rep, "sdcross_1n0", {"n": n}, sdcross(1, n, 0), rhs, strategy)
    for k in range(max_n + 1):
        rhs = DcrossExpr()
        for i in range(k + 1):
            rhs = rhs + sdcross(0, k - i, i, math.factorial(i) * math.comb(k, i) ** 2)
        _compare(rep, "sdcross_k00", {"k": k}, sdcross(k, 0, 0), rhs, strategy)
    for m in range(max_n + 1):
        for n in range(max_n + 1):
            rhs = DcrossExpr()
            for i in range(min(m, n) + 1):
                rhs = rhs + dcross(0, 0, m - i, n - i, i, math.factorial(i) * math.comb(m, i) * math.comb(n, i))
            _compare(rep, "g_after_f", {"m": m, "n": n}, dcross(m, n, 0, 0, 0), rhs, strategy)
            for s_ in range(min(m, 2) + 1):
                # padded strands merge into the middle crossing
                _compare(rep, "merge_padding", {"s": s_, "t": n, "m": m, "i": 0},
                         dcross(s_, n, m, 0, 0), dcross(s_ + m, n, 0, 0, 0), strategy)
    for sym in itertools.product(range(min(max_n, 3) + 1), repeat=5):
        a, b = rewrite_link(dcross(*sym), strategy), rewrite_link(dcross(*sym), other)
        rep.checks.append(CheckResult("strategies_agree", {"symbol": list(sym)}, "pass" if a == b else "fail",
                                      None if a == b else {strategy: str(a), other: str(b)}))
    if strict and not rep.passed:
        bad = rep.failures[0]
        raise ReductionMismatch(f"{bad.identity} fails at {bad.params}", bad.witness)
    return rep


def fg_matrix(m: int, n: int) -> list[list[Fraction]]:
    """Coefficients of ``c_j f_j o g_i`` on the summands ``i, j = 0..min(m, n)``.

    Off the diagonal the diagram has a left curl and vanishes; on it the
    idempotent normalisations give ``(m-i)! i! i! (n-i)! / (m! n!) / i!``.
    """
    size = min(m, n) + 1
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        composite = Fraction(
            math.factorial(m - i) * math.factorial(i) * math.factorial(i) * math.factorial(n - i),
            math.factorial(m) * math.factorial(n),
        ) / math.factorial(i)
        coeff = math.factorial(i) * math.comb(m, i) * math.comb(n, i)
        out[i][i] = coeff * composite
    return out


def verify_fg(m: int, n: int) -> VerificationReport:
    """Check that ``f o g`` is the identity on ``sum_i Sym^i (x) P^(n-i) Q^(m-i)``."""
    rep = VerificationReport("fg")
    mat = fg_matrix(m, n)
    size = len(mat)
    ident = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for i in range(size):
        closed = Fraction(1, math.factorial(i) * math.comb(m, i) * math.comb(n, i))
        composite = Fraction(
            math.factorial(m - i) * math.factorial(i) ** 2 * math.factorial(n - i),
            math.factorial(m) * math.factorial(n) * math.factorial(i),
        )
        status = "pass" if closed == composite else "fail"
        rep.checks.append(CheckResult("fg_diagonal", {"m": m, "n": n, "i": i}, status,
                                      None if status == "pass" else {"closed": str(closed), "composite": str(composite)}))
    status = "pass" if mat == ident else "fail"
    rep.checks.append(CheckResult("f_after_g_identity", {"m": m, "n": n}, status,
                                  None if status == "pass" else {"matrix": [[str(x) for x in r] for r in mat]}))
    return rep


# --------------------------------------------------------------------------
# Decategorification
# --------------------------------------------------------------------------

def _rank_one(chi: int) -> Lattice:
    return Lattice([[chi]])


def decategorify_qp(m: int, n: int, chi: int, weight: int | None = None) -> AlgebraElement:
    """Class of ``sum_i Sym^i Hom (x) P^(n-i) Q^(m-i)`` with ``dim Hom = chi``."""
    acc = hz.ZERO
    for i in range(min(m, n) + 1):
        word = hz.normal_word([(0, n - i)] if n > i else [], [(0, m - i)] if m > i else [], weight)
        acc = acc + AlgebraElement.word(word, s_binom(i, chi))
    return acc


def elementary(kind: str, index: int, k: int, lattice: Lattice) -> AlgebraElement:
    """``e_k`` of the divided powers read as complete functions: the class of ``P^(1^k)``.

    ``e_k = sum_{j=1}^{k} (-1)^(j-1) h_j e_{k-j}``.
    """
    es = [hz.one()]
    for r in range(1, k + 1):
        acc = hz.ZERO
        for j in range(1, r + 1):
            acc = acc + hz.mul(hz.generator(kind, index, j), es[r - j], lattice).scale((-1) ** (j - 1))
        es.append(acc)
    return es[k]


def decategorify_transposed(m: int, n: int, chi: int, interchanged: bool = False) -> AlgebraElement:
    """Class of ``sum_i Lambda^i Hom (x) P^(n-i) Q^(1^(m-i))``.

    With ``interchanged`` the exterior side is on the ``P``'s:
    ``sum_i Lambda^i Hom (x) P^(1^(n-i)) Q^(m-i)``.
    """
    lat = _rank_one(chi)
    acc = hz.ZERO
    for i in range(min(m, n) + 1):
        if interchanged:
            left = elementary(hz.P, 0, n - i, lat)
            right = hz.generator(hz.Q, 0, m - i)
        else:
            left = hz.generator(hz.P, 0, n - i)
            right = elementary(hz.Q, 0, m - i, lat)
        acc = acc + hz.mul(left, right, lat).scale(exterior_binom(i, chi))
    return acc


def cross_check(m: int, n: int, chi: int) -> bool:
    """The decategorified ``Q^(m) P^(n)`` decomposition equals the normal-ordered product."""
    lat = _rank_one(chi)
    qp = hz.product([hz.generator(hz.Q, 0, m), hz.generator(hz.P, 0, n)], lat)
    return qp == decategorify_qp(m, n, chi)


def cross_check_transposed(m: int, n: int, chi: int) -> bool:
    """Same for ``Q^(1^m) P^(n)`` and ``Q^(m) P^(1^n)`` with exterior-power multiplicities."""
    lat = _rank_one(chi)
    lhs = hz.mul(elementary(hz.Q, 0, m, lat), hz.generator(hz.P, 0, n), lat)
    lhs2 = hz.mul(hz.generator(hz.Q, 0, m), elementary(hz.P, 0, n, lat), lat)
    return (lhs == decategorify_transposed(m, n, chi)
            and lhs2 == decategorify_transposed(m, n, chi, interchanged=True))


def verify_decat(max_m: int, max_n: int, chis: Iterable[int], transposed: bool = True) -> VerificationReport:
    rep = VerificationReport("decat")
    for m, n, c in itertools.product(range(max_m + 1), range(max_n + 1), chis):
        rep.checks.append(CheckResult("qp_decomposition", {"m": m, "n": n, "chi": c},
                                      "pass" if cross_check(m, n, c) else "fail"))
        if transposed:
            rep.checks.append(CheckResult("transposed_decomposition", {"m": m, "n": n, "chi": c},
                                          "pass" if cross_check_transposed(m, n, c) else "fail"))
    return rep
