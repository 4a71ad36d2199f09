"""Fock space tests against a differential-operator model in sympy.

The oracle realises the Fock space as polynomials in commuting variables
``x[c, k]`` (basis index ``c``, level ``k``).  ``a_c(-k)`` multiplies by
``x[c, k]`` and ``a_b(k)`` is ``k * sum_c <b, c> d/dx[c, k]``.  The generating
series ``exp(sum_k a(-k) t^k / k)`` gives the ``p^(n)`` and likewise for ``q``.
Nothing here goes through normal ordering.
"""

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from heiscat import fock, heisenberg as hz
from heiscat.checks import random_word
from heiscat.fock import FockVector
from heiscat.heisenberg import AlgebraElement, P, Q, Word
from heiscat.lattice import Lattice

@lru_cache(maxsize=None)
def xvar(c, k):
    return sympy.Symbol(f"x_{c}_{k}")


@lru_cache(maxsize=None)
def h_terms(n):
    """``h_n`` in power sums: ``[(coeff, {k: multiplicity})]``."""
    out = []
    for lam in fock.partitions(n):
        mult = {k: lam.count(k) for k in set(lam)}
        z = 1
        for k, m in mult.items():
            z *= k**m * factorial(m)
        out.append((sympy.Rational(1, z), mult))
    return out


def h_poly(c, n):
    return sum(coeff * sympy.prod([xvar(c, k) ** m for k, m in mult.items()]) for coeff, mult in h_terms(n))


class Oracle:
    def __init__(self, gram):
        self.gram = gram
        self.rank = len(gram)

    def annihilate(self, b, k, f):
        return sympy.expand(k * sum(self.gram[b][c] * sympy.diff(f, xvar(c, k)) for c in range(self.rank)))

    def apply_letter(self, letter, f):
        kind, i, n = letter
        if kind == P:
            return sympy.expand(h_poly(i, n) * f)
        acc = sympy.Integer(0)
        for coeff, mult in h_terms(n):
            g = f
            for k, m in mult.items():
                for _ in range(m):
                    g = self.annihilate(i, k, g)
            acc += coeff * g
        return sympy.expand(acc)

    def apply(self, x, f):
        acc = sympy.Integer(0)
        for w, c in x.items():
            g = f if w.weight is None else project(f, w.weight)
            for letter in reversed(w.letters):
                g = self.apply_letter(letter, g)
            acc += sympy.Rational(c.numerator, c.denominator) * g
        return sympy.expand(acc)


def weighted_degree(term):
    return sum(int(str(s).rsplit("_", 1)[1]) * e for s, e in term.as_powers_dict().items() if s.is_Symbol)


def project(f, k):
    f = sympy.expand(f)
    return sympy.Add(*[t for t in sympy.Add.make_args(f) if t != 0 and weighted_degree(t) == k])


def to_poly(v):
    acc = sympy.Integer(0)
    for mono, c in v.items():
        acc += sympy.Rational(c.numerator, c.denominator) * sympy.prod([h_poly(i, m) for i, m in mono])
    return sympy.expand(acc)


def random_element(rng, rank, terms=2, max_len=3):
    acc = hz.ZERO
    for _ in range(terms):
        w = random_word(rng, rank, max_len, max_level=2, weight=rng.choice([None, rng.randint(0, 4)]))
        acc = acc + w.scale(rng.randint(-3, 3))
    return acc


def random_vector(rng, rank, max_degree=4):
    d = rng.randint(0, max_degree)
    b = fock.basis(d, rank)
    return FockVector({m: rng.randint(-2, 2) for m in rng.sample(b, min(2, len(b)))})


class TestOracleAgreement:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 2))
    def test_act_matches_differential_model(self, seed, rank):
        rng = random.Random(seed)
        gram = [[rng.randint(-2, 3) for _ in range(rank)] for _ in range(rank)]
        lat = Lattice(gram)
        x = random_element(rng, rank)
        v = random_vector(rng, rank)
        assert to_poly(fock.act(x, v, lat)) == Oracle(gram).apply(x, to_poly(v))

    def test_power_sums_are_variables(self):
        gram = [[2, 1], [0, 3]]
        lat = Lattice(gram)
        assert to_poly(fock.act(hz.to_power_sums(1, -3, lat), fock.vacuum(), lat)) == xvar(1, 3)
        v = fock.act(hz.to_power_sums(0, -2, lat), fock.vacuum(), lat)
        # a_1(2) x[0,2] = 2 <1, 0> = 0 and a_0(2) x[0,2] = 2 <0, 0> = 4
        assert fock.act(hz.to_power_sums(1, 2, lat), v, lat) == FockVector()
        assert fock.act(hz.to_power_sums(0, 2, lat), v, lat) == fock.vacuum().scale(4)


class TestVacuum:
    def test_vacuum(self):
        assert dict(fock.vacuum()) == {(): 1}

    def test_idempotents(self):
        lat = Lattice([[1]])
        assert fock.act(hz.idempotent(0), fock.vacuum(), lat) == fock.vacuum()
        for k in (-2, -1, 1, 3):
            assert fock.act(hz.idempotent(k), fock.vacuum(), lat) == FockVector()

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("k", [0, 1])
    def test_annihilators_kill_vacuum(self, n, k):
        lat = Lattice([[1, 2], [0, 1]])
        for i in range(2):
            assert fock.act(hz.generator(Q, i, n, k), fock.vacuum(), lat) == FockVector()


class TestAct:
    def test_creation(self):
        assert fock.act(hz.generator(P, 0, 2, 0), fock.vacuum(), Lattice([[1]])) == fock.monomial((0, 2))

    @pytest.mark.parametrize("c", [-2, 1, 5])
    def test_q_on_p(self, c):
        lat = Lattice([[c]])
        assert fock.act(hz.generator(Q, 0, 1, 1), fock.monomial((0, 1)), lat) == fock.vacuum().scale(c)

    def test_q2_on_p1_squared(self):
        lat = Lattice([[1]])
        assert fock.act(hz.generator(Q, 0, 2, 2), fock.monomial((0, 1), (0, 1)), lat) == fock.vacuum()

    def test_weight_filter(self):
        lat = Lattice([[1]])
        v = fock.monomial((0, 1))
        assert fock.act(hz.generator(P, 0, 1, 0), v, lat) == FockVector()
        assert fock.act(hz.generator(P, 0, 1, 1), v, lat) == fock.monomial((0, 1), (0, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_module_axiom(self, seed):
        rng = random.Random(seed)
        rank = rng.randint(1, 2)
        lat = Lattice([[rng.randint(-2, 3) for _ in range(rank)] for _ in range(rank)])
        x, y = random_element(rng, rank), random_element(rng, rank)
        v = random_vector(rng, rank)
        assert fock.act(hz.mul(x, y, lat), v, lat) == fock.act(x, fock.act(y, v, lat), lat)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 5), st.integers(1, 3), st.integers(0, 2**32 - 1))
    def test_weight_grading(self, k, m, seed):
        rng = random.Random(seed)
        lat = Lattice([[1, 0], [0, 1]])
        v = random_vector(rng, 2)
        out = fock.act(hz.generator(P, rng.randrange(2), m, k), v, lat)
        assert out.degrees() <= {k + m}
        assert fock.act(hz.idempotent(k + m), out, lat) == out
        if k not in v.degrees():
            assert out == FockVector()


class TestBasisAndDimensions:
    def test_degree_zero(self):
        assert fock.basis(0, 3) == [()]

    def test_two_two(self):
        assert sorted(fock.basis(2, 2)) == sorted([((0, 2),), ((1, 2),), ((0, 1), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (1, 1))])

    def test_partitions_of_five(self):
        assert len(fock.basis(5, 1)) == 7
        brute = {tuple(sorted(c, reverse=True)) for k in range(1, 6)
                 for c in itertools.product(range(1, 6), repeat=k) if sum(c) == 5}
        assert len(brute) == 7 and set(fock.partitions(5)) == brute

    def test_graded_dim_examples(self):
        assert fock.graded_dim(2, 2) == 5
        assert [fock.graded_dim(n, 0) for n in range(4)] == [1, 0, 0, 0]

    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_graded_dim_series(self, r):
        # prod_m (1 - t^m)^(-r) mod t^9, each factor a truncated geometric series
        t = sympy.Symbol("t")
        f = sympy.Poly(1, t)
        for m in range(1, 9):
            geom = sympy.Poly(sum(t ** (m * j) for j in range(8 // m + 1)), t)
            for _ in range(r):
                f = sympy.Poly(sum(c * t**e for (e,), c in (f * geom).terms() if e <= 8), t)
        coeffs = [f.coeff_monomial(t**n) for n in range(9)]
        assert [fock.graded_dim(n, r) for n in range(9)] == coeffs

    @pytest.mark.parametrize("n", range(9))
    @pytest.mark.parametrize("r", range(4))
    def test_dimension_identities(self, n, r):
        assert fock.graded_dim(n, r) == len(fock.basis(n, r)) == fock.partition_sum_dim(n, r)

    def test_parts_reading_differs(self):
        # summing over parts rather than multiplicities overcounts once rank > 1
        assert fock.partition_parts_dim(2, 2) == 7 != fock.graded_dim(2, 2)
        assert all(fock.partition_parts_dim(n, 1) == fock.graded_dim(n, 1) for n in range(9))

    def test_multiplicities(self):
        assert fock.multiplicities((3, 1, 1)) == (2, 0, 1)
        assert fock.multiplicities(()) == ()


class TestMatrixOf:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_idempotent_is_identity(self, n):
        lat = Lattice([[1, 0], [0, 1]])
        m = fock.matrix_of(hz.idempotent(n), n, lat)
        size = len(fock.basis(n, 2))
        assert m == [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_creation_is_injective(self, n):
        from heiscat._linalg import rank
        lat = Lattice([[1, 0], [0, 1]])
        m = fock.matrix_of(hz.generator(P, 0, 1, n), n, lat)
        assert rank(m) == len(fock.basis(n, 2))

    def test_annihilation_to_vacuum(self):
        lat = Lattice([[1]])
        m = fock.matrix_of(hz.generator(Q, 0, 2, 2), 2, lat)
        cols = fock.basis(2, 1)
        assert m == [[fock.act(hz.generator(Q, 0, 2, 2), FockVector({c: 1}), lat)[()] for c in cols]]

    def test_inhomogeneous(self):
        with pytest.raises(ValueError):
            fock.matrix_of(hz.generator(P, 0, 1) + hz.generator(P, 0, 2), 0, Lattice([[1]]))


class TestFaithfulness:
    def test_rank_one_degree_two(self):
        r = fock.faithfulness_report(2, Lattice([[1]]))
        assert r.word_count == 16 and r.full_rank

    def test_rank_zero(self):
        r = fock.faithfulness_report(3, Lattice([]))
        assert r.word_count == 1 and r.full_rank

    def test_degenerate(self):
        with pytest.raises(fock.DegenerateForm):
            fock.faithfulness_report(2, Lattice([[0]]))

    def test_idempotent_words_are_not_separated(self):
        # why the report uses unital words: these two agree on every F_n
        lat = Lattice([[1]])
        a = AlgebraElement.word(Word(((P, 0, 1),), 1))
        b = AlgebraElement.word(Word(((P, 0, 1), (P, 0, 1), (Q, 0, 1)), 1))
        for n in range(4):
            for mono in fock.basis(n, 1):
                v = FockVector({mono: 1})
                assert fock.act(a, v, lat) == fock.act(b, v, lat)

    def test_json(self):
        r = fock.faithfulness_report(1, Lattice([[2]]))
        assert r.to_json()["words"] == 4 and r.to_json()["full_rank"]


class TestFockVector:
    def test_json_round_trip(self):
        v = FockVector({((0, 1), (1, 2)): Fraction(3, 2), (): -1})
        assert FockVector.from_json(v.to_json()) == v

    def test_zero_coefficients_dropped(self):
        v = fock.monomial((0, 1)) - fock.monomial((0, 1))
        assert len(v) == 0 and v == FockVector()

    def test_homogeneous(self):
        v = fock.vacuum() + fock.monomial((0, 2))
        assert v.homogeneous(2) == fock.monomial((0, 2))
