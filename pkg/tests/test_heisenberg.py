import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from heiscat import heisenberg as hz
from heiscat.checks import random_word
from heiscat.heisenberg import AlgebraElement, P, Q, Word, normal_word
from heiscat.lattice import DimensionMismatch, Lattice, diagonalizing_map


def gen(kind, i, n, w=None):
    return hz.generator(kind, i, n, w)


def word_el(p=(), q=(), weight=0, c=1):
    return AlgebraElement.word(normal_word(p, q, weight), c)


def expected_qp(a, b, m, n, chi, weight):
    """Right-hand side of the q^(m) p^(n) relation, built straight from s_binom."""
    acc = hz.ZERO
    for i in range(min(m, n) + 1):
        ps = ((b, n - i),) if n > i else ()
        qs = ((a, m - i),) if m > i else ()
        acc = acc + word_el(ps, qs, weight, hz.s_binom(i, chi))
    return acc


class TestSBinom:
    @pytest.mark.parametrize("r", [-3, -1, 0, 1, 5])
    def test_zero(self, r):
        assert hz.s_binom(0, r) == 1

    def test_values(self):
        assert hz.s_binom(2, 2) == 3
        assert hz.s_binom(2, -1) == 0

    @pytest.mark.parametrize("k,r", [(k, r) for k in range(5) for r in range(1, 5)])
    def test_counts_symmetric_monomials(self, k, r):
        assert hz.s_binom(k, r) == sum(1 for _ in itertools.combinations_with_replacement(range(r), k))

    def test_negative_k(self):
        with pytest.raises(ValueError):
            hz.s_binom(-1, 2)


class TestNormalOrder:
    def test_qp_rank_one(self):
        lat = Lattice([[1]])
        x = hz.product([gen(Q, 0, 1), gen(P, 0, 1), hz.idempotent(0)], lat)
        assert x == hz.idempotent(0) + word_el(((0, 1),), ((0, 1),))

    def test_p_commute(self):
        lat = Lattice([[1, 0], [0, 1]])
        x = hz.normal_order(AlgebraElement.word(Word(((P, 1, 1), (P, 0, 1)), 0)), lat)
        assert x == word_el(((0, 1), (1, 1)))

    def test_q2_p3(self):
        lat = Lattice([[2]])
        x = hz.normal_order(AlgebraElement.word(Word(((Q, 0, 2), (P, 0, 3)), 0)), lat)
        want = word_el(((0, 3),), ((0, 2),)) + word_el(((0, 2),), ((0, 1),), c=2) + word_el(((0, 1),), c=3)
        assert x == want

    def test_orders_with_nonsymmetric_form(self):
        # <a, b> is gram[a][b]; q_1 p_0 picks up gram[1][0]
        lat = Lattice([[1, 2], [0, 1]])
        x = hz.normal_order(AlgebraElement.word(Word(((Q, 1, 1), (P, 0, 1)), 0)), lat)
        assert x == word_el(((0, 1),), ((1, 1),))
        y = hz.normal_order(AlgebraElement.word(Word(((Q, 0, 1), (P, 1, 1)), 0)), lat)
        assert y == word_el(((1, 1),), ((0, 1),)) + word_el(c=2)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
    @pytest.mark.parametrize("chi", [-2, 0, 3])
    def test_relation_grid(self, m, n, chi):
        lat = Lattice([[chi]])
        x = hz.product([gen(Q, 0, m), gen(P, 0, n), hz.idempotent(1)], lat)
        assert x == expected_qp(0, 0, m, n, chi, 1)

    def test_index_checked(self):
        with pytest.raises(DimensionMismatch):
            hz.normal_order(gen(P, 3, 1), Lattice([[1]]))


class TestMul:
    def test_idempotents(self):
        lat = Lattice([[1]])
        assert hz.mul(hz.idempotent(0), hz.idempotent(0), lat) == hz.idempotent(0)
        assert hz.mul(hz.idempotent(1), hz.idempotent(0), lat) == hz.ZERO

    def test_zero(self):
        assert hz.mul(gen(P, 0, 2, 0), hz.ZERO, Lattice([[1]])) == hz.ZERO

    def test_weight_chain(self):
        lat = Lattice([[1]])
        x = hz.mul(gen(P, 0, 1, 0), gen(Q, 0, 1, 1), lat)
        assert x == word_el(((0, 1),), ((0, 1),), weight=1)

    def test_idempotent_absorbs(self):
        lat = Lattice([[1]])
        # 1_{k+m} p^(m) = p^(m) 1_k
        assert hz.mul(hz.idempotent(5), gen(P, 0, 2), lat) == gen(P, 0, 2, 3)
        assert hz.mul(hz.idempotent(4), gen(P, 0, 2, 3), lat) == hz.ZERO

    def test_level_conventions(self):
        assert gen(P, 0, 0) == hz.one()
        assert gen(Q, 0, -1) == hz.ZERO


class TestVectorGenerators:
    def test_sum_of_basis(self):
        lat = Lattice([[1, 0], [0, 1]])
        assert hz.expand_vector_generator(P, (1, 1), 1, lat) == gen(P, 0, 1) + gen(P, 1, 1)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_zero_vector(self, n):
        assert hz.expand_vector_generator(P, (0, 0), n, Lattice([[1, 0], [0, 1]])) == hz.ZERO

    def test_negative(self):
        lat = Lattice([[1]])
        want = AlgebraElement.word(Word(((P, 0, 1), (P, 0, 1)))) - gen(P, 0, 2)
        assert hz.expand_vector_generator(P, (-1,), 2, lat) == want

    def test_length_checked(self):
        with pytest.raises(DimensionMismatch):
            hz.expand_vector_generator(P, (1,), 1, Lattice([[1, 0], [0, 1]]))

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([P, Q]), st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
           st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(0, 5))
    def test_additivity(self, kind, a, b, n):
        # p_{a+b}^(n) = sum_k p_a^(k) p_b^(n-k)
        lat = Lattice([[1, 2], [0, 1]])
        total = hz.ZERO
        for k in range(n + 1):
            total = total + hz.mul(hz.expand_vector_generator(kind, a, k, lat),
                                   hz.expand_vector_generator(kind, b, n - k, lat), lat)
        ab = tuple(x + y for x, y in zip(a, b))
        assert total == hz.expand_vector_generator(kind, ab, n, lat)


def h_poly(k, xs):
    return sum(sympy.prod(c) for c in itertools.combinations_with_replacement(xs, k)) if k else sympy.Integer(1)


def to_symmetric(x, xs):
    """Read p^(k) as the complete homogeneous polynomial h_k (p's commute)."""
    acc = sympy.Integer(0)
    for w, c in x.items():
        assert not w.q_part
        term = sympy.Rational(c.numerator, c.denominator)
        for _, k in w.p_part:
            term *= h_poly(k, xs)
        acc += term
    return sympy.expand(acc)


class TestPowerSums:
    def test_degree_one(self):
        assert hz.to_power_sums(0, -1, Lattice([[1]])) == gen(P, 0, 1)

    def test_degree_two(self):
        want = gen(P, 0, 2).scale(2) - AlgebraElement.word(Word(((P, 0, 1), (P, 0, 1))))
        assert hz.to_power_sums(0, -2, Lattice([[1]])) == want

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_newton_against_symmetric_functions(self, n):
        xs = sympy.symbols(f"x0:{n}")
        got = to_symmetric(hz.to_power_sums(0, -n, Lattice([[1]])), xs)
        assert sympy.expand(got - sum(x**n for x in xs)) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_round_trip(self, n):
        lat = Lattice([[2]])
        expr = hz.divided_power_in_power_sums(P, 0, n)
        assert hz.from_power_sums(expr, lat) == gen(P, 0, n)
        expr_q = hz.divided_power_in_power_sums(Q, 0, n)
        assert hz.from_power_sums(expr_q, lat) == gen(Q, 0, n)

    def test_a_zero(self):
        with pytest.raises(ValueError):
            hz.to_power_sums(0, 0, Lattice([[1]]))


class TestCommutator:
    def test_a1_am1(self):
        lat = Lattice([[3]])
        c = hz.commutator(hz.to_power_sums(0, 1, lat), hz.to_power_sums(0, -1, lat), lat)
        assert hz.mul(c, hz.idempotent(0), lat) == hz.scalar(3, 0)

    def test_p_commute(self):
        lat = Lattice([[1, 5], [-2, 1]])
        assert hz.commutator(gen(P, 0, 1), gen(P, 1, 1), lat) == hz.ZERO

    @pytest.mark.parametrize("k", [0, 1, 4])
    def test_mismatched_levels(self, k):
        lat = Lattice([[3]])
        c = hz.commutator(hz.to_power_sums(0, 2, lat), hz.to_power_sums(0, -1, lat), lat)
        assert hz.mul(c, hz.idempotent(k), lat) == hz.ZERO

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, 6)])
    def test_grid_rank_two(self, m, n):
        lat = Lattice([[1, 2], [-1, 3]])
        for b, c in itertools.product(range(2), repeat=2):
            comm = hz.commutator(hz.to_power_sums(b, m, lat), hz.to_power_sums(c, -n, lat), lat)
            want = hz.scalar(m * lat.gram[b][c]) if m == n else hz.ZERO
            assert comm == want


class TestEqual:
    def test_relation(self):
        lat = Lattice([[4]])
        lhs = AlgebraElement.word(Word(((Q, 0, 1), (P, 0, 1)), 0))
        rhs = hz.scalar(4, 0) + word_el(((0, 1),), ((0, 1),))
        assert hz.equal(lhs, rhs, lat)

    def test_reflexive_and_idempotents(self):
        lat = Lattice([[1]])
        x = gen(Q, 0, 2, 3)
        assert hz.equal(x, x, lat)
        assert not hz.equal(hz.idempotent(0), hz.idempotent(1), lat)


word_params = st.tuples(st.integers(0, 2**32 - 1), st.integers(1, 3))


class TestRewriting:
    @settings(max_examples=80, deadline=None)
    @given(word_params)
    def test_terminates(self, params):
        seed, rank = params
        rng = random.Random(seed)
        lat = Lattice([[rng.randint(-2, 3) for _ in range(rank)] for _ in range(rank)])
        w = random_word(rng, rank, 8, max_level=2)
        assert hz.rewrite(w, lat, "rightmost", max_steps=10**5).is_normal()

    @settings(max_examples=80, deadline=None)
    @given(word_params)
    def test_confluence(self, params):
        seed, rank = params
        rng = random.Random(seed)
        lat = Lattice([[rng.randint(-2, 3) for _ in range(rank)] for _ in range(rank)])
        w = random_word(rng, rank, 6)
        a = hz.rewrite(w, lat, "random", random.Random(seed))
        b = hz.rewrite(w, lat, "random", random.Random(seed + 1))
        assert a == b == hz.rewrite(w, lat, "leftmost") == hz.normal_order(w, lat)

    def test_step_limit(self):
        lat = Lattice([[1]])
        w = AlgebraElement.word(Word(((Q, 0, 3), (P, 0, 3)), 0))
        with pytest.raises(RuntimeError):
            hz.rewrite(w, lat, max_steps=0)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            hz.rewrite(AlgebraElement.word(Word(((Q, 0, 1), (P, 0, 1)))), Lattice([[1]]), "outermost")


class TestChangeOfForm:
    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2),
           st.integers(0, 2**32 - 1))
    def test_substitution_is_homomorphism(self, gram, seed):
        lat = Lattice(gram)
        gmap = diagonalizing_map(lat)
        rng = random.Random(seed)
        w = random_word(rng, 2, 4, weight=rng.randint(-2, 2))
        assert hz.substitute(hz.normal_order(w, gmap.source), gmap) == hz.substitute(w, gmap)

    def test_generator_images(self):
        gmap = diagonalizing_map(Lattice([[1, 2], [0, 1]]))
        for i, v in enumerate(gmap.p_images):
            assert hz.substitute(gen(P, i, 1), gmap) == hz.expand_vector_generator(P, v, 1, gmap.target)


class TestSerialization:
    def test_json_round_trip(self):
        lat = Lattice([[2]])
        x = hz.normal_order(AlgebraElement.word(Word(((Q, 0, 2), (P, 0, 3)), 0)), lat).scale(Fraction(1, 3))
        assert AlgebraElement.from_json(x.to_json()) == x
        assert {"coeff": "1/3", "p": [[0, 3]], "q": [[0, 2]], "weight": 0} in x.to_json()

    def test_str(self):
        lat = Lattice([[1]])
        x = hz.product([gen(Q, 0, 1), gen(P, 0, 1), hz.idempotent(0)], lat)
        assert str(x) == "1_{0} + p[1]^(1)*q[1]^(1)*1_{0}"

    def test_wrapper(self):
        h = hz.HeisenbergAlgebra([[1]])
        assert h.equal(h.mul(h.q(0), h.p(0)), hz.one() + h.mul(h.p(0), h.q(0)))
