"""Exchange matrices, seeds, fraction arithmetic and closures."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quiverkit import (
    ExchangeMatrix,
    LaurentFraction,
    a_path_matrix,
    counting_check,
    enumerate_cluster_variables,
    gamma,
    initial_seed,
    is_laurent,
    mutate_matrix,
    mutate_seed,
)


def lf(text, nvars=2):
    return LaurentFraction.from_expr(text, nvars)


def eval_fraction(x, point):
    """Pure-integer evaluation oracle, independent of the sympy backend."""

    def eval_poly(poly):
        total = Fraction(0)
        for monom, coeff in poly.terms():
            term = Fraction(int(coeff))
            for e, val in zip(monom, point):
                term *= Fraction(val) ** int(e)
            total += term
        return total

    den = eval_poly(x.denominator)
    if den == 0:
        return None
    return eval_poly(x.numerator) / den


coeffs = st.integers(-4, 4)
exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
poly_dicts = st.dictionaries(exponents, coeffs, min_size=0, max_size=4)


def to_expr(d):
    import sympy as sp

    u1, u2 = sp.Symbol("u_1"), sp.Symbol("u_2")
    return sum(
        (c * u1**e1 * u2**e2 for (e1, e2), c in d.items()), sp.Integer(0)
    )


sign_skew_entries = st.tuples(st.integers(1, 4), st.integers(1, 4), st.booleans())


@st.composite
def sign_skew_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                continue
            a, b, flip = draw(sign_skew_entries)
            if flip:
                m[i, j], m[j, i] = a, -b
            else:
                m[i, j], m[j, i] = -a, b
    return ExchangeMatrix(m)


@st.composite
def skew_symmetric_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-3, 3))
            m[i, j], m[j, i] = v, -v
    return ExchangeMatrix(m)


class TestMatrixMutation:
    def test_rank_two_example(self):
        M = ExchangeMatrix([[0, 1], [-1, 0]])
        assert mutate_matrix(M, 1) == ExchangeMatrix([[0, -1], [1, 0]])

    def test_zero_matrix_is_fixed(self):
        Z = ExchangeMatrix([[0] * 3 for _ in range(3)])
        for k in (1, 2, 3):
            assert mutate_matrix(Z, k) == Z

    def test_out_of_range_direction(self):
        M = a_path_matrix(3)
        with pytest.raises(IndexError):
            mutate_matrix(M, 0)
        with pytest.raises(IndexError):
            mutate_matrix(M, 4)

    @given(M=sign_skew_matrices())
    @settings(max_examples=80, deadline=None)
    def test_involution(self, M):
        for k in range(1, M.n + 1):
            assert mutate_matrix(mutate_matrix(M, k), k) == M

    @given(M=skew_symmetric_matrices())
    @settings(max_examples=80, deadline=None)
    def test_skew_symmetric_matrices_stay_skew_symmetric(self, M):
        for k in range(1, M.n + 1):
            out = mutate_matrix(M, k).array
            assert (out == -out.T).all()
            assert mutate_matrix(M, k).is_sign_skew_symmetric()

    def test_sign_skew_symmetry_is_not_preserved_in_general(self):
        # Mutation leaves the sign-skew-symmetric class here: entries
        # (2,3) and (3,2) both become negative.  Involution still holds.
        M = ExchangeMatrix([[0, 1, -1], [-2, 0, 1], [1, -3, 0]])
        assert M.is_sign_skew_symmetric()
        out = mutate_matrix(M, 1)
        assert not out.is_sign_skew_symmetric()
        assert out[1, 2] == -1 and out[2, 1] == -2
        assert mutate_matrix(out, 1) == M

    def test_validate(self):
        with pytest.raises(ValueError):
            ExchangeMatrix([[0, 1], [1, 0]]).validate()
        with pytest.raises(ValueError):
            ExchangeMatrix([[0, 1, 0], [-1, 0, 0]])
        assert a_path_matrix(4).validate() is not None


class TestLaurentFraction:
    def test_canonical_equality(self):
        assert lf("(1+u_2)/u_1") == lf("(u_2+1)/u_1")
        assert lf("u_1/(1-u_2)") == lf("-u_1/(u_2-1)")
        assert lf("(2*u_1+2)/2") == lf("u_1+1")
        assert hash(lf("(1+u_2)/u_1")) == hash(lf("(u_2+1)/u_1"))

    def test_rendering(self):
        assert lf("u_1").render() == "u_1"
        assert lf("(1+u_1+u_2)/(u_1*u_2)").render() == "(u_1 + u_2 + 1) / u_1*u_2"
        assert lf("2/u_1").render() == "2 / u_1"
        assert lf("(u_1^2 + 3*u_1)/u_2", 2).render() == "(u_1^2 + 3*u_1) / u_2"

    def test_is_laurent_examples(self):
        assert is_laurent(lf("(1+u_1+u_2)/(u_1*u_2)"))
        assert not is_laurent(lf("u_1/(1+u_2)"))
        assert is_laurent(lf("u_1"))
        assert not is_laurent(lf("u_1/(2*u_2)"))

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            lf("u_1") / lf("0")

    @given(a=poly_dicts, b=poly_dicts, c=poly_dicts)
    @settings(max_examples=60, deadline=None)
    def test_reduction_is_canonical(self, a, b, c):
        assume(any(v for v in b.values()))
        assume(any(v for v in c.values()))
        ea, eb, ec = to_expr(a), to_expr(b), to_expr(c)
        plain = LaurentFraction.from_expr(ea, 2) / LaurentFraction.from_expr(eb, 2)
        inflated = LaurentFraction.from_expr(ea * ec, 2) / LaurentFraction.from_expr(
            eb * ec, 2
        )
        assert plain == inflated

    @given(a=poly_dicts, b=poly_dicts, c=poly_dicts, d=poly_dicts)
    @settings(max_examples=60, deadline=None)
    def test_arithmetic_matches_integer_evaluation_oracle(self, a, b, c, d):
        assume(any(v for v in b.values()))
        assume(any(v for v in d.values()))
        x = LaurentFraction.from_expr(to_expr(a), 2) / LaurentFraction.from_expr(
            to_expr(b), 2
        )
        y = LaurentFraction.from_expr(to_expr(c), 2) / LaurentFraction.from_expr(
            to_expr(d), 2
        )
        for point in ((2, 3), (-1, 5), (7, -2)):
            vx, vy = eval_fraction(x, point), eval_fraction(y, point)
            if vx is None or vy is None:
                continue
            vsum = eval_fraction(x + y, point)
            vprod = eval_fraction(x * y, point)
            if vsum is not None:
                assert vsum == vx + vy
            if vprod is not None:
                assert vprod == vx * vy


class TestSeedMutation:
    def test_rank_two_exchange(self):
        seed = initial_seed(ExchangeMatrix([[0, 1], [-1, 0]]))
        out = mutate_seed(seed, 1)
        assert out.cluster[0] == lf("(1+u_2)/u_1")
        assert out.cluster[1] == lf("u_2")
        assert out.matrix == ExchangeMatrix([[0, -1], [1, 0]])

    def test_involution_on_seeds(self):
        for n in (1, 2, 3):
            seed = initial_seed(a_path_matrix(n))
            for k in range(1, n + 1):
                once = mutate_seed(seed, k)
                assert mutate_seed(once, k) == seed
                for k2 in range(1, n + 1):
                    twice = mutate_seed(once, k2)
                    assert mutate_seed(twice, k2) == once

    def test_rank_one_empty_products(self):
        seed = initial_seed(ExchangeMatrix([[0]]))
        out = mutate_seed(seed, 1)
        assert out.cluster[0] == LaurentFraction.from_expr("2/u_1", 1)

    def test_direction_out_of_range(self):
        with pytest.raises(IndexError):
            mutate_seed(initial_seed(a_path_matrix(2)), 3)


class TestClosure:
    def test_rank_one(self):
        res = enumerate_cluster_variables(ExchangeMatrix([[0]]))
        assert res.variables == frozenset(
            {LaurentFraction.from_expr("u_1", 1), LaurentFraction.from_expr("2/u_1", 1)}
        )
        assert not res.cap_reached

    def test_rank_two_pentagon(self):
        res = enumerate_cluster_variables(ExchangeMatrix([[0, 1], [-1, 0]]))
        expected = {
            lf("u_1"),
            lf("u_2"),
            lf("(1+u_2)/u_1"),
            lf("(1+u_1)/u_2"),
            lf("(1+u_1+u_2)/(u_1*u_2)"),
        }
        assert res.variables == frozenset(expected)
        assert res.seed_count == 5  # the exchange graph is a pentagon
        assert all(is_laurent(x) for x in res.variables)

    def test_rank_three_path(self):
        res = enumerate_cluster_variables(a_path_matrix(3))
        assert len(res.variables) == 9
        assert res.seed_count == 14  # clusters of the associahedron
        assert all(is_laurent(x) for x in res.variables)

    def test_orientation_independence_of_the_count(self):
        reversed_path = ExchangeMatrix(
            [[0, -1, 0], [1, 0, -1], [0, 1, 0]]
        )
        res = enumerate_cluster_variables(reversed_path)
        assert len(res.variables) == 9

    def test_cap_is_a_flag_not_an_error(self):
        res = enumerate_cluster_variables(a_path_matrix(3), cap=3)
        assert res.cap_reached
        assert res.seed_count <= 3

    def test_non_sign_skew_input_is_rejected(self):
        with pytest.raises(ValueError):
            enumerate_cluster_variables(ExchangeMatrix([[0, 2], [2, 0]]))


class TestCounting:
    def test_counts_match_polygon_diagonals(self):
        for n in (1, 2, 3):
            assert counting_check(n)

    def test_explicit_counts(self):
        res = enumerate_cluster_variables(a_path_matrix(2))
        assert len(res.variables) == len(gamma(3, 1).vertices) == 5

    def test_range_guard(self):
        with pytest.raises(ValueError):
            counting_check(0)
        with pytest.raises(ValueError):
            counting_check(6)
