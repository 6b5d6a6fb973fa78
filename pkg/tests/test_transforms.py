import logging
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from golden import H3_PATTERN, KRAW
from oracles import dense, flip_operator_by_index

from krawtchouk.matrix import ExactMatrix
from krawtchouk.transforms import (
    H1,
    CeilingExceeded,
    TransformPlan,
    fwht,
    fwht_array,
    hadamard_matrix,
    kraw_inverse,
    kraw_transform,
    kronecker,
    kronecker_all,
)

F1 = ExactMatrix.from_rows([[0, 1], [1, 0]])
I2 = ExactMatrix.identity(2)


class TestKronecker:
    def test_h_times_h(self):
        assert kronecker(H1, H1).to_rows() == [
            [1, 1, 1, 1],
            [1, -1, 1, -1],
            [1, 1, -1, -1],
            [1, -1, -1, 1],
        ]

    def test_identity_times_a(self):
        A = ExactMatrix.from_rows([[1, 2], [3, 4]])
        assert kronecker(I2, A).to_rows() == [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]]

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_flip_factor_order(self, k):
        # first tensor factor acts on the most significant label bit
        factors = [F1 if i == k else I2 for i in (1, 2, 3)]
        got = np.array(kronecker_all(*factors).to_rows())
        assert (got == flip_operator_by_index(3, k)).all()

    def test_matches_numpy(self):
        A = ExactMatrix.from_rows([[1, -2, 0], [3, 4, 5]])
        B = ExactMatrix.from_rows([[0, 7], [-1, 2]])
        assert (np.array(kronecker(A, B).to_rows()) == np.kron(np.array(A.to_rows()), np.array(B.to_rows()))).all()


class TestHadamard:
    def test_h1(self):
        assert hadamard_matrix(1).to_rows() == [[1, 1], [1, -1]]

    def test_h3_pattern(self):
        expected = [[1 if c == "+" else -1 for c in row] for row in H3_PATTERN]
        assert hadamard_matrix(3).to_rows() == expected

    def test_h2_row_three(self):
        assert list(hadamard_matrix(2).row(3)) == [1, -1, -1, 1]

    def test_ceiling(self):
        with pytest.raises(CeilingExceeded, match="hadamard-cap"):
            hadamard_matrix(5, cap=4)
        assert hadamard_matrix(5, cap=5).rows == 32

    def test_bad_power(self):
        with pytest.raises(ValueError):
            hadamard_matrix(0)


class TestFwht:
    def test_unit_vector(self):
        assert fwht([1, 0, 0, 0]) == [1, 1, 1, 1]

    def test_constant_vector(self):
        assert fwht([1, 1, 1, 1]) == [4, 0, 0, 0]

    def test_dense_n6(self):
        rng = np.random.default_rng(1)
        v = rng.integers(-100, 100, size=64).tolist()
        H = dense(hadamard_matrix(6))
        assert fwht(v) == list(H.dot(np.array(v, dtype=object)))

    @pytest.mark.parametrize("N", range(1, 11))
    def test_dense_equality(self, N):
        rng = np.random.default_rng(N)
        v = rng.integers(-1000, 1000, size=1 << N).tolist()
        assert fwht(v) == hadamard_matrix(N).matvec(v)

    @pytest.mark.parametrize("N", [1, 4, 9, 16])
    def test_involution(self, N):
        rng = np.random.default_rng(N)
        v = rng.integers(-50, 50, size=1 << N)
        twice = fwht_array(fwht_array(v))
        assert (twice == (v << N)).all()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_mixed_product(self, n1, n2, data):
        # (H_a (x) H_b)(u (x) w) = H_a u (x) H_b w
        u = data.draw(st.lists(st.integers(-20, 20), min_size=1 << n1, max_size=1 << n1))
        w = data.draw(st.lists(st.integers(-20, 20), min_size=1 << n2, max_size=1 << n2))
        uw = np.kron(np.array(u), np.array(w)).tolist()
        assert fwht(uw) == np.kron(np.array(fwht(u)), np.array(fwht(w))).tolist()

    def test_big_integers_fall_back(self, caplog):
        big = 2**62
        with caplog.at_level(logging.INFO, logger="krawtchouk.transforms"):
            out = fwht([big, big, big, -big])
        assert out == [2 * big, 2 * big, 2 * big, -2 * big]
        assert "arbitrary-precision" in caplog.text
        assert fwht([2**70, 0]) == [2**70, 2**70]

    def test_int64_min_does_not_wrap(self):
        lo = -(2**63)
        assert fwht([lo, lo]) == [2 * lo, 0]

    def test_non_power_of_two(self):
        with pytest.raises(ValueError, match="power of two"):
            fwht([1, 2, 3])

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            fwht([1.5, 0])

    def test_plan(self):
        plan = TransformPlan.for_power(3)
        assert plan.strides == (1, 2, 4)
        assert fwht([1] * 8, plan) == [8] + [0] * 7
        with pytest.raises(ValueError):
            fwht([1] * 4, plan)

    def test_batched_rows(self):
        a = np.arange(16).reshape(2, 8)
        out = fwht_array(a)
        assert out[0].tolist() == fwht(list(range(8)))
        assert out[1].tolist() == fwht(list(range(8, 16)))


class TestKrawTransform:
    def test_forward_all_ones(self):
        # row sums of K^(4)
        assert kraw_transform([1] * 5, 4) == [5, 0, 10, 0, 1]

    @pytest.mark.parametrize("N", range(7))
    def test_forward_unit_vectors_give_columns(self, N):
        for j in range(N + 1):
            e = [0] * (N + 1)
            e[j] = 1
            assert kraw_transform(e, N) == [row[j] for row in KRAW[N]]

    def test_inverse_examples(self):
        assert kraw_inverse([1, 0], 1) == [Fraction(1, 2), Fraction(1, 2)]
        assert kraw_inverse([1, 2, 1], 2) == [1, 0, 0]

    @given(st.integers(0, 10).flatmap(lambda N: st.lists(st.integers(-10**6, 10**6), min_size=N + 1, max_size=N + 1)))
    def test_round_trip(self, v):
        N = len(v) - 1
        assert kraw_inverse(kraw_transform(v, N), N) == v

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            kraw_transform([1, 2], 3)
        with pytest.raises(ValueError):
            kraw_inverse([1, 2], 3)
