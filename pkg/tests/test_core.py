import pytest
from hypothesis import given, strategies as st

from golden import KRAW, SYM_KRAW
from oracles import pascal_binomial

from krawtchouk.core import (
    binomial,
    binomial_diagonal,
    check_identities,
    kraw_entry,
    kraw_matrix,
    kraw_matrix_square_fill,
    sym_kraw_matrix,
)
from krawtchouk.matrix import ExactMatrix


class TestBinomial:
    def test_values(self):
        assert binomial(4, 2) == 6
        assert binomial(5, 0) == 1

    def test_beyond_64_bits(self):
        expected = pascal_binomial(66, 33)
        assert expected == 7219428434016265740
        assert binomial(66, 33) == expected

    @pytest.mark.parametrize("k", [-1, 6, 100])
    def test_out_of_range_is_zero(self, k):
        assert binomial(5, k) == 0

    def test_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(0, 80), st.integers(-3, 83))
    def test_matches_pascal(self, n, k):
        assert binomial(n, k) == pascal_binomial(n, k)


class TestEntries:
    def test_values(self):
        assert kraw_entry(4, 1, 1) == 2
        assert kraw_entry(6, 3, 2) == -4

    @pytest.mark.parametrize("N", range(8))
    def test_top_row_ones(self, N):
        assert all(kraw_entry(N, 0, j) == 1 for j in range(N + 1))

    def test_index_error(self):
        with pytest.raises(IndexError):
            kraw_entry(3, 4, 0)
        with pytest.raises(IndexError):
            kraw_entry(3, 0, -1)


@pytest.mark.parametrize("N", sorted(KRAW))
def test_kraw_matrix_table(N):
    assert kraw_matrix(N) == ExactMatrix.from_rows(KRAW[N])


def test_kraw_matrix_small_displays():
    assert kraw_matrix(0).to_rows() == [[1]]
    assert kraw_matrix(2).to_rows() == [[1, 1, 1], [2, 0, -2], [1, -1, 1]]


def test_square_fill():
    assert kraw_matrix_square_fill(1).to_rows() == [[1, 1], [1, -1]]
    K3 = kraw_matrix_square_fill(3)
    assert list(K3.row(0)) == [1, 1, 1, 1]
    assert list(K3.col(3)) == [1, -3, 3, -1]
    assert K3 == ExactMatrix.from_rows(KRAW[3])
    assert kraw_matrix_square_fill(5) == kraw_matrix(5)


def test_binomial_diagonal():
    assert binomial_diagonal(3) == ExactMatrix.diagonal([1, 3, 3, 1])
    assert binomial_diagonal(0).to_rows() == [[1]]
    assert binomial_diagonal(6).diag() == [pascal_binomial(6, i) for i in range(7)]
    assert binomial_diagonal(6).is_diagonal()


@pytest.mark.parametrize("N", sorted(SYM_KRAW))
def test_sym_kraw_table(N):
    assert sym_kraw_matrix(N) == ExactMatrix.from_rows(SYM_KRAW[N])


def test_sym_kraw_worked_example():
    assert sym_kraw_matrix(3).to_rows() == [[1, 3, 3, 1], [3, 3, -3, -3], [3, -3, -3, 3], [1, -3, 3, -1]]


@pytest.mark.parametrize("N", range(13))
def test_involution(N):
    K = kraw_matrix(N)
    assert K @ K == ExactMatrix.identity(N + 1).scale(2**N)


@pytest.mark.parametrize("N", range(13))
def test_cross_method_equality(N):
    K = kraw_matrix(N)
    assert kraw_matrix_square_fill(N) == K
    assert all(kraw_entry(N, i, j) == K[i, j] for i in range(N + 1) for j in range(N + 1))


@pytest.mark.parametrize("N", range(13))
def test_fourfold_and_boundaries(N):
    K = kraw_matrix(N)
    for i in range(N + 1):
        assert K[i, 0] == binomial(N, i)
        assert K[i, N] == (-1) ** i * binomial(N, i)
        assert K[N, i] == (-1) ** i
        for j in range(N + 1):
            a = abs(K[i, j])
            assert a == abs(K[N - i, j]) == abs(K[i, N - j]) == abs(K[N - i, N - j])


@given(st.integers(1, 12).flatmap(lambda N: st.tuples(st.just(N), st.integers(1, N), st.integers(0, N - 1))))
def test_square_identity(args):
    N, i, j = args
    K = kraw_matrix(N)
    assert K[i, j] == K[i - 1, j] + K[i - 1, j + 1] + K[i, j + 1]


@given(st.integers(1, 12).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N - 1), st.integers(0, N - 1))))
def test_cross_identities(args):
    N, i, j = args
    K, Kd, Ku = kraw_matrix(N), kraw_matrix(N - 1), kraw_matrix(N + 1)
    assert K[i, j] + K[i, j + 1] == 2 * Kd[i, j]
    assert K[i + 1, j] - K[i + 1, j + 1] == 2 * Kd[i, j]
    if i >= 1:
        assert K[i - 1, j] + K[i, j] == Ku[i, j]
        assert K[i, j] - K[i - 1, j] == Ku[i, j + 1]


def test_identity_suite_passes():
    report = check_identities(12)
    assert report.passed
    assert all(c.instances > 0 for c in report.checks)
    assert all(c.max_defect == 0 for c in report.checks)


def test_identity_suite_records_counterexample():
    from krawtchouk.core import IdentityCheck

    c = IdentityCheck("demo")
    c.record(3, 3, N=1)
    c.record(4, 2, N=2)
    assert not c.passed
    assert c.counterexample == {"N": 2, "expected": 2, "got": 4}
    assert c.max_defect == 2
