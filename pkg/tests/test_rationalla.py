import random
from fractions import Fraction

import pytest

from oracles import naive_rank
from veronese.errors import InputError, RetryWithNewPrime
from veronese.rationalla import (
    QMatrix,
    kernel_basis,
    membership_solve,
    modular_rank_probe,
    rank_exact,
    rank_with_fastpath,
)

PRIME = (1 << 31) - 1


def random_matrix(rng, rows, cols, lo=-50, hi=50, fractions=False):
    def entry():
        if fractions and rng.random() < 0.3:
            return Fraction(rng.randint(lo, hi), rng.randint(1, 12))
        return Fraction(rng.randint(lo, hi))

    return QMatrix.from_rows([[entry() for _ in range(cols)] for _ in range(rows)])


def test_rank_identity_and_zero():
    assert rank_exact(QMatrix.identity(3)) == 3
    assert rank_exact(QMatrix.zero(4, 4)) == 0


def test_rank_vandermonde_against_oracle():
    V = QMatrix.from_rows([[Fraction(i) ** j for j in range(5)] for i in range(1, 6)])
    assert rank_exact(V) == naive_rank(V) == 5


def test_rank_deficient_matrices_against_oracle():
    # low-rank products and repeated/zero columns force pivot-column skips,
    # the path where Bareiss' exact division needs the determinant identity
    rng = random.Random(99)
    for _ in range(40):
        n, m_, r = rng.randint(2, 12), rng.randint(2, 12), rng.randint(0, 4)
        A = [[rng.randint(-9, 9) for _ in range(r)] for _ in range(n)]
        B = [[rng.randint(-9, 9) for _ in range(m_)] for _ in range(r)]
        prod = [
            [Fraction(sum(A[i][k] * B[k][j] for k in range(r))) for j in range(m_)]
            for i in range(n)
        ]
        M = QMatrix.from_rows(prod)
        assert rank_exact(M) == naive_rank(M) <= r
    for _ in range(20):
        base = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(6)]
        rows = [
            [row[0], 0, row[0], row[1], row[1], row[2], 0, row[3]] for row in base
        ]
        M = QMatrix.from_rows(rows)
        assert rank_exact(M) == naive_rank(M)


def test_rank_transpose_and_row_scaling():
    rng = random.Random(11)
    for _ in range(20):
        M = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8), fractions=True)
        r = rank_exact(M)
        assert r == rank_exact(M.transpose())
        scaled = QMatrix.from_rows(
            [[Fraction(3, 7) * x for x in M.row(i)] for i in range(M.rows)]
        )
        assert rank_exact(scaled) == r
        perm = list(range(M.rows))
        rng.shuffle(perm)
        assert rank_exact(QMatrix.from_rows([M.row(i) for i in perm])) == r


def test_kernel_identity_zero_and_sum_row():
    assert kernel_basis(QMatrix.identity(3)) == []
    assert len(kernel_basis(QMatrix.zero(2, 3))) == 3
    kb = kernel_basis(QMatrix.from_rows([[1, 1, 1]]))
    assert len(kb) == 2
    for v in kb:
        assert sum(v) == 0


def test_kernel_vectors_annihilate():
    rng = random.Random(5)
    for _ in range(25):
        M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 7), fractions=True)
        basis = kernel_basis(M)
        assert len(basis) == M.cols - rank_exact(M)
        for v in basis:
            for i in range(M.rows):
                assert sum(a * b for a, b in zip(M.row(i), v)) == 0


def test_membership_identity_scaling_roundtrip():
    assert membership_solve(QMatrix.identity(3), [1, 0, 0]) == [1, 0, 0]
    assert membership_solve(QMatrix.from_rows([[2, -1, 5]]), [6, -3, 15]) == [3]
    rng = random.Random(9)
    for _ in range(20):
        M = random_matrix(rng, 2, 5)
        if rank_exact(M) != 2:
            continue
        v = [2 * a - 5 * b for a, b in zip(M.row(0), M.row(1))]
        assert membership_solve(M, v) == [2, -5]


def test_membership_failure_and_mismatch():
    M = QMatrix.from_rows([[1, 0, 0]])
    assert membership_solve(M, [0, 1, 0]) is None
    with pytest.raises(InputError):
        membership_solve(M, [1, 0])


def test_membership_iff_rank_unchanged():
    rng = random.Random(23)
    for _ in range(40):
        M = random_matrix(rng, rng.randint(1, 5), rng.randint(2, 6))
        v = [Fraction(rng.randint(-50, 50)) for _ in range(M.cols)]
        appended = M.stack(QMatrix.from_rows([v]))
        member = membership_solve(M, v) is not None
        assert member == (rank_exact(appended) == rank_exact(M))


def test_rank_plus_kernel_dimension():
    rng = random.Random(3)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7), fractions=True)
        assert M.cols == rank_exact(M) + len(kernel_basis(M))


def test_modular_probe_trivial_cases():
    assert modular_rank_probe(QMatrix.identity(3), PRIME) == 3
    assert modular_rank_probe(QMatrix.zero(3, 5), PRIME) == 0


def test_modular_probe_rejects_small_prime():
    with pytest.raises(InputError):
        modular_rank_probe(QMatrix.identity(2), 101)


def test_modular_probe_bad_denominator():
    M = QMatrix.from_rows([[Fraction(1, PRIME)]])
    with pytest.raises(RetryWithNewPrime):
        modular_rank_probe(M, PRIME)


def test_modular_probe_matches_exact_rank():
    rng = random.Random(2024)
    for _ in range(100):
        M = random_matrix(rng, 10, 10)
        probed = modular_rank_probe(M, PRIME)
        exact = rank_exact(M)
        assert probed <= exact
        assert probed == exact  # failure probability ~ 10/PRIME per instance


def test_fastpath_agrees_with_exact():
    rng = random.Random(77)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8), fractions=True)
        assert rank_with_fastpath(M) == rank_exact(M)


def test_qmatrix_validation():
    with pytest.raises(InputError):
        QMatrix(2, 2, (Fraction(1),))
    with pytest.raises(InputError):
        QMatrix.from_rows([[1, 2], [3]])
