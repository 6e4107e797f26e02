import random

import sympy

from openbook.smith import det, invariant_factors, kernel_basis, matmul, smith_normal_form

from _oracles import check_snf, determinantal_factors, frac_det, random_matrix, random_unimodular


def test_examples():
    assert smith_normal_form([[3]])[0] == [[3]]
    assert smith_normal_form([[2, 0], [0, 3]])[0] == [[1, 0], [0, 6]]
    assert smith_normal_form([[0, 0, 0], [0, 0, 0]])[0] == [[0, 0, 0], [0, 0, 0]]
    assert smith_normal_form([[-4]])[0] == [[4]]


def test_against_determinantal_divisors():
    r = random.Random(1)
    for _ in range(120):
        A = random_matrix(r, r.randint(1, 4), r.randint(1, 4))
        assert check_snf(A) == determinantal_factors(A)


def test_invariant_under_unimodular_factors():
    r = random.Random(2)
    for _ in range(100):
        m, n = r.randint(1, 6), r.randint(1, 6)
        A = random_matrix(r, m, n)
        P, Q = random_unimodular(r, m), random_unimodular(r, n)
        assert invariant_factors(matmul(matmul(P, A), Q)) == invariant_factors(A)


def test_zero_row_matrix():
    D, U, V = smith_normal_form([], ncols=3)
    assert D == [] and V == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_det_matches_oracle():
    r = random.Random(3)
    assert det([]) == 1
    for _ in range(200):
        k = r.randint(1, 6)
        A = random_matrix(r, k, k)
        assert det(A) == frac_det(A)


def test_kernel_basis():
    r = random.Random(4)
    for _ in range(100):
        m, n = r.randint(1, 4), r.randint(1, 5)
        A = random_matrix(r, m, n, 3)
        basis = kernel_basis(A, n)
        assert len(basis) == n - sympy.Matrix(A).rank()
        for v in basis:
            assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
