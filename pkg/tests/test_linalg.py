"""Exact linear algebra over cyclotomic fields."""

import random
from fractions import Fraction

import pytest

from groupgeo.cyclotomic import cyclo, rat
from groupgeo.errors import InfeasibleSystemError
from groupgeo.linalg import (
    Mat,
    eval_poly,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve_affine,
    vec_is_zero,
)


def _random_mat(rng, n, m, order=6):
    return Mat([[rat(rng.randint(-3, 3)) + cyclo(order) * rng.randint(-1, 1)
                 for _ in range(m)] for _ in range(n)])


def test_constructors_and_shape():
    a = Mat([[1, 2], [3, 4]])
    assert (a.nrows, a.ncols) == (2, 2)
    assert a[0, 1] == rat(2)
    assert Mat.zeros(2, 3).is_zero()
    assert Mat.identity(2) == Mat([[1, 0], [0, 1]])
    assert Mat.identity(2) @ a == a
    assert a @ Mat.identity(2) == a


def test_matmul_and_vector_action():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    assert a @ b == Mat([[2, 1], [4, 3]])
    # matrix times sequence gives a tuple of scalars
    v = a @ [1, 1]
    assert list(v) == [rat(3), rat(7)]


def test_rref_idempotent_and_rank():
    a = Mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, pivots = rref(a)
    assert pivots == (0, 1)
    assert rank(a) == 2
    r2, _ = rref(r)
    assert r2 == r


def test_rank_of_outer_products():
    rng = random.Random(7)
    for n in (3, 4):
        u = [rat(rng.randint(1, 3)) for _ in range(n)]
        v = [rat(rng.randint(1, 3)) for _ in range(n)]
        outer = Mat([[u[i] * v[j] for j in range(n)] for i in range(n)])
        assert rank(outer) == 1


def test_kernel_vectors_annihilate():
    rng = random.Random(99)
    a = _random_mat(rng, 3, 5)
    ker = kernel_basis(a)
    assert len(ker) == 5 - rank(a)
    for v in ker:
        assert vec_is_zero(a @ v)


def test_solve_affine_particular_plus_kernel():
    a = Mat([[1, 1, 0], [0, 1, 1]])
    x0, ker = solve_affine(a, [3, 5])
    assert list(a @ x0) == [rat(3), rat(5)]
    assert len(ker) == 1
    for v in ker:
        assert vec_is_zero(a @ v)


def test_solve_affine_infeasible():
    a = Mat([[1, 1], [1, 1]])
    with pytest.raises(InfeasibleSystemError):
        solve_affine(a, [0, 1])


def test_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(5):
        a = _random_mat(rng, 3, 3)
        if rank(a) < 3:
            continue
        assert a @ inverse(a) == Mat.identity(3)
        assert inverse(a) @ a == Mat.identity(3)
    with pytest.raises(ValueError):
        inverse(Mat([[1, 1], [1, 1]]))


def test_kron_block_layout():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    k = a.kron(b)
    assert (k.nrows, k.ncols) == (4, 4)
    # block (i,j) of the product is a[i,j] * b
    for i in range(2):
        for j in range(2):
            for p in range(2):
                for q in range(2):
                    assert k[2 * i + p, 2 * j + q] == a[i, j] * b[p, q]
    # mixed-product law
    c = _random_mat(random.Random(5), 2, 2)
    d = _random_mat(random.Random(6), 2, 2)
    assert (a @ c).kron(b @ d) == a.kron(b) @ c.kron(d)


def test_eval_poly_constant_first():
    a = Mat([[2, 0], [0, 3]])
    # 1 + x + x^2 at a
    p = eval_poly(a, [1, 1, 1])
    assert p == Mat([[7, 0], [0, 13]])
    assert eval_poly(a, [Fraction(1, 2)]) == Mat.identity(2) * Fraction(1, 2)


def test_conjugate_transpose():
    w = cyclo(6)
    a = Mat([[w, 1], [0, w ** 2]])
    h = a.conj_transpose()
    assert h[0, 0] == w.conj()
    assert h[1, 0] == rat(1)
    assert (a @ a.conj_transpose()).conj_transpose() == a @ a.conj_transpose()


def test_trace_and_scalar_mul():
    a = Mat([[1, 2], [3, 4]])
    assert a.trace() == rat(5)
    assert (a * Fraction(1, 2)) + (a * Fraction(1, 2)) == a


def test_cyclotomic_entries_exact_rref():
    w = cyclo(6)
    # rows are parallel over the field, so the rank collapses to 1
    a = Mat([[1, w], [w, w ** 2]])
    assert rank(a) == 1
    ker = kernel_basis(a)
    assert len(ker) == 1
    assert vec_is_zero(a @ ker[0])


def test_submatrix_and_hstack():
    a = Mat([[1, 2, 3], [4, 5, 6]])
    assert a.submatrix([1], [0, 2]) == Mat([[4, 6]])
    wide = a.hstack(a)
    assert wide.ncols == 6
    assert wide.submatrix([0, 1], [3, 4, 5]) == a
