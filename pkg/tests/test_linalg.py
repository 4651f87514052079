from fractions import Fraction

from chowtool.linalg import (
    det_int,
    cross_normal,
    rank_rational,
    solve_rational,
    integer_kernel_basis,
    hermite_normal_form,
    same_row_span,
    primitive,
    simplex_relative_volume_times_factorial,
)


def brute_det(rows):
    # permutation expansion, the independent oracle for Bareiss
    from itertools import permutations

    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def test_det_matches_permanent_expansion():
    mats = [
        [[2, 1], [1, 2]],
        [[1, 2, 3], [0, 1, 4], [5, 6, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
        [[3, 0, 0, 1], [0, 2, 1, 0], [1, 1, 1, 1], [0, 0, 2, 5]],
    ]
    for m in mats:
        assert det_int(m) == brute_det(m)


def test_cross_normal_orthogonal():
    vectors = [(1, 2, 0), (0, 1, 1)]
    n = cross_normal(vectors)
    assert all(sum(a * b for a, b in zip(n, v)) == 0 for v in vectors)
    assert any(n)


def test_rank_and_solve():
    assert rank_rational([[1, 2], [2, 4]]) == 1
    assert rank_rational([[1, 0], [0, 1]]) == 2
    sol = solve_rational([[2, 0], [0, 4]], [1, 1])
    assert sol == (Fraction(1, 2), Fraction(1, 4))
    assert solve_rational([[1, 1], [2, 2]], [1, 2]) is None


def test_integer_kernel_is_saturated_basis():
    m = [[1, 1, 1, 0], [0, 1, 2, 0]]
    basis = integer_kernel_basis(m)
    assert len(basis) == 2
    for u in basis:
        assert all(sum(r[i] * u[i] for i in range(4)) == 0 for r in m)
    # (1, -2, 1, 0) must be an integer combination of the basis
    target = [(1, -2, 1, 0), (0, 0, 0, 1)]
    assert same_row_span(basis, target)


def test_hnf_canonical():
    a = [[2, 4], [1, 3]]
    b = [[1, 3], [0, 2]]
    assert hermite_normal_form(a) == hermite_normal_form(b)
    assert not same_row_span([[2, 0]], [[1, 0]])


def test_primitive():
    assert primitive((4, -6, 2)) == (2, -3, 1)
    assert primitive((0, 0)) == (0, 0)


def test_relative_simplex_volume():
    # unimodular triangle in a plane of 3-space
    assert simplex_relative_volume_times_factorial([(0, 0, 1), (1, 0, 1), (0, 1, 1)]) == 1
    # doubled segment
    assert simplex_relative_volume_times_factorial([(0, 0), (2, 0)]) == 2
    # full-dimensional: plain determinant
    assert simplex_relative_volume_times_factorial([(0, 0), (2, 0), (0, 3)]) == 6
