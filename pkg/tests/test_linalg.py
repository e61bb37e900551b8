"""Exact elimination over the rationals."""

import random
from fractions import Fraction

from wittmod.linalg import (in_span, invert, kernel_basis, mat_mul, mat_vec,
                            rank, rref, solve)

F = Fraction


def _rand_matrix(rng, rows, cols):
    return [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)]


def test_rref_known():
    m = [[F(2), F(4)], [F(1), F(2)]]
    r, pivots = rref(m)
    assert r == [[F(1), F(2)], [F(0), F(0)]]
    assert pivots == [0]


def test_rank_examples():
    assert rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank([]) == 0


def test_kernel_vectors_annihilate():
    rng = random.Random(11)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = _rand_matrix(rng, rows, cols)
        ker = kernel_basis(m, cols)
        assert len(ker) == cols - rank(m)
        for v in ker:
            assert mat_vec(m, v) == [F(0)] * rows


def test_solve_consistent_and_inconsistent():
    m = [[F(1), F(1)], [F(0), F(1)]]
    assert solve(m, [F(3), F(1)]) == [F(2), F(1)]
    assert solve([[F(1), F(1)], [F(2), F(2)]], [F(0), F(1)]) is None


def test_invert_roundtrip():
    rng = random.Random(7)
    hits = 0
    while hits < 10:
        d = rng.randint(1, 4)
        m = _rand_matrix(rng, d, d)
        if rank(m) < d:
            continue
        hits += 1
        inv = invert(m)
        ident = [[F(1) if i == j else F(0) for j in range(d)]
                 for i in range(d)]
        assert mat_mul(m, inv) == ident
        assert mat_mul(inv, m) == ident


def test_invert_singular_is_none():
    assert invert([[F(1), F(2)], [F(2), F(4)]]) is None


def test_in_span():
    basis = [[F(1), F(0), F(1)], [F(0), F(1), F(0)]]
    assert in_span(basis, [F(2), F(3), F(2)])
    assert not in_span(basis, [F(0), F(0), F(1)])


def test_exactness_no_drift():
    # a matrix engineered to wreck floating point keeps exact pivots
    m = [[F(1, 3), F(1, 7)], [F(1, 11), F(1, 13)]]
    inv = invert(m)
    assert mat_mul(m, inv) == [[F(1), F(0)], [F(0), F(1)]]
