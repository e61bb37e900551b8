"""Block-graded matrix superalgebra and its representations."""

from fractions import Fraction

import pytest

from wittmod.glmn import (Rep, SuperMatrix, basis_parity, custom_rep,
                          direct_sum_rep, gl_bracket, natural_rep,
                          tensor_rep, trivial_rep, verify_rep)

F = Fraction


def test_elementary_bracket():
    # [E12, E21] = E11 - E22 in the even part
    m, n = 2, 0
    e12 = SuperMatrix.elementary(m, n, 1, 2)
    e21 = SuperMatrix.elementary(m, n, 2, 1)
    want = SuperMatrix.elementary(m, n, 1, 1) - SuperMatrix.elementary(
        m, n, 2, 2)
    assert gl_bracket(e12, e21) == want


def test_odd_odd_bracket_is_anticommutator():
    # both units odd: [x, y] = xy + yx
    m, n = 1, 1
    e12 = SuperMatrix.elementary(m, n, 1, 2)
    e21 = SuperMatrix.elementary(m, n, 2, 1)
    want = SuperMatrix.elementary(m, n, 1, 1) + SuperMatrix.elementary(
        m, n, 2, 2)
    assert gl_bracket(e12, e21) == want
    assert basis_parity(m, 1, 2) == 1
    assert basis_parity(m, 1, 1) == 0


def test_natural_rep_verifies():
    for (m, n) in ((1, 1), (2, 1), (2, 2)):
        assert verify_rep(natural_rep(m, n))


def test_trivial_and_sums_verify():
    assert verify_rep(trivial_rep(1, 1))
    assert verify_rep(trivial_rep(2, 1, dim=3))
    assert verify_rep(direct_sum_rep(trivial_rep(1, 1), natural_rep(1, 1)))


def test_tensor_rep_verifies():
    v = natural_rep(1, 1)
    assert verify_rep(tensor_rep(v, v))
    assert tensor_rep(v, v).dim == 4


def test_sign_mutated_natural_rejected():
    base = natural_rep(1, 1)
    mats = dict(base.mats)
    bad = [list(row) for row in mats[(1, 2)]]
    for r in range(len(bad)):
        for c in range(len(bad)):
            bad[r][c] = -bad[r][c]
    mats[(1, 2)] = tuple(tuple(row) for row in bad)
    with pytest.raises(ValueError, match="do not define a representation"):
        custom_rep(1, 1, base.dim, base.parities, mats)
    check = verify_rep(Rep(1, 1, base.dim, base.parities, mats))
    assert not check
    assert ("bracket", (1, 2), (2, 1)) in check.failures


def test_custom_rep_validation():
    base = natural_rep(1, 1)
    mats = dict(base.mats)
    del mats[(1, 1)]
    with pytest.raises(ValueError):
        custom_rep(1, 1, base.dim, base.parities, mats)
    with pytest.raises(ValueError):
        custom_rep(1, 1, 3, (0, 1), dict(base.mats))


def test_weight_basis_detection():
    assert natural_rep(2, 1).has_weight_basis()
    assert trivial_rep(1, 1, dim=2).has_weight_basis()


def test_rep_act_matches_matrix():
    rep = natural_rep(1, 1)
    vec = [F(2), F(5)]
    out = rep.act((1, 2), vec)
    mat = rep.mats[(1, 2)]
    want = tuple(sum(mat[r][c] * vec[c] for c in range(2))
                 for r in range(2))
    assert out == want


def test_gl_jacobi_small():
    m, n = 1, 1
    units = [SuperMatrix.elementary(m, n, i, j)
             for i in (1, 2) for j in (1, 2)]
    pars = [basis_parity(m, i, j) for i in (1, 2) for j in (1, 2)]
    for a, pa in zip(units, pars):
        for b, pb in zip(units, pars):
            for c in units:
                s = -1 if pa and pb else 1
                defect = (gl_bracket(a, gl_bracket(b, c))
                          - gl_bracket(gl_bracket(a, b), c)
                          - s * gl_bracket(b, gl_bracket(a, c)))
                assert not any(x for row in defect.rows for x in row)
