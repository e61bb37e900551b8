"""Exact linear algebra over Q.

Matrices are lists of lists of Fractions, rows first.  Everything here is
plain Gaussian elimination in the field Q: division is exact, so there are
no tolerances and no floats anywhere.  Row operations always pick the first
nonzero pivot, which keeps results deterministic.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def copy_matrix(rows):
    return [list(r) for r in rows]


def rref(rows):
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    a = copy_matrix(rows)
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pick = None
        for i in range(r, nr):
            if a[i][c]:
                pick = i
                break
        if pick is None:
            continue
        a[r], a[pick] = a[pick], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def kernel_basis(rows, ncols=None):
    """Basis of {v : A v = 0}, one vector per free column.

    Deterministic: free columns are processed in increasing order and each
    basis vector has a 1 in its free column.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)]
                for j in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of A x = b, or None when inconsistent.

    rhs may be a single vector or a list of columns; a single vector gives
    a single vector back.
    """
    single = rhs and not isinstance(rhs[0], list)
    cols = [rhs] if single else rhs
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    aug = [list(rows[i]) + [col[i] for col in cols] for i in range(nr)]
    red, pivots = rref(aug)
    for r in range(len(pivots)):
        if pivots[r] >= nc:
            return None  # pivot in the rhs block: inconsistent
    # also catch zero rows with nonzero rhs below the pivot rows
    for r in range(len(pivots), nr):
        if any(red[r][nc:]):
            return None
    outs = []
    for k in range(len(cols)):
        x = [ZERO] * nc
        for r, pc in enumerate(pivots):
            x[pc] = red[r][nc + k]
        outs.append(x)
    return outs[0] if single else outs


def invert(rows):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(rows[i]) + [ONE if j == i else ZERO for j in range(n)]
           for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [r[n:] for r in red]


def mat_mul(a, b):
    nr, ni = len(a), len(b)
    nc = len(b[0]) if ni else 0
    out = [[ZERO] * nc for _ in range(nr)]
    for i in range(nr):
        ai = a[i]
        oi = out[i]
        for k in range(ni):
            f = ai[k]
            if f:
                bk = b[k]
                for j in range(nc):
                    if bk[j]:
                        oi[j] += f * bk[j]
    return out


def mat_vec(a, v):
    return [sum((f * x for f, x in zip(row, v) if f and x), ZERO) for row in a]


def in_span(basis_rows, v):
    """Is v in the row span of basis_rows?  Exact membership test."""
    if not basis_rows:
        return not any(v)
    return rank(basis_rows) == rank(basis_rows + [v])
