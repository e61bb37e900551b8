"""Twisted tensor modules: polynomial coefficients tensored with a
finite-dimensional representation of the block matrix superalgebra.

A module is fixed by ModuleSpec(m, n, a, rep): a is the twist vector (the
derivative d/dt_i acts on the coefficient algebra as d/dt_i + a_i), rep
the matrix representation supplying the finite tensor factor.

The derivation action on a pure tensor p (x) v splits into three pieces:
the twisted action on p, a sum over even matrix units weighted by the
exponents of the coefficient monomial, and a sign-weighted sum over odd
matrix units from the odd derivatives of the coefficient monomial.  All
formulas live in act_term; everything else (Whittaker solves, descent,
weight cosets) is built on top of it plus exact linear algebra.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .glmn import Rep
from .superpoly import (ONE, ZERO, SuperPoly, enumerate_alphas,
                        enumerate_monomials, mono_mul, mono_parity,
                        mono_partial_t, mono_partial_xi, mono_sort_key,
                        mono_tdeg, popcount)
from .witt import TSLOT, XSLOT, WittElement
from .words import OperatorWord


class TransitionSingular(RuntimeError):
    """The monomial-to-product-basis transition failed to invert."""


class ModuleSpec:
    """Shape of a twisted tensor module."""

    __slots__ = ("m", "n", "a", "rep", "_pbw_cache")

    def __init__(self, m: int, n: int, a, rep: Rep):
        if (rep.m, rep.n) != (m, n):
            raise ValueError("representation block shape != (m, n)")
        a = tuple(Fraction(x) for x in a)
        if len(a) != m:
            raise ValueError("twist vector length != m")
        self.m = m
        self.n = n
        self.a = a
        self.rep = rep
        self._pbw_cache = {}

    @property
    def dim(self):
        return self.rep.dim

    @property
    def nonsingular(self) -> bool:
        return all(self.a)

    def pbw(self, max_deg: int) -> "PbwRewrite":
        got = self._pbw_cache.get(max_deg)
        if got is None:
            got = pbw_basis_rewrite(self, max_deg)
            self._pbw_cache[max_deg] = got
        return got

    def __repr__(self):
        return "ModuleSpec(m=%d,n=%d,a=%s,rep=%r)" % (
            self.m, self.n, self.a, self.rep)


class TensorElement:
    """Sparse element: dict ((alpha, imask), vindex) -> Fraction."""

    __slots__ = ("m", "n", "dim", "terms")

    def __init__(self, m, n, dim, terms=None):
        self.m = m
        self.n = n
        self.dim = dim
        self.terms = {}
        if terms:
            for key, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    c0 = self.terms.get(key, ZERO) + c
                    if c0:
                        self.terms[key] = c0
                    else:
                        self.terms.pop(key, None)

    @classmethod
    def zero(cls, spec):
        return cls(spec.m, spec.n, spec.dim)

    @classmethod
    def pure(cls, spec, mono, vindex, coeff=ONE):
        if not 0 <= vindex < spec.dim:
            raise ValueError("vector index out of range")
        mono = (tuple(mono[0]), mono[1])
        out = cls(spec.m, spec.n, spec.dim)
        if coeff:
            out.terms[(mono, vindex)] = Fraction(coeff)
        return out

    @classmethod
    def vacuum(cls, spec, vindex, coeff=ONE):
        """1 (x) e_vindex."""
        return cls.pure(spec, ((0,) * spec.m, 0), vindex, coeff)

    def _check(self, other):
        if (self.m, self.n, self.dim) != (other.m, other.n, other.dim):
            raise ValueError("shape mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c0 = terms.get(key, ZERO) + c
            if c0:
                terms[key] = c0
            else:
                del terms[key]
        out = TensorElement(self.m, self.n, self.dim)
        out.terms = terms
        return out

    def __neg__(self):
        out = TensorElement(self.m, self.n, self.dim)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        out = TensorElement(self.m, self.n, self.dim)
        if scalar:
            out.terms = {k: c * scalar for k, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, TensorElement)
                and (self.m, self.n, self.dim) == (other.m, other.n, other.dim)
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "TensorElement(0)"
        bits = ["%s*%r(x)e%d" % (c, key[0], key[1] + 1)
                for key, c in sorted(self.terms.items(),
                                     key=lambda kv: tensor_key_sort(kv[0]))]
        return "TensorElement(%s)" % " + ".join(bits)

    def tdegree(self):
        return max((mono_tdeg(mono) for mono, _ in self.terms), default=-1)


def tensor_key_sort(key):
    mono, l = key
    return mono_sort_key(mono) + (l,)


# ---------------------------------------------------------------------------
# actions

def act_mono(spec, amono, x: TensorElement) -> TensorElement:
    """Multiply the coefficient part by a monomial on the left."""
    amono = (tuple(amono[0]), amono[1])
    out = TensorElement.zero(spec)
    for (mono, l), c in x.terms.items():
        prod = mono_mul(amono, mono)
        if prod:
            key = (prod[0], l)
            c0 = out.terms.get(key, ZERO) + c * prod[1]
            if c0:
                out.terms[key] = c0
            else:
                del out.terms[key]
    return out


def act_term(spec, alpha, imask, slot, x: TensorElement,
             odd_row_sign=1) -> TensorElement:
    """One basis derivation on the module (the three-piece formula).

    odd_row_sign=-1 flips the odd-matrix-unit piece; that variant breaks
    the bracket compatibility and exists as a verifier control route.
    """
    alpha = tuple(alpha)
    m = spec.m
    kind, idx = slot
    out = {}

    def put(mono, l, c):
        key = (mono, l)
        c0 = out.get(key, ZERO) + c
        if c0:
            out[key] = c0
        else:
            del out[key]

    gmono = (alpha, imask)
    pI = popcount(imask)
    s3 = -1 if (pI - 1) & 1 else 1  # (-1)^{|I|-1}
    gam = 0 if kind == TSLOT else 1  # column parity
    col_even = idx if kind == TSLOT else m + idx
    for (p, l), c in x.terms.items():
        pp = mono_parity(p)
        # 1. twisted action on the coefficient factor
        if kind == TSLOT:
            hit = mono_partial_t(p, idx)
            if hit:
                prod = mono_mul(gmono, hit[0])
                if prod:
                    put(prod[0], l, c * hit[1] * prod[1])
            ai = spec.a[idx - 1]
            if ai:
                prod = mono_mul(gmono, p)
                if prod:
                    put(prod[0], l, c * ai * prod[1])
        else:
            hit = mono_partial_xi(p, idx)
            if hit:
                prod = mono_mul(gmono, hit[0])
                if prod:
                    put(prod[0], l, c * hit[1] * prod[1])
        # 2. even matrix units weighted by the exponents, moved past p:
        #    the unit E_{k, col} has parity gam, hence (-1)^{gam |p|}
        s2 = -1 if (gam & pp) else 1
        for k in range(1, m + 1):
            ak = alpha[k - 1]
            if not ak:
                continue
            a2 = list(alpha)
            a2[k - 1] -= 1
            prod = mono_mul((tuple(a2), imask), p)
            if not prod:
                continue
            mat = spec.rep.mats[(k, col_even)]
            base = c * ak * prod[1] * s2
            for r in range(spec.dim):
                f = mat[r][l]
                if f:
                    put(prod[0], r, base * f)
        # 3. odd matrix units from odd derivatives of the monomial;
        #    E_{m+k, col} has parity 1+gam, hence (-1)^{(1+gam)|p|}
        if imask:
            s3p = s3 * odd_row_sign * (-1 if ((1 ^ gam) & pp) else 1)
            for k in range(1, spec.n + 1):
                hitg = mono_partial_xi(gmono, k)
                if not hitg:
                    continue
                prod = mono_mul(hitg[0], p)
                if not prod:
                    continue
                mat = spec.rep.mats[(m + k, col_even)]
                base = c * s3p * hitg[1] * prod[1]
                for r in range(spec.dim):
                    f = mat[r][l]
                    if f:
                        put(prod[0], r, base * f)
    res = TensorElement.zero(spec)
    res.terms = out
    return res


def act_witt(spec, w: WittElement, x: TensorElement,
             odd_row_sign=1) -> TensorElement:
    if (w.m, w.n) != (spec.m, spec.n):
        raise ValueError("shape mismatch")
    out = TensorElement.zero(spec)
    for (mono, slot), c in w.terms.items():
        out = out + c * act_term(spec, mono[0], mono[1], slot, x,
                                 odd_row_sign=odd_row_sign)
    return out


def act_atom(spec, atom, x: TensorElement) -> TensorElement:
    kind = atom[0]
    if kind == "mt":
        alpha = tuple(1 if k == atom[1] - 1 else 0 for k in range(spec.m))
        return act_mono(spec, (alpha, 0), x)
    if kind == "mx":
        return act_mono(spec, ((0,) * spec.m, 1 << (atom[1] - 1)), x)
    if kind == "dt":
        # twisted: d/dt_i + a_i
        i = atom[1]
        ai = spec.a[i - 1]
        out = TensorElement.zero(spec)
        for (p, l), c in x.terms.items():
            hit = mono_partial_t(p, i)
            if hit:
                key = (hit[0], l)
                c0 = out.terms.get(key, ZERO) + c * hit[1]
                if c0:
                    out.terms[key] = c0
                else:
                    del out.terms[key]
        if ai:
            out = out + ai * x
        return out
    if kind == "dx":
        j = atom[1]
        out = TensorElement.zero(spec)
        for (p, l), c in x.terms.items():
            hit = mono_partial_xi(p, j)
            if hit:
                key = (hit[0], l)
                c0 = out.terms.get(key, ZERO) + c * hit[1]
                if c0:
                    out.terms[key] = c0
                else:
                    del out.terms[key]
        return out
    if kind == "w":
        return act_term(spec, atom[1], atom[2], (atom[3], atom[4]), x)
    raise ValueError("unknown atom %r" % (atom,))


def act_word(spec, w: OperatorWord, x: TensorElement) -> TensorElement:
    """Words act right to left; the empty word is the identity."""
    if (w.m, w.n) != (spec.m, spec.n):
        raise ValueError("shape mismatch")
    out = TensorElement.zero(spec)
    for word, c in w.terms.items():
        y = x
        for atom in reversed(word):
            if not y:
                break
            y = act_atom(spec, atom, y)
        out = out + c * y
    return out


def lower_t(spec, i, x: TensorElement) -> TensorElement:
    """(d/dt_i - a_i) on the module = plain d/dt_i on the coefficients."""
    out = TensorElement.zero(spec)
    for (p, l), c in x.terms.items():
        hit = mono_partial_t(p, i)
        if hit:
            out.terms[(hit[0], l)] = out.terms.get((hit[0], l), ZERO) + c * hit[1]
    out.terms = {k: c for k, c in out.terms.items() if c}
    return out


# ---------------------------------------------------------------------------
# the twist on multiply/derive words

def twist_word(spec, w: OperatorWord) -> OperatorWord:
    """Replace every d/dt_i atom by d/dt_i + a_i, expanding the word into
    the resulting combination.  Defined on multiply/derive atoms only."""
    out = OperatorWord(spec.m, spec.n)
    for word, c in w.terms.items():
        branches = [((), c)]
        for atom in word:
            kind = atom[0]
            if kind == "w":
                raise ValueError("the twist is defined on multiply/derive "
                                 "atoms only")
            if kind == "dt":
                ai = spec.a[atom[1] - 1]
                nxt = []
                for prefix, cc in branches:
                    nxt.append((prefix + (atom,), cc))
                    if ai:
                        nxt.append((prefix, cc * ai))
                branches = nxt
            else:
                branches = [(prefix + (atom,), cc) for prefix, cc in branches]
        for word2, cc in branches:
            c0 = out.terms.get(word2, ZERO) + cc
            if c0:
                out.terms[word2] = c0
            else:
                out.terms.pop(word2, None)
    return out


def act_word_poly(w: OperatorWord, p: SuperPoly) -> SuperPoly:
    """Untwisted multiply/derive action on the plain algebra."""
    if (w.m, w.n) != (p.m, p.n):
        raise ValueError("shape mismatch")
    out = SuperPoly.zero(p.m, p.n)
    for word, c in w.terms.items():
        q = p
        for atom in reversed(word):
            kind = atom[0]
            if kind == "mt":
                q = SuperPoly.t_var(p.m, p.n, atom[1]) * q
            elif kind == "mx":
                q = SuperPoly.xi_var(p.m, p.n, atom[1]) * q
            elif kind == "dt":
                q = q.partial_t(atom[1])
            elif kind == "dx":
                q = q.partial_xi(atom[1])
            else:
                raise ValueError("multiply/derive atoms only, got %r"
                                 % (atom,))
            if not q:
                break
        out = out + c * q
    return out


def twisted_act(spec, w: OperatorWord, p: SuperPoly) -> SuperPoly:
    """The twisted algebra action: twist the word, then act."""
    return act_word_poly(twist_word(spec, w), p)


# ---------------------------------------------------------------------------
# windows and exact solves

def window_keys(spec, max_deg):
    return [(mono, l) for mono in enumerate_monomials(spec.m, spec.n, max_deg)
            for l in range(spec.dim)]


def from_coords(spec, keys, vec) -> TensorElement:
    out = TensorElement.zero(spec)
    for key, c in zip(keys, vec):
        if c:
            out.terms[key] = c
    return out


def _kernel_of_ops(spec, ops, keys):
    """Exact joint kernel of linear operators on the span of keys.

    ops: callables TensorElement -> TensorElement.  Output support may
    leave the window; every output coordinate becomes an equation.
    """
    index = {key: k for k, key in enumerate(keys)}
    rows = []
    for op in ops:
        images = []
        out_keys = set()
        for key in keys:
            img = op(TensorElement.pure(spec, key[0], key[1]))
            images.append(img)
            out_keys.update(img.terms)
        for okey in sorted(out_keys, key=tensor_key_sort):
            row = [img.terms.get(okey, ZERO) for img in images]
            if any(row):
                rows.append(row)
    vecs = linalg.kernel_basis(rows, ncols=len(keys))
    return [from_coords(spec, keys, v) for v in vecs]


def whittaker_space(spec, max_deg):
    """Basis of the joint kernel of (d/dt_i - a_i) and d/dxi_j on the
    degree window."""
    keys = window_keys(spec, max_deg)
    ops = [lambda x, i=i: lower_t(spec, i, x) for i in range(1, spec.m + 1)]
    ops += [lambda x, j=j: act_atom(spec, ("dx", j), x)
            for j in range(1, spec.n + 1)]
    return _kernel_of_ops(spec, ops, keys)


def generalized_whittaker_space(spec, max_deg, height_bound=0):
    """Joint kernel of (d/dt_i - a_i)^(height_bound+1), no xi condition."""
    keys = window_keys(spec, max_deg)

    def power_op(i):
        def op(x):
            for _ in range(height_bound + 1):
                x = lower_t(spec, i, x)
            return x
        return op

    ops = [power_op(i) for i in range(1, spec.m + 1)]
    return _kernel_of_ops(spec, ops, keys)


def height(spec, x: TensorElement, i: int) -> int:
    """Least k with (d/dt_i - a_i)^(k+1) x = 0."""
    if not x:
        raise ValueError("height of the zero element is undefined")
    k = 0
    y = lower_t(spec, i, x)
    while y:
        k += 1
        y = lower_t(spec, i, y)
    return k


def descent(spec, x: TensorElement) -> TensorElement:
    """Project onto the Whittaker space.

    First the odd corrections y -> y - xi_j (d/dxi_j y), then for each
    even index the telescoping sum_k (-1)^k/k! t_i^k (d/dt_i - a_i)^k y up
    to the height.  Linear on any degree window, fixes Whittaker vectors,
    idempotent.
    """
    y = x
    for j in range(1, spec.n + 1):
        dy = act_atom(spec, ("dx", j), y)
        if dy:
            y = y - act_mono(spec, ((0,) * spec.m, 1 << (j - 1)), dy)
    for i in range(1, spec.m + 1):
        if not y:
            break
        acc = TensorElement.zero(spec)
        term = y
        k = 0
        fact = Fraction(1)
        ti = ((tuple(1 if q == i - 1 else 0 for q in range(spec.m)), 0))
        while term:
            piece = term
            for _ in range(k):
                piece = act_mono(spec, ti, piece)
            sign = -1 if k & 1 else 1
            acc = acc + (sign * fact) * piece
            k += 1
            fact = fact / k
            term = lower_t(spec, i, term)
        y = acc
    return y


# ---------------------------------------------------------------------------
# product-basis rewriting and weight cosets

class PbwRewrite:
    """Transition between the monomial basis of a degree window and the
    products h^s u_j, where h_i = t_i d/dt_i and u_j runs over the
    xi-monomial (x) module basis."""

    __slots__ = ("spec", "max_deg", "keys", "key_index", "cols",
                 "matrix", "inverse")

    def __init__(self, spec, max_deg, keys, cols, matrix, inverse):
        self.spec = spec
        self.max_deg = max_deg
        self.keys = keys
        self.key_index = {key: k for k, key in enumerate(keys)}
        self.cols = cols
        self.matrix = matrix
        self.inverse = inverse

    def to_coords(self, x: TensorElement):
        vec = [ZERO] * len(self.keys)
        for key, c in x.terms.items():
            k = self.key_index.get(key)
            if k is None:
                raise ValueError("element leaves the rewrite window")
            vec[k] = c
        return vec

    def to_products(self, x: TensorElement):
        """Coordinates of x in the h^s u_j basis as {(s, (kmask, l)): c}."""
        vec = self.to_coords(x)
        sol = linalg.mat_vec(self.inverse, vec)
        return {self.cols[k]: c for k, c in enumerate(sol) if c}

    def from_products(self, coords) -> TensorElement:
        vec = [ZERO] * len(self.cols)
        col_index = {col: k for k, col in enumerate(self.cols)}
        for col, c in coords.items():
            vec[col_index[col]] += c
        out_vec = linalg.mat_vec(self.matrix, vec)
        return from_coords(self.spec, self.keys, out_vec)


def cartan_term(spec, i):
    alpha = tuple(1 if k == i - 1 else 0 for k in range(spec.m))
    return alpha


def unit_basis(spec):
    """(kmask, l) labels for the xi (x) module basis, ascending."""
    return [(kmask, l) for kmask in range(1 << spec.n)
            for l in range(spec.dim)]


def unit_vector(spec, kmask, l) -> TensorElement:
    return TensorElement.pure(spec, ((0,) * spec.m, kmask), l)


def pbw_basis_rewrite(spec, max_deg) -> PbwRewrite:
    """Expand every h^s u_j (|s| <= max_deg) in monomial coordinates and
    invert the square transition matrix.  Needs every a_i nonzero."""
    if not spec.nonsingular:
        raise ValueError("product basis needs a nonsingular twist vector")
    keys = window_keys(spec, max_deg)
    units = unit_basis(spec)
    svals = enumerate_alphas(spec.m, max_deg)
    cols = [(s, u) for s in svals for u in units]
    key_index = {key: k for k, key in enumerate(keys)}
    columns = []
    for s, (kmask, l) in cols:
        vec = unit_vector(spec, kmask, l)
        for i in range(1, spec.m + 1):
            for _ in range(s[i - 1]):
                vec = act_term(spec, cartan_term(spec, i), 0, (TSLOT, i), vec)
        col = [ZERO] * len(keys)
        for key, c in vec.terms.items():
            k = key_index.get(key)
            if k is None:
                raise TransitionSingular("product vector leaves the window")
            col[k] = c
        columns.append(col)
    matrix = [[columns[c][r] for c in range(len(cols))]
              for r in range(len(keys))]
    if len(cols) != len(keys):
        raise TransitionSingular("window and product count disagree")
    inverse = linalg.invert(matrix)
    if inverse is None:
        raise TransitionSingular("transition matrix is singular")
    return PbwRewrite(spec, max_deg, keys, cols, matrix, inverse)


class WeightCoset:
    """Coordinates of a module element modulo the ideal shifting the
    Cartan operators to fixed scalars."""

    __slots__ = ("spec", "weight", "coords")

    def __init__(self, spec, weight, coords):
        self.spec = spec
        self.weight = tuple(weight)
        self.coords = tuple(coords)
        if len(self.coords) != (1 << spec.n) * spec.dim:
            raise ValueError("coset coordinate length mismatch")

    def __eq__(self, other):
        return (isinstance(other, WeightCoset)
                and self.weight == other.weight
                and self.coords == other.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return "WeightCoset(weight=%r, coords=%r)" % (self.weight, self.coords)


def weight_reduce(spec, x: TensorElement, weight) -> WeightCoset:
    """Rewrite in the product basis and evaluate the Cartan polynomial at
    the weight: sum_s c_{s,j} weight^s per unit label j."""
    weight = tuple(Fraction(w) for w in weight)
    if len(weight) != spec.m:
        raise ValueError("weight length != m")
    rewrite = spec.pbw(max(x.tdegree(), 0))
    units = unit_basis(spec)
    unit_index = {u: k for k, u in enumerate(units)}
    coords = [ZERO] * len(units)
    for (s, u), c in rewrite.to_products(x).items():
        val = c
        for wi, si in zip(weight, s):
            val *= wi ** si
        coords[unit_index[u]] += val
    return WeightCoset(spec, weight, coords)


def weight_shift(w: WittElement):
    """The common Cartan-degree shift of a combination, or raise if the
    terms disagree (the coset action is only defined then)."""
    shifts = set()
    for (mono, slot), _ in w.terms.items():
        shift = list(mono[0])
        if slot[0] == TSLOT:
            shift[slot[1] - 1] -= 1
        shifts.add(tuple(shift))
    if len(shifts) != 1:
        raise ValueError("mixed Cartan degrees: coset action undefined")
    return shifts.pop()


def weight_act(spec, w: WittElement, coset: WeightCoset) -> WeightCoset:
    """Act on a weight coset: lift to the unit representatives, act, and
    reduce at the shifted weight.  Well-definedness (independence of the
    representative) is exactly what the verifier's weight checks assert."""
    if (w.m, w.n) != (spec.m, spec.n):
        raise ValueError("shape mismatch")
    shift = weight_shift(w)
    target = tuple(wi + si for wi, si in zip(coset.weight, shift))
    units = unit_basis(spec)
    lift = TensorElement.zero(spec)
    for u, c in zip(units, coset.coords):
        if c:
            lift = lift + c * unit_vector(spec, *u)
    return weight_reduce(spec, act_witt(spec, w, lift), target)


# ---------------------------------------------------------------------------

def ann_space(spec, ops, max_deg, max_target=200000):
    """Joint kernel of operator words on the degree window.

    Output supports are computed exactly; max_target caps the number of
    output coordinates so runaway degree growth fails loudly."""
    keys = window_keys(spec, max_deg)

    def make_op(word):
        return lambda x: act_word(spec, word, x)

    # probe output sizes first
    total = 0
    for op_word in ops:
        for key in keys:
            img = act_word(spec, op_word,
                           TensorElement.pure(spec, key[0], key[1]))
            total += len(img.terms)
            if total > max_target:
                raise RuntimeError("annihilator solve exceeds the output "
                                   "budget (%d coordinates)" % max_target)
    return _kernel_of_ops(spec, [make_op(w) for w in ops], keys)


class TensorSpan:
    """Exact echelonized span of tensor elements, incremental."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}  # pivot key -> TensorElement with coeff 1 at pivot

    @staticmethod
    def _pivot(x):
        return min(x.terms, key=tensor_key_sort)

    def reduce(self, x: TensorElement) -> TensorElement:
        while x:
            piv = self._pivot(x)
            row = self.rows.get(piv)
            if row is None:
                return x
            x = x - x.terms[piv] * row
        return x

    def insert(self, x: TensorElement) -> bool:
        """Add to the span; True if the dimension grew."""
        x = self.reduce(x)
        if not x:
            return False
        piv = self._pivot(x)
        x = (ONE / x.terms[piv]) * x
        self.rows[piv] = x
        # keep rows fully reduced against the new pivot
        for key, row in list(self.rows.items()):
            if key != piv and piv in row.terms:
                self.rows[key] = row - row.terms[piv] * x
        return True

    def contains(self, x: TensorElement) -> bool:
        return not self.reduce(x)

    @property
    def dim(self):
        return len(self.rows)
