"""Window-scale certification of the library's identities.

Every check is deterministic given its parameters (the seed is a
parameter), counts the cases it examined, and on failure carries a
self-contained counterexample rendered in the CLI expression grammar.

Negative control routes are first-class: the uncorrected bracket table
(mode=verbatim), seeded sign mutations (mode=mutated), the flipped
reordering convention (mode=tau_flipped), rmax=0 annihilation, and the
non-simple direct-sum probe (expect_reducible) all must FAIL, and the
test suite asserts that they do.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import product
from math import comb

from . import linalg
from .config import ConfigError, resolve_rep
from .dressed import (commutant_element, commutant_of_witt, dressed_basis,
                      dressed_bracket)
from .superpoly import (SuperPoly, enumerate_monomials, mono_mul, mono_parity,
                        popcount)
from .tensor_modules import (ModuleSpec, TensorElement, TensorSpan,
                             TransitionSingular, act_atom, act_mono, act_term,
                             act_witt, act_word, act_word_poly, descent,
                             generalized_whittaker_space, lower_t,
                             pbw_basis_rewrite, unit_basis, unit_vector,
                             weight_act, weight_reduce, whittaker_space,
                             window_keys)
from .witt import (TSLOT, XSLOT, WittElement, bracket_oracle, extended_basis,
                   extended_bracket, term_parity, witt_basis, witt_bracket)
from .words import OperatorWord, atom_parity, difference_word, \
    weyl_normal_order

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class CheckParams:
    check: str = ""
    m: int = 1
    n: int = 1
    a: tuple = ()
    rep: str = "natural"
    D: int = 3
    deg: int = 2
    rmax: int = 8
    trials: int = 50
    seed: int = 0
    mode: str = "corrected"
    expect_reducible: bool = False
    height: int = 0

    def __post_init__(self):
        if not self.a:
            self.a = (ONE,) * self.m
        self.a = tuple(Fraction(x) for x in self.a)

    @classmethod
    def from_dict(cls, check, merged):
        known = {f.name for f in fields(cls)} - {"check"}
        kwargs = {k: v for k, v in merged.items() if k in known}
        return cls(check=check, **kwargs)

    def as_dict(self):
        return {
            "check": self.check, "m": self.m, "n": self.n,
            "a": [str(x) for x in self.a], "rep": self.rep, "D": self.D,
            "deg": self.deg, "rmax": self.rmax, "trials": self.trials,
            "seed": self.seed, "mode": self.mode,
            "expect_reducible": self.expect_reducible, "height": self.height,
        }


@dataclass
class CheckReport:
    id: str
    params: dict
    status: str
    cases: int
    elapsed_ms: int = 0
    counterexample: dict = None
    data: dict = None

    @property
    def ok(self):
        return self.status == "pass"

    def as_dict(self):
        out = {"id": self.id, "params": self.params, "status": self.status,
               "cases": self.cases, "elapsed_ms": self.elapsed_ms}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.data is not None:
            out["data"] = self.data
        return out


class _Fail(Exception):
    """Internal: carries a counterexample dict out of a sweep."""

    def __init__(self, cex, cases):
        self.cex = cex
        self.cases = cases
        super().__init__("check failed")


def _spec(p: CheckParams) -> ModuleSpec:
    return ModuleSpec(p.m, p.n, p.a, resolve_rep(p.rep, p.m, p.n))


def _print(obj):
    from .expressions import print_expr
    return print_expr(obj)


def _key_elem(m, n, key, coeff=1):
    (mono, slot) = key
    return WittElement.term(m, n, mono[0], mono[1], slot, coeff)


def _terms_elem(m, n, terms):
    out = WittElement.zero(m, n)
    for key, c in terms.items():
        if c:
            out = out + _key_elem(m, n, key, c)
    return out


def _pure(spec, key):
    return TensorElement.pure(spec, key[0], key[1])


def _random_witt_key(rng, keys):
    return keys[rng.randrange(len(keys))]


def _random_coeff(rng):
    num = rng.choice([-3, -2, -1, 1, 2, 3, 5])
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def _random_tensor(spec, rng, max_deg, nterms=3):
    keys = window_keys(spec, max_deg)
    out = TensorElement.zero(spec)
    for _ in range(nterms):
        key = keys[rng.randrange(len(keys))]
        out = out + _random_coeff(rng) * _pure(spec, key)
    return out


# ---------------------------------------------------------------------------
# jacobi

def _witt_keys(m, n, deg):
    return [next(iter(el.terms)) for el in witt_basis(m, n, deg)]


def _pair_table(m, keys1, keys2, mutate=None):
    """Structure constants as int-coefficient item lists."""
    table = {}
    for k1 in keys1:
        for k2 in keys2:
            items = _bracket_items(m, k1, k2)
            if mutate is not None and (k1, k2) == mutate:
                items = [(key, -c) for key, c in items]
            table[(k1, k2)] = items
    return table


def _bracket_items(m, k1, k2):
    from .witt import _bracket_basis
    raw = _bracket_basis(m, k1[0], k1[1], k2[0], k2[1])
    out = {}
    for key, c in raw:
        c0 = out.get(key, 0) + c
        if c0:
            out[key] = c0
        else:
            del out[key]
    return list(out.items())


def _jacobi_table_sweep(p, cases0):
    """Exhaustive graded Jacobi sweep through the structure-constant
    table, integer arithmetic throughout."""
    m, n, deg = p.m, p.n, p.deg
    keys2 = _witt_keys(m, n, deg)
    # first-level brackets reach t-degree 2*deg (the delta terms add the
    # full monomial degrees), so the second-level tables go that far
    keys3 = _witt_keys(m, n, 2 * deg)
    mutate = None
    if p.mode == "mutated":
        rng = random.Random(p.seed)
        candidates = [(k1, k2) for k1 in keys2 for k2 in keys2
                      if _bracket_items(m, k1, k2)]
        mutate = candidates[rng.randrange(len(candidates))]
    t22 = _pair_table(m, keys2, keys2, mutate)
    t23 = _pair_table(m, keys2, keys3, mutate)
    t32 = _pair_table(m, keys3, keys2, mutate)
    par = {k: term_parity(k[0], k[1]) for k in keys2}
    cases = cases0
    for y in keys2:
        py = par[y]
        for z in keys2:
            a_items = t22[(y, z)]
            for x in keys2:
                cases += 1
                out = {}
                for k, c in a_items:                       # [x,[y,z]]
                    for k2, c2 in t23[(x, k)]:
                        v = out.get(k2, 0) + c * c2
                        if v:
                            out[k2] = v
                        else:
                            del out[k2]
                for k, c in t22[(x, y)]:                   # -[[x,y],z]
                    for k2, c2 in t32[(k, z)]:
                        v = out.get(k2, 0) - c * c2
                        if v:
                            out[k2] = v
                        else:
                            del out[k2]
                s = -1 if par[x] & py else 1               # -(-1)^{xy}[y,[x,z]]
                for k, c in t22[(x, z)]:
                    for k2, c2 in t23[(y, k)]:
                        v = out.get(k2, 0) - s * c * c2
                        if v:
                            out[k2] = v
                        else:
                            del out[k2]
                if out:
                    cex = {
                        "level": "derivation table",
                        "x": _print(_key_elem(m, n, x)),
                        "y": _print(_key_elem(m, n, y)),
                        "z": _print(_key_elem(m, n, z)),
                        "defect": _print(_terms_elem(m, n, {
                            k: Fraction(c) for k, c in out.items()})),
                    }
                    if mutate is not None:
                        cex["mutated_pair"] = "[%s, %s]" % (
                            _print(_key_elem(m, n, mutate[0])),
                            _print(_key_elem(m, n, mutate[1])))
                    raise _Fail(cex, cases)
    return cases


def _ext_parity(el):
    if el.der:
        key = next(iter(el.der.terms))
        return term_parity(key[0], key[1])
    key = next(iter(el.fun.terms))
    return mono_parity(key)


def _jacobi_generic_sweep(p, level, basis, bracket, parity, render, cases0):
    size = len(basis)
    cases = cases0
    if size ** 3 <= 300000:
        triples = product(range(size), repeat=3)
    else:
        rng = random.Random(p.seed + 1)
        triples = [tuple(rng.randrange(size) for _ in range(3))
                   for _ in range(max(p.trials, 500))]
    for (ix, iy, iz) in triples:
        x, y, z = basis[ix], basis[iy], basis[iz]
        cases += 1
        s = -1 if parity(x) & parity(y) else 1
        defect = (bracket(x, bracket(y, z))
                  - bracket(bracket(x, y), z)
                  - s * bracket(y, bracket(x, z)))
        if defect:
            raise _Fail({"level": level, "x": render(x), "y": render(y),
                         "z": render(z), "defect": render(defect)}, cases)
    return cases


def check_jacobi(p: CheckParams):
    cases = _jacobi_table_sweep(p, 0)
    if p.mode == "mutated":
        # the mutated table is expected to raise _Fail above; reaching
        # here means the mutation went undetected
        raise _Fail({"level": "derivation table",
                     "error": "seeded sign mutation was not detected"},
                    cases)

    def render_ext(el):
        if el.der and el.fun:
            return "%s + %s" % (_print(el.der), _print(el.fun))
        return _print(el.der) if el.der else _print(el.fun)

    exdeg = min(p.deg, 2)
    cases = _jacobi_generic_sweep(
        p, "abelian extension", extended_basis(p.m, p.n, exdeg),
        extended_bracket, _ext_parity, render_ext, cases)
    cases = _jacobi_generic_sweep(
        p, "dressed product", dressed_basis(p.m, p.n, exdeg),
        dressed_bracket, lambda el: el.parity(), _print, cases)
    return cases, None


# ---------------------------------------------------------------------------
# bracket_oracle

def check_bracket_oracle(p: CheckParams):
    keys = _witt_keys(p.m, p.n, p.deg)
    cases = 0
    for k1 in keys:
        x = _key_elem(p.m, p.n, k1)
        for k2 in keys:
            y = _key_elem(p.m, p.n, k2)
            cases += 1
            table = witt_bracket(x, y, mode=p.mode)
            oracle = bracket_oracle(x, y)
            if table != oracle:
                raise _Fail({
                    "x": _print(x), "y": _print(y), "mode": p.mode,
                    "table": _print(table), "oracle": _print(oracle),
                }, cases)
    return cases, None


# ---------------------------------------------------------------------------
# weyl_relations

def _weyl_atoms(m, n):
    atoms = [("mt", i) for i in range(1, m + 1)]
    atoms += [("mx", j) for j in range(1, n + 1)]
    atoms += [("dt", i) for i in range(1, m + 1)]
    atoms += [("dx", j) for j in range(1, n + 1)]
    return atoms


def _expected_pair_relation(u, v, m, n):
    """[u, v]_super as a WeylNormalForm-equal OperatorWord (scalar)."""
    ku, iu = u
    kv, iv = v
    if ku == "dt" and kv == "mt" and iu == iv:
        return OperatorWord.identity(m, n)
    if ku == "mt" and kv == "dt" and iu == iv:
        return -1 * OperatorWord.identity(m, n)
    if ku == "dx" and kv == "mx" and iu == iv:
        return OperatorWord.identity(m, n)
    if ku == "mx" and kv == "dx" and iu == iv:
        return OperatorWord.identity(m, n)
    return OperatorWord(m, n)


def check_weyl_relations(p: CheckParams):
    m, n = p.m, p.n
    atoms = _weyl_atoms(m, n)
    cases = 0
    for u in atoms:
        for v in atoms:
            cases += 1
            s = -1 if atom_parity(u) & atom_parity(v) else 1
            w = (OperatorWord.from_word(m, n, (u, v))
                 - s * OperatorWord.from_word(m, n, (v, u)))
            want = _expected_pair_relation(u, v, m, n)
            if weyl_normal_order(w) != weyl_normal_order(want):
                raise _Fail({"u": str(u), "v": str(v),
                             "got": _print(weyl_normal_order(w).to_word()),
                             "want": _print(want)}, cases)
    # squares of odd atoms vanish
    for j in range(1, n + 1):
        for atom in (("mx", j), ("dx", j)):
            cases += 1
            w = OperatorWord.from_word(m, n, (atom, atom))
            if weyl_normal_order(w):
                raise _Fail({"atom": str(atom), "square": "nonzero"}, cases)
    # idempotence of normal ordering + action faithfulness, seeded
    rng = random.Random(p.seed)
    mono_pool = enumerate_monomials(m, n, 3)
    for t in range(p.trials):
        cases += 1
        length = rng.randint(1, 6)
        word = tuple(atoms[rng.randrange(len(atoms))] for _ in range(length))
        w = OperatorWord.from_word(m, n, word, _random_coeff(rng))
        if rng.random() < 0.5:
            word2 = tuple(atoms[rng.randrange(len(atoms))]
                          for _ in range(rng.randint(1, 4)))
            w = w + OperatorWord.from_word(m, n, word2, _random_coeff(rng))
        nf = weyl_normal_order(w)
        nf2 = weyl_normal_order(nf.to_word())
        if nf != nf2:
            raise _Fail({"trial": t, "word": _print(w),
                         "first": _print(nf.to_word()),
                         "second": _print(nf2.to_word())}, cases)
        mono = mono_pool[rng.randrange(len(mono_pool))]
        poly = SuperPoly.monomial(m, n, mono[0], mono[1])
        got = act_word_poly(w, poly)
        want = act_word_poly(nf.to_word(), poly)
        if got != want:
            raise _Fail({"trial": t, "word": _print(w),
                         "argument": _print(poly), "direct": _print(got),
                         "normal_ordered": _print(want)}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# module_axioms

def check_module_axioms(p: CheckParams):
    spec = _spec(p)
    sgn = -1 if p.mode == "mutated" else 1
    keys = _witt_keys(p.m, p.n, p.deg)
    wkeys = window_keys(spec, p.D)
    cases = 0
    total = len(keys) * len(keys) * len(wkeys)
    if total <= 60000:
        triples = ((kx, ky, wk) for kx in keys for ky in keys
                   for wk in wkeys)
    else:
        rng0 = random.Random(p.seed + 7)
        triples = [(keys[rng0.randrange(len(keys))],
                    keys[rng0.randrange(len(keys))],
                    wkeys[rng0.randrange(len(wkeys))])
                   for _ in range(max(20 * p.trials, 1000))]
    for kx, ky, wk in triples:
        cases += 1
        x = _key_elem(p.m, p.n, kx)
        y = _key_elem(p.m, p.n, ky)
        v = _pure(spec, wk)
        s = -1 if (term_parity(kx[0], kx[1])
                   & term_parity(ky[0], ky[1])) else 1
        lhs = act_witt(spec, witt_bracket(x, y), v, odd_row_sign=sgn)
        rhs = (act_witt(spec, x, act_witt(spec, y, v, odd_row_sign=sgn),
                        odd_row_sign=sgn)
               - s * act_witt(spec, y, act_witt(spec, x, v,
                                                odd_row_sign=sgn),
                              odd_row_sign=sgn))
        if lhs != rhs:
            raise _Fail({
                "law": "bracket compatibility",
                "x": _print(x), "y": _print(y),
                "v": _print(v), "bracket_route": _print(lhs),
                "composition_route": _print(rhs)}, cases)
    # coefficient algebra is associative on the module
    rng = random.Random(p.seed + 13)
    monos = enumerate_monomials(p.m, p.n, p.deg)
    for _ in range(p.trials):
        cases += 1
        am = monos[rng.randrange(len(monos))]
        bm = monos[rng.randrange(len(monos))]
        wk = wkeys[rng.randrange(len(wkeys))]
        v = _pure(spec, wk)
        two_step = act_mono(spec, am, act_mono(spec, bm, v))
        hit = mono_mul(am, bm)
        one_step = TensorElement.zero(spec) if hit is None \
            else hit[1] * act_mono(spec, hit[0], v)
        if two_step != one_step:
            raise _Fail({
                "law": "coefficient associativity",
                "p": _print(SuperPoly.monomial(p.m, p.n, am[0], am[1])),
                "q": _print(SuperPoly.monomial(p.m, p.n, bm[0], bm[1])),
                "v": _print(v), "two_step": _print(two_step),
                "one_step": _print(one_step)}, cases)
    # mixed law: [derivation, multiplication] = multiplication by the
    # plain derivative of the coefficient
    from .witt import witt_act
    for _ in range(p.trials):
        cases += 1
        kx = keys[rng.randrange(len(keys))]
        fm = monos[rng.randrange(len(monos))]
        wk = wkeys[rng.randrange(len(wkeys))]
        x = _key_elem(p.m, p.n, kx)
        v = _pure(spec, wk)
        fpoly = SuperPoly.monomial(p.m, p.n, fm[0], fm[1])
        s = -1 if (term_parity(kx[0], kx[1]) & mono_parity(fm)) else 1
        lhs = (act_witt(spec, x, act_mono(spec, fm, v), odd_row_sign=sgn)
               - s * act_mono(spec, fm, act_witt(spec, x, v,
                                                 odd_row_sign=sgn)))
        rhs = TensorElement.zero(spec)
        for gm, c in witt_act(x, fpoly).terms.items():
            rhs = rhs + c * act_mono(spec, gm, v)
        if lhs != rhs:
            raise _Fail({
                "law": "mixed derivation-multiplication",
                "x": _print(x), "f": _print(fpoly), "v": _print(v),
                "commutator_route": _print(lhs),
                "derivative_route": _print(rhs)}, cases)
    if p.mode == "mutated":
        raise _Fail({"error": "odd-row sign mutation was not detected"},
                    cases)
    return cases, None


# ---------------------------------------------------------------------------
# commutant_homomorphism

def _positive_keys(m, n, deg):
    out = []
    for key in _witt_keys(m, n, deg):
        (alpha, imask), _slot = key
        d = sum(alpha) + popcount(imask)
        if 1 <= d <= deg:
            out.append(key)
    return out


def check_commutant_homomorphism(p: CheckParams):
    spec = _spec(p)
    tau_mode = "flipped" if p.mode == "tau_flipped" else "standard"
    keys = _positive_keys(p.m, p.n, p.deg)
    wkeys = window_keys(spec, p.D)
    cases = 0
    for ku in keys:
        u = _key_elem(p.m, p.n, ku)
        XU = commutant_element(p.m, p.n, ku[0][0], ku[0][1], ku[1],
                               tau_mode=tau_mode).to_word()
        pu = term_parity(ku[0], ku[1])
        for kv in keys:
            cases += 1
            v = _key_elem(p.m, p.n, kv)
            XV = commutant_element(p.m, p.n, kv[0][0], kv[0][1], kv[1],
                                   tau_mode=tau_mode).to_word()
            pv = term_parity(kv[0], kv[1])
            s = -1 if pu & pv else 1
            XB = commutant_of_witt(witt_bracket(u, v),
                                   tau_mode=tau_mode).to_word()
            for wk in wkeys:
                e = _pure(spec, wk)
                lhs = act_word(spec, XB, e)
                rhs = (act_word(spec, XU, act_word(spec, XV, e))
                       - s * act_word(spec, XV, act_word(spec, XU, e)))
                if lhs != rhs:
                    raise _Fail({
                        "u": _print(u), "v": _print(v), "on": _print(e),
                        "bracket_image": _print(lhs),
                        "supercommutator": _print(rhs)}, cases)
    if p.mode == "tau_flipped":
        raise _Fail({"error": "flipped reordering convention was not "
                              "detected"}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# commutant_weyl_commute

def check_commutant_weyl_commute(p: CheckParams):
    spec = _spec(p)
    keys = _positive_keys(p.m, p.n, p.deg)
    atoms = _weyl_atoms(p.m, p.n)
    wkeys = window_keys(spec, p.D)
    cases = 0
    for ku in keys:
        X = commutant_element(p.m, p.n, ku[0][0], ku[0][1], ku[1])
        xw = X.to_word()
        px = X.parity()
        for atom in atoms:
            cases += 1
            s = -1 if px & atom_parity(atom) else 1
            for wk in wkeys:
                e = _pure(spec, wk)
                lhs = act_word(spec, xw, act_atom(spec, atom, e))
                rhs = s * act_atom(spec, atom, act_word(spec, xw, e))
                if lhs != rhs:
                    raise _Fail({
                        "dressed": _print(_key_elem(p.m, p.n, ku)),
                        "atom": str(atom), "on": _print(e),
                        "left": _print(lhs), "right": _print(rhs)}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# gl_realization

def _gl_dictionary(m, n):
    """(row, col) -> degree-1 dressing parameters (alpha, imask, slot)."""
    out = {}
    for col in range(1, m + n + 1):
        slot = (TSLOT, col) if col <= m else (XSLOT, col - m)
        for row in range(1, m + 1):
            alpha = tuple(1 if q == row - 1 else 0 for q in range(m))
            out[(row, col)] = (alpha, 0, slot)
        for row in range(1, n + 1):
            out[(m + row, col)] = ((0,) * m, 1 << (row - 1), slot)
    return out


def check_gl_realization(p: CheckParams):
    spec = _spec(p)
    cases = 0
    for (row, col), (alpha, imask, slot) in sorted(_gl_dictionary(
            p.m, p.n).items()):
        word = commutant_element(p.m, p.n, alpha, imask, slot).to_word()
        mat = spec.rep.mats[(row, col)]
        for l in range(spec.dim):
            cases += 1
            got = act_word(spec, word, TensorElement.vacuum(spec, l))
            want = TensorElement.zero(spec)
            for r in range(spec.dim):
                if mat[r][l]:
                    want = want + TensorElement.vacuum(spec, r, mat[r][l])
            if got != want:
                raise _Fail({
                    "unit": "E %d %d" % (row, col),
                    "dressed": _print(_key_elem(
                        p.m, p.n, ((alpha, imask), slot))),
                    "on": _print(TensorElement.vacuum(spec, l)),
                    "got": _print(got), "want": _print(want)}, cases)
    # everything two steps into the filtration annihilates the vacuum
    for key in _witt_keys(p.m, p.n, 2):
        (alpha, imask), slot = key
        if sum(alpha) + popcount(imask) != 2:
            continue
        word = commutant_element(p.m, p.n, alpha, imask, slot).to_word()
        for l in range(spec.dim):
            cases += 1
            got = act_word(spec, word, TensorElement.vacuum(spec, l))
            if got:
                raise _Fail({
                    "dressed": _print(_key_elem(p.m, p.n, key)),
                    "on": _print(TensorElement.vacuum(spec, l)),
                    "got": _print(got), "want": "0"}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# whittaker_dimension

def check_whittaker_dimension(p: CheckParams):
    spec = _spec(p)
    cases = 0
    dims = {}
    for D in (p.D, p.D + 1):
        basis = whittaker_space(spec, D)
        dims[D] = len(basis)
        cases += 1
        for x in basis:
            cases += 1
            for i in range(1, p.m + 1):
                if lower_t(spec, i, x):
                    raise _Fail({"window": D, "element": _print(x),
                                 "violates": "dt%d - a%d" % (i, i)}, cases)
            for j in range(1, p.n + 1):
                if act_atom(spec, ("dx", j), x):
                    raise _Fail({"window": D, "element": _print(x),
                                 "violates": "dx%d" % j}, cases)
    if dims[p.D] != spec.dim or dims[p.D + 1] != spec.dim:
        raise _Fail({"expected_dim": spec.dim,
                     "window_%d" % p.D: dims[p.D],
                     "window_%d" % (p.D + 1): dims[p.D + 1]}, cases)
    # generalized vectors up to the height bound: every odd layer times
    # t-degrees at most `height` in each coordinate
    gw = generalized_whittaker_space(spec, p.D, height_bound=p.height)
    cases += 1
    if p.height * p.m <= p.D:
        expected = ((p.height + 1) ** p.m) * (1 << p.n) * spec.dim
        if len(gw) != expected:
            raise _Fail({"generalized_height": p.height,
                         "expected": expected, "got": len(gw)}, cases)
    return cases, {"dims": {str(D): dims[D] for D in sorted(dims)},
                   "generalized_dim": len(gw)}


# ---------------------------------------------------------------------------
# descent_roundtrip

def check_descent_roundtrip(p: CheckParams):
    spec = _spec(p)
    if not spec.nonsingular:
        raise ConfigError("descent requires a nonsingular twist vector; "
                          "got a = (%s)" % ", ".join(str(x) for x in p.a))
    rewrite = pbw_basis_rewrite(spec, p.D)
    rng = random.Random(p.seed)
    cases = 0
    for t in range(p.trials):
        cases += 1
        x = _random_tensor(spec, rng, p.D, nterms=rng.randint(1, 4))
        y = descent(spec, x)
        for i in range(1, p.m + 1):
            if lower_t(spec, i, y):
                raise _Fail({"trial": t, "x": _print(x),
                             "descended": _print(y),
                             "violates": "dt%d - a%d" % (i, i)}, cases)
        for j in range(1, p.n + 1):
            if act_atom(spec, ("dx", j), y):
                raise _Fail({"trial": t, "x": _print(x),
                             "descended": _print(y),
                             "violates": "dx%d" % j}, cases)
        if descent(spec, y) != y:
            raise _Fail({"trial": t, "x": _print(x),
                         "error": "descent is not idempotent"}, cases)
        coords = rewrite.to_products(x)
        back = rewrite.from_products(coords)
        if back != x:
            raise _Fail({"trial": t, "x": _print(x),
                         "roundtrip": _print(back)}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# weight_multiplicity

def _cartan(m, n, i):
    alpha = tuple(1 if q == i - 1 else 0 for q in range(m))
    return WittElement.term(m, n, alpha, 0, (TSLOT, i))


def check_weight_multiplicity(p: CheckParams):
    spec = _spec(p)
    expected = (1 << p.n) * spec.dim
    big = window_keys(spec, p.D)
    small = window_keys(spec, p.D - 1)
    col_index = {key: k for k, key in enumerate(big)}
    hs = [_cartan(p.m, p.n, i) for i in range(1, p.m + 1)]
    cases = 0
    rng = random.Random(p.seed)
    for weight in product(range(-2, 3), repeat=p.m):
        cases += 1
        rows = []
        for i, h in enumerate(hs):
            for key in small:
                img = act_witt(spec, h, _pure(spec, key)) \
                    - Fraction(weight[i]) * _pure(spec, key)
                row = [ZERO] * len(big)
                for k2, c in img.terms.items():
                    row[col_index[k2]] = c
                rows.append(row)
        quotient = len(big) - linalg.rank(rows)
        if quotient != expected:
            raise _Fail({"weight": list(weight), "window": p.D,
                         "expected": expected, "got": quotient}, cases)
        # representative independence of the reduction map
        x = _random_tensor(spec, rng, max(p.D - 2, 0), nterms=2)
        y = _random_tensor(spec, rng, max(p.D - 2, 0), nterms=2)
        i = rng.randrange(p.m)
        shifted = x + act_witt(spec, hs[i], y) - Fraction(weight[i]) * y
        cases += 1
        if weight_reduce(spec, shifted, weight) != weight_reduce(
                spec, x, weight):
            raise _Fail({"weight": list(weight), "x": _print(x),
                         "y": _print(y),
                         "error": "reduction depends on the "
                                  "representative"}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# difference_recurrence

def _slot_list(m, n):
    return [(TSLOT, i) for i in range(1, m + 1)] \
        + [(XSLOT, j) for j in range(1, n + 1)]


def check_difference_recurrence(p: CheckParams):
    spec = _spec(p)
    slots = _slot_list(p.m, p.n)
    wkeys = window_keys(spec, p.D)
    rmax = min(p.rmax, 4)
    cases = 0
    for alpha in product(range(2), repeat=p.m):
        for beta in product(range(2), repeat=p.m):
            for imask in range(1 << p.n):
                for jmask in range(1 << p.n):
                    for j in range(1, p.m + 1):
                        for s1 in slots:
                            for s2 in slots:
                                for r in range(rmax):
                                    cases += 1
                                    aj = tuple(
                                        x + (1 if q == j - 1 else 0)
                                        for q, x in enumerate(alpha))
                                    bj = tuple(
                                        x + (1 if q == j - 1 else 0)
                                        for q, x in enumerate(beta))
                                    lhs = (difference_word(
                                        p.m, p.n, aj, beta, imask, jmask,
                                        r, j, s1, s2)
                                        - difference_word(
                                            p.m, p.n, alpha, bj, imask,
                                            jmask, r, j, s1, s2))
                                    rhs = difference_word(
                                        p.m, p.n, alpha, beta, imask,
                                        jmask, r + 1, j, s1, s2)
                                    if lhs != rhs:
                                        raise _Fail({
                                            "route": "formal words",
                                            "alpha": list(alpha),
                                            "beta": list(beta),
                                            "I": imask, "J": jmask,
                                            "r": r, "j": j,
                                            "lhs": _print(lhs),
                                            "rhs": _print(rhs)}, cases)
                                    diff = lhs - rhs
                                    for wk in wkeys:
                                        img = act_word(spec, diff,
                                                       _pure(spec, wk))
                                        if img:
                                            raise _Fail({
                                                "route": "module action",
                                                "alpha": list(alpha),
                                                "beta": list(beta),
                                                "I": imask, "J": jmask,
                                                "r": r, "j": j,
                                                "on": _print(_pure(spec, wk)),
                                                "image": _print(img)}, cases)
    return cases, None


# ---------------------------------------------------------------------------
# difference_annihilation

def _diff_label(alpha, beta, imask, jmask, j, s1, s2):
    def slot_name(s):
        return ("dt%d" if s[0] == TSLOT else "dx%d") % s[1]
    return "%s %s j=%d alpha=%s beta=%s I=%d J=%d" % (
        slot_name(s1), slot_name(s2), j,
        ",".join(str(x) for x in alpha), ",".join(str(x) for x in beta),
        imask, jmask)


def _annihilates_on_keys(spec, word, keys):
    for key in keys:
        if act_word(spec, word, _pure(spec, key)):
            return key
    return None


def check_difference_annihilation(p: CheckParams):
    mode = "untwisted" if p.mode == "corrected" else p.mode
    rep = resolve_rep(p.rep, p.m, p.n)
    if not rep.has_weight_basis():
        raise ConfigError("difference annihilation needs a rep with a "
                          "weight basis (all Cartan matrices diagonal)")
    slots = _slot_list(p.m, p.n)
    table = {}
    cases = 0
    if mode == "untwisted":
        spec0 = ModuleSpec(p.m, p.n, (ZERO,) * p.m, rep)
        keys_lo = window_keys(spec0, p.D)
        keys_hi = window_keys(spec0, p.D + 1)
        sweep = [(alpha, beta, imask, jmask, j, s1, s2)
                 for alpha in product(range(p.deg + 1), repeat=p.m)
                 for beta in product(range(p.deg + 1), repeat=p.m)
                 for imask in range(1 << p.n)
                 for jmask in range(1 << p.n)
                 for j in range(1, p.m + 1)
                 for s1 in slots for s2 in slots]
        for alpha, beta, imask, jmask, j, s1, s2 in sweep:
            cases += 1
            label = _diff_label(alpha, beta, imask, jmask, j, s1, s2)
            found = None
            for r in range(p.rmax + 1):
                word = difference_word(p.m, p.n, alpha, beta, imask,
                                       jmask, r, j, s1, s2)
                bad = _annihilates_on_keys(spec0, word, keys_hi)
                if bad is None:
                    found = r
                    break
            if found is None:
                word = difference_word(p.m, p.n, alpha, beta, imask, jmask,
                                       p.rmax, j, s1, s2)
                bad = _annihilates_on_keys(spec0, word, keys_lo)
                witness = "none within the window" if bad is None else \
                    _print(act_word(spec0, word, _pure(spec0, bad)))
                raise _Fail({"word": label, "rmax": p.rmax,
                             "surviving_image": witness}, cases)
            # window stability: the same order must do on the smaller window
            for r in range(found):
                word = difference_word(p.m, p.n, alpha, beta, imask,
                                       jmask, r, j, s1, s2)
                if _annihilates_on_keys(spec0, word, keys_lo) is None:
                    raise _Fail({"word": label,
                                 "error": "minimal order %d not stable "
                                          "between windows" % found}, cases)
            table[label] = found
        return cases, {"minimal_r": table}
    if mode != "coset":
        raise ConfigError("difference annihilation mode must be "
                          "'untwisted' or 'coset'")
    spec = ModuleSpec(p.m, p.n, p.a, rep)
    if not spec.nonsingular:
        raise ConfigError("coset mode needs a nonsingular twist vector")
    units = unit_basis(spec)
    weights = list(product(range(-1, 2), repeat=p.m))
    deg = min(p.deg, 1)
    sweep = [(alpha, beta, imask, jmask, j, s1, s2)
             for alpha in product(range(deg + 1), repeat=p.m)
             for beta in product(range(deg + 1), repeat=p.m)
             for imask in range(1 << p.n)
             for jmask in range(1 << p.n)
             for j in range(1, p.m + 1)
             for s1 in slots for s2 in slots]
    for alpha, beta, imask, jmask, j, s1, s2 in sweep:
        cases += 1
        label = _diff_label(alpha, beta, imask, jmask, j, s1, s2)
        found = None
        for r in range(p.rmax + 1):
            ok = True
            for weight in weights:
                for u in units:
                    coset = weight_reduce(spec, unit_vector(spec, *u),
                                          weight)
                    acc = None
                    for i in range(r + 1):
                        ai = tuple(x + (r - i if q == j - 1 else 0)
                                   for q, x in enumerate(alpha))
                        bi = tuple(x + (i if q == j - 1 else 0)
                                   for q, x in enumerate(beta))
                        g1 = WittElement.term(p.m, p.n, ai, imask, s1)
                        g2 = WittElement.term(p.m, p.n, bi, jmask, s2)
                        piece = weight_act(spec, g1,
                                           weight_act(spec, g2, coset))
                        c = Fraction((-1) ** i) * _binom(r, i)
                        vals = tuple(c * x for x in piece.coords)
                        acc = vals if acc is None else tuple(
                            u0 + v0 for u0, v0 in zip(acc, vals))
                    if acc and any(acc):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found = r
                break
        if found is None:
            raise _Fail({"word": label, "rmax": p.rmax,
                         "mode": "coset",
                         "error": "no annihilation order found"}, cases)
        table[label] = found
    return cases, {"minimal_r": table}


def _binom(r, i):
    return Fraction(comb(r, i))


# ---------------------------------------------------------------------------
# simplicity_probe

def _probe(spec, gens, x, cap):
    span = TensorSpan()
    span.insert(x)
    vacuums = [TensorElement.vacuum(spec, l) for l in range(spec.dim)]
    frontier = [x]
    while frontier:
        if all(span.contains(v) for v in vacuums):
            return "covered", span
        new = []
        for f in frontier:
            for kind, arg in gens:
                if kind == "w":
                    y = act_term(spec, arg[0][0], arg[0][1], arg[1], f)
                else:
                    y = act_mono(spec, arg, f)
                if not y or y.tdegree() > cap:
                    continue
                if span.insert(y):
                    new.append(y)
        frontier = new
    if all(span.contains(v) for v in vacuums):
        return "covered", span
    return "stabilized", span


def _probe_generators(m, n, cap):
    """Coefficient multiplications plus every basis derivation that can
    act within the degree cap: the module structure being probed is over
    the extended algebra, so both families belong to the generating set."""
    gens = [("m", (tuple(1 if q == i else 0 for q in range(m)), 0))
            for i in range(m)]
    gens += [("m", ((0,) * m, 1 << j)) for j in range(n)]
    gens += [("w", key) for key in _witt_keys(m, n, cap)]
    return gens


def check_simplicity_probe(p: CheckParams):
    spec = _spec(p)
    gens = _probe_generators(p.m, p.n, p.D)
    rng = random.Random(p.seed)
    seeds = [(l, TensorElement.vacuum(spec, l)) for l in range(spec.dim)]
    extra = max(0, min(p.trials, 10) - len(seeds))
    for t in range(extra):
        seeds.append(("random%d" % t,
                      _random_tensor(spec, rng, max(p.D - 2, 0),
                                     nterms=rng.randint(1, 3))))
    cases = 0
    evidence = None
    for tag, x in seeds:
        if not x:
            continue
        cases += 1
        outcome, span = _probe(spec, gens, x, p.D)
        if outcome == "stabilized":
            missing = [l for l in range(spec.dim)
                       if not span.contains(TensorElement.vacuum(spec, l))]
            if p.expect_reducible and missing:
                evidence = {"seed": str(tag), "span_dim": span.dim,
                            "missing_vacuum": "e%d" % (missing[0] + 1)}
            elif not p.expect_reducible:
                raise _Fail({"seed": str(tag), "start": _print(x),
                             "span_dim": span.dim,
                             "missing_vacuum":
                                 "e%d" % (missing[0] + 1) if missing
                                 else "none"}, cases)
    if p.expect_reducible:
        if evidence is None:
            raise _Fail({"error": "no invariant proper subspace found, "
                                  "module looks simple at this window"},
                        cases)
        return cases, {"reducibility_evidence": evidence}
    return cases, None


# ---------------------------------------------------------------------------
# registry and runner

REGISTRY = {
    "jacobi": check_jacobi,
    "bracket_oracle": check_bracket_oracle,
    "weyl_relations": check_weyl_relations,
    "module_axioms": check_module_axioms,
    "commutant_homomorphism": check_commutant_homomorphism,
    "commutant_weyl_commute": check_commutant_weyl_commute,
    "gl_realization": check_gl_realization,
    "whittaker_dimension": check_whittaker_dimension,
    "descent_roundtrip": check_descent_roundtrip,
    "weight_multiplicity": check_weight_multiplicity,
    "difference_recurrence": check_difference_recurrence,
    "difference_annihilation": check_difference_annihilation,
    "simplicity_probe": check_simplicity_probe,
}


def run_check(check_id, merged) -> CheckReport:
    if check_id not in REGISTRY:
        raise ConfigError("unknown check id %r (known: %s)"
                          % (check_id, ", ".join(sorted(REGISTRY))))
    params = CheckParams.from_dict(check_id, merged)
    start = time.monotonic()
    try:
        cases, data = REGISTRY[check_id](params)
        status, cex = "pass", None
    except _Fail as f:
        status, cases, cex, data = "fail", f.cases, f.cex, None
    except (ConfigError, TransitionSingular, ValueError) as e:
        status, cases, cex, data = "error", 0, {"error": str(e)}, None
    elapsed = int((time.monotonic() - start) * 1000)
    return CheckReport(id=check_id, params=params.as_dict(), status=status,
                       cases=cases, elapsed_ms=elapsed, counterexample=cex,
                       data=data)
