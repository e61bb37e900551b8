"""Derivations dressed with polynomial coefficients on the left.

A dressed term is a pair (a, x): an algebra monomial a multiplying a basis
superderivation x inside the smash product of the algebra with the
derivations.  The bracket

    [a.x, b.y] = a x(b).y - (-1)^{|a.x||b.y|} b y(a).x + (-1)^{|x||b|} ab.[x,y]

is computed term by term; x(b) means the derivation action on the algebra
and [x,y] the superderivation bracket.

commutant_element builds the alternating binomial dressing of a basis
derivation whose action on twisted tensor modules commutes with every
multiply/derive atom; those elements are what realize the matrix algebra
on the Whittaker vectors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

from .superpoly import (ONE, ZERO, mono_mul, mono_parity, mono_partial_t,
                        mono_partial_xi, mono_sort_key, mono_tdeg, popcount)
from .witt import (WittElement, _bracket_basis, term_parity, term_sort_key,
                   TSLOT, XSLOT)
from .words import OperatorWord, make_watom


class DressedWittElement:
    """Linear combination of dressed terms ((amono), (wmono, slot))."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
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
    def from_witt(cls, x: WittElement):
        unit = ((0,) * x.m, 0)
        out = cls(x.m, x.n)
        out.terms = {(unit, key): c for key, c in x.terms.items()}
        return out

    @classmethod
    def term(cls, m, n, amono, wmono, slot, coeff=ONE):
        WittElement.term(m, n, wmono[0], wmono[1], slot)  # validates
        out = cls(m, n)
        if coeff:
            out.terms[((tuple(amono[0]), amono[1]),
                       ((tuple(wmono[0]), wmono[1]), slot))] = Fraction(coeff)
        return out

    def _check(self, other):
        if self.m != other.m or self.n != other.n:
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
        out = DressedWittElement(self.m, self.n)
        out.terms = terms
        return out

    def __neg__(self):
        out = DressedWittElement(self.m, self.n)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        out = DressedWittElement(self.m, self.n)
        if scalar:
            out.terms = {k: c * scalar for k, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, DressedWittElement) and self.m == other.m
                and self.n == other.n and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "DressedWittElement(0)"
        bits = []
        for key in sorted(self.terms, key=dressed_sort_key):
            bits.append("%s*%r.%r" % (self.terms[key], key[0], key[1]))
        return "DressedWittElement(%s)" % " + ".join(bits)

    def parity(self):
        if not self.terms:
            return 0
        seen = {dressed_parity(k) for k in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def homogeneous_parts(self):
        ev = DressedWittElement(self.m, self.n)
        od = DressedWittElement(self.m, self.n)
        for key, c in self.terms.items():
            (od if dressed_parity(key) else ev).terms[key] = c
        return ev, od

    def to_word(self) -> OperatorWord:
        """Multiplication atoms for the dressing, then the derivation."""
        out = OperatorWord(self.m, self.n)
        for ((alpha, imask), (wmono, slot)), c in self.terms.items():
            atoms = []
            for i, e in enumerate(alpha, start=1):
                atoms.extend([("mt", i)] * e)
            for j in range(1, self.n + 1):
                if imask & (1 << (j - 1)):
                    atoms.append(("mx", j))
            atoms.append(make_watom(wmono[0], wmono[1], slot))
            word = tuple(atoms)
            c0 = out.terms.get(word, ZERO) + c
            if c0:
                out.terms[word] = c0
            else:
                out.terms.pop(word, None)
        return out


def dressed_parity(key) -> int:
    amono, (wmono, slot) = key
    return (mono_parity(amono) + term_parity(wmono, slot)) & 1


def dressed_sort_key(key):
    amono, wkey = key
    return mono_sort_key(amono) + term_sort_key(wkey)


def _act_term_on_mono(wmono, slot, mono):
    """Basis derivation applied to a monomial: (mono, int coeff) or None."""
    if slot[0] == TSLOT:
        hit = mono_partial_t(mono, slot[1])
    else:
        hit = mono_partial_xi(mono, slot[1])
    if hit is None:
        return None
    dmono, c1 = hit
    prod = mono_mul(wmono, dmono)
    if prod is None:
        return None
    return prod[0], c1 * prod[1]


def dressed_bracket(u: DressedWittElement, v: DressedWittElement,
                    mode="corrected") -> DressedWittElement:
    u._check(v)
    corrected = mode == "corrected"
    if mode not in ("corrected", "verbatim"):
        raise ValueError("unknown bracket mode %r" % (mode,))
    acc = {}

    def put(key, c):
        c0 = acc.get(key, ZERO) + c
        if c0:
            acc[key] = c0
        else:
            acc.pop(key, None)

    for (a, xkey), cu in u.terms.items():
        xmono, xslot = xkey
        px = term_parity(xmono, xslot)
        pa = mono_parity(a)
        for (b, ykey), cv in v.terms.items():
            ymono, yslot = ykey
            py = term_parity(ymono, yslot)
            pb = mono_parity(b)
            c0 = cu * cv
            # a x(b) . y
            hit = _act_term_on_mono(xmono, xslot, b)
            if hit:
                mono, c1 = hit
                prod = mono_mul(a, mono)
                if prod:
                    put((prod[0], ykey), c0 * c1 * prod[1])
            # -(-1)^{|a.x||b.y|} b y(a) . x
            hit = _act_term_on_mono(ymono, yslot, a)
            if hit:
                mono, c1 = hit
                prod = mono_mul(b, mono)
                if prod:
                    sign = -1 if (pa + px) * (pb + py) & 1 else 1
                    put((prod[0], xkey), -sign * c0 * c1 * prod[1])
            # (-1)^{|x||b|} ab . [x,y]
            prod = mono_mul(a, b)
            if prod:
                sign = -1 if px * pb & 1 else 1
                cab = c0 * prod[1] * sign
                for key, c2 in _bracket_basis(u.m, xmono, xslot, ymono,
                                              yslot, corrected):
                    put((prod[0], key), cab * c2)
    out = DressedWittElement(u.m, u.n)
    out.terms = acc
    return out


# ---------------------------------------------------------------------------

def _tau(jmask: int, kmask: int) -> int:
    """#{(j,k) : j in J, k in K, j > k}."""
    count = 0
    rest = jmask
    pos = 0
    while rest:
        if rest & 1:
            count += popcount(kmask & ((1 << pos) - 1))
        rest >>= 1
        pos += 1
    return count


def _submasks(mask: int):
    """All submasks, ascending-by-value (deterministic)."""
    subs = []
    s = 0
    while True:
        subs.append(s)
        if s == mask:
            break
        s = (s - mask) & mask
    subs.sort()
    return subs


def commutant_element(m, n, alpha, imask, slot,
                      tau_mode="standard") -> DressedWittElement:
    """Alternating binomial dressing of t^alpha xi_I d.

    Sum over 0 <= beta <= alpha (coordinatewise) and J subset I of
        (-1)^{|beta|+|J|+tau(J, I\\J)} C(alpha,beta) (t^beta xi_J).(t^(alpha-beta) xi_(I\\J) d)
    with C the product of coordinatewise binomials.  Defined only when the
    derivation has a nonconstant coefficient (|alpha|+|I| > 0).

    tau_mode="flipped" counts the reordering pairs in the other order,
    tau(I\\J, J); that convention breaks the bracket homomorphism and
    exists as a verifier control route.
    """
    alpha = tuple(alpha)
    if sum(alpha) + popcount(imask) == 0:
        raise ValueError("requires a coefficient monomial in the "
                         "augmentation ideal")
    if tau_mode not in ("standard", "flipped"):
        raise ValueError("unknown tau_mode %r" % (tau_mode,))
    WittElement.term(m, n, alpha, imask, slot)  # validates shape
    out = DressedWittElement(m, n)
    beta_ranges = [range(a + 1) for a in alpha]
    for beta in product(*beta_ranges):
        cbin = 1
        for a, b in zip(alpha, beta):
            cbin *= comb(a, b)
        rest_alpha = tuple(a - b for a, b in zip(alpha, beta))
        for jmask in _submasks(imask):
            kmask = imask & ~jmask
            tau = _tau(jmask, kmask) if tau_mode == "standard" \
                else _tau(kmask, jmask)
            sign_exp = sum(beta) + popcount(jmask) + tau
            c = Fraction(cbin) * (-1 if sign_exp & 1 else 1)
            key = ((beta, jmask), ((rest_alpha, kmask), slot))
            c0 = out.terms.get(key, ZERO) + c
            if c0:
                out.terms[key] = c0
            else:
                out.terms.pop(key, None)
    return out


def commutant_of_witt(x: WittElement, tau_mode="standard") -> DressedWittElement:
    """Linear extension of commutant_element over a combination whose
    coefficient monomials all lie in the augmentation ideal."""
    out = DressedWittElement(x.m, x.n)
    for (mono, slot), c in x.terms.items():
        out = out + c * commutant_element(x.m, x.n, mono[0], mono[1], slot,
                                          tau_mode=tau_mode)
    return out


def dressed_basis(m, n, max_tdeg):
    """Dressed basis terms with combined t-degree <= max_tdeg."""
    from .superpoly import enumerate_monomials
    out = []
    for amono in enumerate_monomials(m, n, max_tdeg):
        rem = max_tdeg - mono_tdeg(amono)
        for wmono in enumerate_monomials(m, n, rem):
            for i in range(1, m + 1):
                out.append(DressedWittElement.term(m, n, amono, wmono,
                                                   (TSLOT, i)))
            for j in range(1, n + 1):
                out.append(DressedWittElement.term(m, n, amono, wmono,
                                                   (XSLOT, j)))
    return out
