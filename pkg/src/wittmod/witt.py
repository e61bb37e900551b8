"""Superderivations of the supercommutative algebra and their brackets.

A basis derivation is a monomial times a coordinate derivative, stored as
a key ((alpha, imask), slot) where slot is ('t', i) or ('x', j).  The
parity of such a term is |imask| for a t-slot and |imask|+1 for an x-slot.

witt_bracket computes the supercommutator from closed structure-constant
formulas.  Two of those formulas circulate with the factor t^(alpha+beta)
missing from their delta terms; mode="corrected" (default) includes the
factor and mode="verbatim" reproduces the uncorrected table.  The ground
truth either way is bracket_oracle, which composes the derivation actions
on the polynomial algebra and reads the result off the generators -- the
two routes are compared mechanically by the verifier and must never be
collapsed into one.
"""

from __future__ import annotations

from fractions import Fraction

from .superpoly import (
    ONE,
    ZERO,
    SuperPoly,
    mask_indices,
    mono_parity,
    mono_sort_key,
    mono_tdeg,
    popcount,
    xi_position,
)

TSLOT = "t"
XSLOT = "x"


def slot_parity(slot) -> int:
    return 0 if slot[0] == TSLOT else 1


def term_parity(mono, slot) -> int:
    return (mono_parity(mono) + slot_parity(slot)) & 1


def term_sort_key(key):
    mono, slot = key
    return mono_sort_key(mono) + (slot_parity(slot), slot[1])


class WittElement:
    """Exact linear combination of basis superderivations."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms=None):
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
    def term(cls, m, n, alpha, odd_mask, slot, coeff=ONE):
        alpha = tuple(alpha)
        if len(alpha) != m or any(a < 0 for a in alpha):
            raise ValueError("bad exponent tuple %r" % (alpha,))
        if odd_mask >> n:
            raise ValueError("odd index out of range for n=%d" % n)
        kind, idx = slot
        if kind == TSLOT and not 1 <= idx <= m:
            raise ValueError("d/dt index %d out of range" % idx)
        if kind == XSLOT and not 1 <= idx <= n:
            raise ValueError("d/dxi index %d out of range" % idx)
        if kind not in (TSLOT, XSLOT):
            raise ValueError("bad slot kind %r" % (kind,))
        x = cls(m, n)
        if coeff:
            x.terms[((alpha, odd_mask), (kind, idx))] = Fraction(coeff)
        return x

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    def _check(self, other):
        if self.m != other.m or self.n != other.n:
            raise ValueError("shape mismatch: (%d,%d) vs (%d,%d)"
                             % (self.m, self.n, other.m, other.n))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c0 = terms.get(key, ZERO) + c
            if c0:
                terms[key] = c0
            else:
                del terms[key]
        out = WittElement(self.m, self.n)
        out.terms = terms
        return out

    def __neg__(self):
        out = WittElement(self.m, self.n)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        out = WittElement(self.m, self.n)
        if scalar:
            out.terms = {k: c * scalar for k, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, WittElement) and self.m == other.m
                and self.n == other.n and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "WittElement(0)"
        bits = []
        for key in sorted(self.terms, key=term_sort_key):
            bits.append("%s*%s%s" % (self.terms[key], key[0], key[1]))
        return "WittElement(%s)" % " + ".join(bits)

    def parity(self):
        if not self.terms:
            return 0
        seen = {term_parity(mono, slot) for mono, slot in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def homogeneous_parts(self):
        ev = WittElement(self.m, self.n)
        od = WittElement(self.m, self.n)
        for key, c in self.terms.items():
            (od if term_parity(*key) else ev).terms[key] = c
        return ev, od

    def in_positive_part(self) -> bool:
        """True when every coefficient monomial lies in the augmentation
        ideal (no constant-coefficient derivative terms)."""
        return all(mono_tdeg(mono) + popcount(mono[1]) >= 1
                   for mono, _ in self.terms)

    def tdegree(self):
        return max((mono_tdeg(mono) for mono, _ in self.terms), default=-1)


# ---------------------------------------------------------------------------
# structure constants

def _merge_masks(a, b):
    if a & b:
        return 0, 0
    inv = 0
    rest = b
    j = 0
    while rest:
        if rest & 1:
            inv += popcount(a >> (j + 1))
        rest >>= 1
        j += 1
    return (-1 if inv & 1 else 1), a | b


def _bracket_basis(m, mono1, slot1, mono2, slot2, corrected=True):
    """[basis term, basis term] as a list of (key, int coefficient)."""
    alpha, imask = mono1
    beta, jmask = mono2
    k1, i = slot1
    k2, j = slot2

    if k1 == XSLOT and k2 == TSLOT:
        # flip via super-antisymmetry: [u,v] = -(-1)^{|u||v|} [v,u]
        swapped = _bracket_basis(m, mono2, slot2, mono1, slot1, corrected)
        p1 = term_parity(mono1, slot1)
        p2 = term_parity(mono2, slot2)
        s = -1 if p1 * p2 & 1 else 1
        return [(key, -s * c) for key, c in swapped]

    out = []
    if k1 == TSLOT and k2 == TSLOT:
        sign, union = _merge_masks(imask, jmask)
        if sign:
            bi = beta[i - 1]
            if bi:
                g = list(a + b for a, b in zip(alpha, beta))
                g[i - 1] -= 1
                out.append((((tuple(g), union), (TSLOT, j)), sign * bi))
            aj = alpha[j - 1]
            if aj:
                g = list(a + b for a, b in zip(alpha, beta))
                g[j - 1] -= 1
                out.append((((tuple(g), union), (TSLOT, i)), -sign * aj))
        return out

    if k1 == TSLOT and k2 == XSLOT:
        sign, union = _merge_masks(imask, jmask)
        if sign:
            bi = beta[i - 1]
            if bi:
                g = list(a + b for a, b in zip(alpha, beta))
                g[i - 1] -= 1
                out.append((((tuple(g), union), (XSLOT, j)), sign * bi))
        bit = 1 << (j - 1)
        if imask & bit:
            pI = popcount(imask)
            pJ = popcount(jmask)
            # -(-1)^{|I|(|J|-1)} (-1)^{pos}
            s0 = 1 if (pI * (pJ - 1) + xi_position(imask, j)) & 1 else -1
            msign, munion = _merge_masks(jmask, imask & ~bit)
            if msign:
                g = (tuple(a + b for a, b in zip(alpha, beta))
                     if corrected else (0,) * m)
                out.append((((g, munion), (TSLOT, i)), s0 * msign))
        return out

    # both odd slots
    bit_i = 1 << (i - 1)
    if jmask & bit_i:
        s1 = -1 if xi_position(jmask, i) & 1 else 1
        msign, munion = _merge_masks(imask, jmask & ~bit_i)
        if msign:
            g = tuple(a + b for a, b in zip(alpha, beta))
            out.append((((g, munion), (XSLOT, j)), s1 * msign))
    bit_j = 1 << (j - 1)
    if imask & bit_j:
        pI = popcount(imask)
        pJ = popcount(jmask)
        s2 = -1 if (xi_position(imask, j) + (pI - 1) * (pJ - 1)) & 1 else 1
        msign, munion = _merge_masks(jmask, imask & ~bit_j)
        if msign:
            g = (tuple(a + b for a, b in zip(alpha, beta))
                 if corrected else (0,) * m)
            out.append((((g, munion), (XSLOT, i)), -s2 * msign))
    return out


def witt_bracket(x: WittElement, y: WittElement, mode="corrected") -> WittElement:
    """Supercommutator via the closed structure-constant table.

    mode="verbatim" drops the t^(alpha+beta) factor from the two delta
    terms; it exists only so the verifier can demonstrate that the
    uncorrected table contradicts the derivation-action oracle.
    """
    if mode not in ("corrected", "verbatim"):
        raise ValueError("unknown bracket mode %r" % (mode,))
    x._check(y)
    corrected = mode == "corrected"
    acc = {}
    for (mono1, slot1), c1 in x.terms.items():
        for (mono2, slot2), c2 in y.terms.items():
            c12 = c1 * c2
            for key, c in _bracket_basis(x.m, mono1, slot1, mono2, slot2,
                                         corrected):
                c0 = acc.get(key, ZERO) + c12 * c
                if c0:
                    acc[key] = c0
                else:
                    del acc[key]
    out = WittElement(x.m, x.n)
    out.terms = acc
    return out


# ---------------------------------------------------------------------------
# action on the polynomial algebra and the independent oracle

def witt_act(x: WittElement, p: SuperPoly) -> SuperPoly:
    """Apply the superderivation: multiply by the coefficient monomial
    after taking the slot derivative."""
    if x.m != p.m or x.n != p.n:
        raise ValueError("shape mismatch between derivation and polynomial")
    out = SuperPoly(x.m, x.n)
    for (mono, slot), c in x.terms.items():
        dp = p.partial_t(slot[1]) if slot[0] == TSLOT else p.partial_xi(slot[1])
        if not dp:
            continue
        front = SuperPoly(x.m, x.n)
        front.terms[mono] = c
        out = out + front * dp
    return out


def generators(m: int, n: int):
    """The coordinate generators as polynomials, t's first."""
    gens = [(SuperPoly.t_var(m, n, i), (TSLOT, i)) for i in range(1, m + 1)]
    gens += [(SuperPoly.xi_var(m, n, j), (XSLOT, j)) for j in range(1, n + 1)]
    return gens


def bracket_oracle(x: WittElement, y: WittElement) -> WittElement:
    """Supercommutator computed without structure constants.

    Composes the derivation actions on the algebra and rebuilds the
    resulting superderivation from its values on the generators (a
    superderivation is determined by those values).  Mixed-parity inputs
    are split into homogeneous parts first.
    """
    x._check(y)
    out = WittElement(x.m, x.n)
    gens = generators(x.m, x.n)
    for xh in x.homogeneous_parts():
        if not xh:
            continue
        px = xh.parity()
        for yh in y.homogeneous_parts():
            if not yh:
                continue
            py = yh.parity()
            sign = -1 if px * py & 1 else 1
            for g, slot in gens:
                val = witt_act(xh, witt_act(yh, g)) \
                    - sign * witt_act(yh, witt_act(xh, g))
                for mono, c in val.terms.items():
                    key = (mono, slot)
                    c0 = out.terms.get(key, ZERO) + c
                    if c0:
                        out.terms[key] = c0
                    else:
                        del out.terms[key]
    return out


# ---------------------------------------------------------------------------
# the abelian extension by the algebra itself

class ExtendedWittElement:
    """Pair (derivation part, function part) in the semidirect sum where
    the algebra is an abelian ideal acted on by the derivations."""

    __slots__ = ("der", "fun")

    def __init__(self, der: WittElement, fun: SuperPoly):
        if der.m != fun.m or der.n != fun.n:
            raise ValueError("shape mismatch between parts")
        self.der = der
        self.fun = fun

    @classmethod
    def from_witt(cls, x: WittElement):
        return cls(x, SuperPoly.zero(x.m, x.n))

    @classmethod
    def from_poly(cls, a: SuperPoly):
        return cls(WittElement.zero(a.m, a.n), a)

    def __add__(self, other):
        return ExtendedWittElement(self.der + other.der, self.fun + other.fun)

    def __sub__(self, other):
        return ExtendedWittElement(self.der - other.der, self.fun - other.fun)

    def __neg__(self):
        return ExtendedWittElement(-self.der, -self.fun)

    def __mul__(self, scalar):
        return ExtendedWittElement(self.der * scalar, self.fun * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ExtendedWittElement)
                and self.der == other.der and self.fun == other.fun)

    def __bool__(self):
        return bool(self.der) or bool(self.fun)

    def __repr__(self):
        return "ExtendedWittElement(%r, %r)" % (self.der, self.fun)


def extended_bracket(u: ExtendedWittElement, v: ExtendedWittElement,
                     mode="corrected") -> ExtendedWittElement:
    """[x+a, y+b] = [x,y] + x(b) - (-1)^{|y||a|} y(a); the function part is
    an abelian ideal."""
    der = witt_bracket(u.der, v.der, mode)
    fun = witt_act(u.der, v.fun)
    for yh in v.der.homogeneous_parts():
        if not yh:
            continue
        py = yh.parity()
        for ah in u.fun.homogeneous_parts():
            if not ah:
                continue
            sign = -1 if py * ah.parity() & 1 else 1
            fun = fun - sign * witt_act(yh, ah)
    return ExtendedWittElement(der, fun)


def extended_basis(m, n, max_tdeg):
    """Homogeneous basis of the extension up to a t-degree bound:
    all basis derivations plus all monomials."""
    from .superpoly import enumerate_monomials
    out = []
    for mono in enumerate_monomials(m, n, max_tdeg):
        for i in range(1, m + 1):
            out.append(ExtendedWittElement.from_witt(
                WittElement.term(m, n, mono[0], mono[1], (TSLOT, i))))
        for j in range(1, n + 1):
            out.append(ExtendedWittElement.from_witt(
                WittElement.term(m, n, mono[0], mono[1], (XSLOT, j))))
        p = SuperPoly(m, n)
        p.terms[mono] = ONE
        out.append(ExtendedWittElement.from_poly(p))
    return out


def witt_basis(m, n, max_tdeg):
    """All basis derivations with t-degree <= max_tdeg."""
    from .superpoly import enumerate_monomials
    out = []
    for mono in enumerate_monomials(m, n, max_tdeg):
        for i in range(1, m + 1):
            out.append(WittElement.term(m, n, mono[0], mono[1], (TSLOT, i)))
        for j in range(1, n + 1):
            out.append(WittElement.term(m, n, mono[0], mono[1], (XSLOT, j)))
    return out
