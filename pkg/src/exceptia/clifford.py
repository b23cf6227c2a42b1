"""Clifford algebras C_{p,q}, their matrix classification, and spinor types.

Elements are exact rational combinations of blades. A blade is a subset of
the generators written in ascending order and stored as a bitmask; the first
p generators square to -1, the remaining q square to +1, and distinct
generators anticommute. The classification into matrix algebras over R, C, H
is table-driven mod 8, and the spinor taxonomy (Dirac, Majorana, Weyl,
Majorana-Weyl, and which dimensions admit the supersymmetric balance
2(n-2)) is derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Set, Tuple

from .exactnum import Rat, rat

MAX_GENERATORS = 24


@dataclass(frozen=True)
class CliffordSignature:
    p: int  # generators squaring to -1
    q: int  # generators squaring to +1

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q > MAX_GENERATORS:
            raise ValueError("signature out of supported range")

    @property
    def n(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class CliffordElement:
    """Map from blade bitmask to nonzero rational coefficient."""

    signature: CliffordSignature
    terms: Tuple[Tuple[int, Fraction], ...]  # sorted by bitmask, no zeros

    @staticmethod
    def from_dict(sig: CliffordSignature, d: Dict[int, Rat]) -> "CliffordElement":
        items = []
        for mask, c in sorted(d.items()):
            if mask < 0 or mask >= 1 << sig.n:
                raise ValueError("blade outside the algebra")
            c = rat(c)
            if c:
                items.append((mask, c))
        return CliffordElement(sig, tuple(items))

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        _check(self, other)
        d = self.as_dict()
        for mask, c in other.terms:
            d[mask] = d.get(mask, Fraction(0)) + c
        return CliffordElement.from_dict(self.signature, d)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.signature,
                               tuple((m, -c) for m, c in self.terms))

    def scale(self, s: Rat) -> "CliffordElement":
        s = rat(s)
        if not s:
            return CliffordElement(self.signature, ())
        return CliffordElement(self.signature,
                               tuple((m, s * c) for m, c in self.terms))


def _check(x: CliffordElement, y: CliffordElement) -> None:
    if x.signature != y.signature:
        raise ValueError("signature mismatch")


def scalar(sig: CliffordSignature, c: Rat = 1) -> CliffordElement:
    return CliffordElement.from_dict(sig, {0: c})


def generator(sig: CliffordSignature, i: int) -> CliffordElement:
    """e_i for 1 <= i <= p+q (the first p square to -1)."""
    if not 1 <= i <= sig.n:
        raise ValueError("generator index out of range")
    return CliffordElement.from_dict(sig, {1 << (i - 1): 1})


def blade(sig: CliffordSignature, indices, c: Rat = 1) -> CliffordElement:
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError("repeated index in blade")
        mask |= bit
    return CliffordElement.from_dict(sig, {mask: c})


def _blade_mul(sig: CliffordSignature, a: int, b: int) -> Tuple[int, int]:
    """Product of two basis blades: returns (mask, sign)."""
    sign = 1
    # count transpositions moving each generator of b past the tail of a
    rest = a
    bb = b
    while bb:
        low = bb & -bb
        i = low.bit_length() - 1
        # generators of a strictly above position i must hop over e_i
        above = rest >> (i + 1)
        if bin(above).count("1") & 1:
            sign = -sign
        if rest & low:
            # e_i e_i contracts to its square
            if i < sig.p:
                sign = -sign
            rest ^= low
        else:
            rest |= low
        bb ^= low
    return rest, sign


def clif_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    _check(x, y)
    sig = x.signature
    acc: Dict[int, Fraction] = {}
    for ma, ca in x.terms:
        for mb, cb in y.terms:
            mask, sign = _blade_mul(sig, ma, mb)
            c = ca * cb if sign > 0 else -(ca * cb)
            acc[mask] = acc.get(mask, Fraction(0)) + c
    return CliffordElement.from_dict(sig, acc)


def clif_reverse(x: CliffordElement) -> CliffordElement:
    """Reverse the order of generators in each blade: grade g picks up
    (-1)^(g(g-1)/2). An anti-automorphism."""
    out = []
    for mask, c in x.terms:
        g = bin(mask).count("1")
        if (g * (g - 1) // 2) & 1:
            c = -c
        out.append((mask, c))
    return CliffordElement(x.signature, tuple(out))


# --------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class MatrixAlgebraClass:
    ring: str      # "R", "C", or "H"
    size: int      # matrices are size x size
    summands: int  # 1, or 2 for a direct sum of two equal blocks

    def __str__(self) -> str:
        one = self.ring if self.size == 1 else f"{self.ring}({self.size})"
        return one if self.summands == 1 else f"{one}+{one}"


_RING_DIM = {"R": 1, "C": 2, "H": 4}

# isomorphism type of C_{p,q} by (p - q) mod 8; sizes then follow from
# dimension counting: summands * m^2 * dim_R(ring) = 2^(p+q)
_CLASS_BY_RESIDUE = {
    0: ("R", 1),
    1: ("C", 1),
    2: ("H", 1),
    3: ("H", 2),
    4: ("H", 1),
    5: ("C", 1),
    6: ("R", 1),
    7: ("R", 2),
}


def _classify_raw(p: int, q: int) -> MatrixAlgebraClass:
    ring, summands = _CLASS_BY_RESIDUE[(p - q) % 8]
    total = 1 << (p + q)
    m2 = total // (summands * _RING_DIM[ring])
    m = math.isqrt(m2)
    if m * m != m2:
        raise ArithmeticError(f"dimension count {m2} is not a perfect square")
    return MatrixAlgebraClass(ring, m, summands)


def classify(sig: CliffordSignature) -> MatrixAlgebraClass:
    return _classify_raw(sig.p, sig.q)


def periodicity_check(sig: CliffordSignature) -> bool:
    """Adding eight negative-square generators multiplies size by 16."""
    if sig.n + 8 > MAX_GENERATORS:
        raise ValueError("shifted signature out of supported range")
    base = classify(sig)
    shifted = classify(CliffordSignature(sig.p + 8, sig.q))
    return (shifted.ring == base.ring
            and shifted.summands == base.summands
            and shifted.size == 16 * base.size)


# --------------------------------------------------------------------------
# spinor taxonomy

@dataclass(frozen=True)
class SpinorProfile:
    n: int
    dirac_complex_dim: int
    majorana: bool
    weyl: bool
    majorana_weyl: bool
    minimal_real_components: int


def _smallest_real_rep(cls: MatrixAlgebraClass) -> int:
    """Real dimension of the smallest real representation of the algebra
    (one summand of it, for direct sums)."""
    return cls.size * _RING_DIM[cls.ring]


def spinor_taxonomy(n: int) -> SpinorProfile:
    """Which spinor kinds exist in an n-dimensional spacetime of signature
    (n-1, 1), and the smallest real component count among them."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    dirac_c = 1 << (n // 2)

    # Majorana condition: the Lorentzian Clifford algebra, in one of the two
    # metric conventions, acts irreducibly on a real vector space of half
    # the Dirac real dimension
    majorana = False
    for p, q in ((n - 1, 1), (1, n - 1)):
        if p >= 0 and q >= 0 and _smallest_real_rep(_classify_raw(p, q)) == dirac_c:
            majorana = True

    weyl = n % 2 == 0
    majorana_weyl = n % 8 == 2
    return SpinorProfile(
        n=n,
        dirac_complex_dim=dirac_c,
        majorana=majorana,
        weyl=weyl,
        majorana_weyl=majorana_weyl,
        minimal_real_components=min(admissible_real_dims(
            dirac_c, majorana, weyl, majorana_weyl)),
    )


def admissible_real_dims(dirac_c: int, majorana: bool, weyl: bool,
                         majorana_weyl: bool) -> Set[int]:
    """Real component counts of the spinor kinds that exist: Dirac always,
    then Majorana and Weyl at half, Majorana-Weyl at a quarter."""
    dims = {2 * dirac_c}
    if majorana:
        dims.add(dirac_c)
    if weyl:
        dims.add(dirac_c)
    if majorana_weyl:
        dims.add(dirac_c // 2)
    return dims


def super_ym_dims(lo: int, hi: int) -> Set[int]:
    """Dimensions where some admissible spinor kind has exactly 2(n-2) real
    components, the balance needed to pair a vector with a spinor."""
    if not 3 <= lo <= hi:
        raise ValueError("need 3 <= lo <= hi")
    out = set()
    for n in range(lo, hi + 1):
        prof = spinor_taxonomy(n)
        dims = admissible_real_dims(prof.dirac_complex_dim, prof.majorana,
                                    prof.weyl, prof.majorana_weyl)
        if 2 * (n - 2) in dims:
            out.add(n)
    return out
