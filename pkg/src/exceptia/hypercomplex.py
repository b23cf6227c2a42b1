"""The doubling tower of hypercomplex numbers, and friends.

Starting from a base field (exact rationals, or Q(sqrt5) for the golden
quaternions), each doubling step builds pairs with

    (a, b)(c, d) = (ac - d*b, da + bc*)        (a, b)* = (a*, -b)

which yields the complex numbers, quaternions, octonions and sedenions at
levels 1 through 4. Alongside the recursive product this module carries the
classical Fano-plane octonion table, the x-product deformation, the
permutation action on quaternion units, and the two famous unit rings: the 24
Hurwitz quaternions and the 120 icosians with their rank-8 integer coordinate
system.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from .exactnum import GOLDEN_ONE, GOLDEN_ZERO, PHI, GoldenRational, rat
from . import intlinalg

Scalar = Union[Fraction, GoldenRational]

RATIONAL = "rational"
GOLDEN = "golden"


@dataclass(frozen=True)
class HyperNumber:
    """An element of the level-k doubling algebra: 2^k coordinates.

    Coordinates are Fractions (field="rational") or GoldenRationals
    (field="golden"). Values are immutable and hashable.
    """

    field: str
    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        n = len(self.coords)
        if n == 0 or n & (n - 1):
            raise ValueError("coordinate count must be a power of two")
        if self.field not in (RATIONAL, GOLDEN):
            raise ValueError(f"unknown field {self.field!r}")

    @property
    def level(self) -> int:
        return len(self.coords).bit_length() - 1

    def __add__(self, other: "HyperNumber") -> "HyperNumber":
        _check_compat(self, other)
        return HyperNumber(self.field,
                           tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HyperNumber") -> "HyperNumber":
        _check_compat(self, other)
        return HyperNumber(self.field,
                           tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HyperNumber":
        return HyperNumber(self.field, tuple(-a for a in self.coords))

    def scale(self, s: Scalar) -> "HyperNumber":
        s = _as_scalar(s, self.field)
        return HyperNumber(self.field, tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            parts.append(f"{c}*e{i}" if i else f"{c}")
        body = " + ".join(parts) if parts else "0"
        return f"hyper[{self.field}]({body})"


def _check_compat(x: HyperNumber, y: HyperNumber) -> None:
    if x.field != y.field:
        raise ValueError(f"field mismatch: {x.field} vs {y.field}")
    if len(x.coords) != len(y.coords):
        raise ValueError(f"level mismatch: {x.level} vs {y.level}")


def _as_scalar(v, field: str) -> Scalar:
    if field == GOLDEN:
        if isinstance(v, GoldenRational):
            return v
        return GoldenRational(rat(v))
    if isinstance(v, GoldenRational):
        raise ValueError("golden scalar in a rational-field number")
    return rat(v)


def _zero_scalar(field: str) -> Scalar:
    return GOLDEN_ZERO if field == GOLDEN else Fraction(0)


def _one_scalar(field: str) -> Scalar:
    return GOLDEN_ONE if field == GOLDEN else Fraction(1)


def hyper(coords, field: str = RATIONAL) -> HyperNumber:
    """Build a HyperNumber from any iterable of exact scalars."""
    return HyperNumber(field, tuple(_as_scalar(c, field) for c in coords))


def zero(level: int, field: str = RATIONAL) -> HyperNumber:
    return HyperNumber(field, (_zero_scalar(field),) * (1 << level))


def one(level: int, field: str = RATIONAL) -> HyperNumber:
    z = _zero_scalar(field)
    return HyperNumber(field, (_one_scalar(field),) + (z,) * ((1 << level) - 1))


def basis_element(level: int, index: int, field: str = RATIONAL) -> HyperNumber:
    """e_index at the given level; e_0 is the multiplicative identity."""
    n = 1 << level
    if not 0 <= index < n:
        raise ValueError(f"index {index} out of range for level {level}")
    z = _zero_scalar(field)
    coords = [z] * n
    coords[index] = _one_scalar(field)
    return HyperNumber(field, tuple(coords))


# --------------------------------------------------------------------------
# the doubling product, conjugation, norm, inverse


def _mul(x: Tuple[Scalar, ...], y: Tuple[Scalar, ...]) -> Tuple[Scalar, ...]:
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = _mul(a, c)
    db = _mul(_conj(d), b)
    da = _mul(d, a)
    bc = _mul(b, _conj(c))
    return tuple(p - q for p, q in zip(ac, db)) + tuple(p + q for p, q in zip(da, bc))


def _conj(x: Tuple[Scalar, ...]) -> Tuple[Scalar, ...]:
    return (x[0],) + tuple(-c for c in x[1:])


def cd_mul(x: HyperNumber, y: HyperNumber) -> HyperNumber:
    """The recursive doubling product (exact, any level)."""
    _check_compat(x, y)
    return HyperNumber(x.field, _mul(x.coords, y.coords))


def cd_conj(x: HyperNumber) -> HyperNumber:
    """Conjugation: negate every non-real coordinate."""
    return HyperNumber(x.field, _conj(x.coords))


def cd_norm(x: HyperNumber) -> Scalar:
    """The scalar x x* = x* x, i.e. the sum of squared coordinates."""
    acc = _zero_scalar(x.field)
    for c in x.coords:
        acc = acc + c * c
    return acc


def cd_inv(x: HyperNumber) -> HyperNumber:
    """x* / (x x*). Two-sided inverse through the octonions."""
    n = cd_norm(x)
    if not n:
        raise ZeroDivisionError("inverse of a zero-norm element")
    if x.field == GOLDEN:
        inv = GOLDEN_ONE / n
    else:
        inv = Fraction(1) / n
    return cd_conj(x).scale(inv)


# --------------------------------------------------------------------------
# Fano-plane octonions

_FANO_LINES = tuple((i, i % 7 + 1, (i + 2) % 7 + 1) for i in range(1, 8))
# lines (1,2,4), (2,3,5), ..., (7,1,3): each cyclic triple multiplies forward
# with sign +1, backward with -1

_FANO_TABLE: Dict[Tuple[int, int], Tuple[int, int]] = {}
for _a, _b, _c in _FANO_LINES:
    for (i, j, k) in ((_a, _b, _c), (_b, _c, _a), (_c, _a, _b)):
        _FANO_TABLE[(i, j)] = (k, 1)
        _FANO_TABLE[(j, i)] = (k, -1)


def fano_mul(i: int, j: int) -> Tuple[int, int]:
    """Product of imaginary octonion units: e_i e_j = sign * e_k.

    Returns (k, sign); the diagonal case i = j returns (0, -1) meaning the
    real unit with coefficient -1.
    """
    if not (1 <= i <= 7 and 1 <= j <= 7):
        raise ValueError("unit indices must lie in 1..7")
    if i == j:
        return (0, -1)
    return _FANO_TABLE[(i, j)]


def fano_lines() -> Tuple[Tuple[int, int, int], ...]:
    return _FANO_LINES


def fano_octonion_mul(x: HyperNumber, y: HyperNumber) -> HyperNumber:
    """Octonion product using the Fano table rather than the recursion."""
    _check_compat(x, y)
    if x.level != 3:
        raise ValueError("Fano multiplication is defined on octonions")
    z = [_zero_scalar(x.field)] * 8
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j, b in enumerate(y.coords):
            if not b:
                continue
            if i == 0:
                z[j] = z[j] + a * b
            elif j == 0:
                z[i] = z[i] + a * b
            else:
                k, s = fano_mul(i, j)
                term = a * b if s > 0 else -(a * b)
                z[k] = z[k] + term
    return HyperNumber(x.field, tuple(z))


def xproduct(a: HyperNumber, b: HyperNumber, c: HyperNumber) -> HyperNumber:
    """The deformed product b x c = (b a)(a* c), in Fano-table octonions.

    For unit-norm a this is again a composition algebra product.
    """
    _check_compat(a, b)
    _check_compat(a, c)
    if a.level != 3:
        raise ValueError("x-product is defined on octonions")
    return fano_octonion_mul(fano_octonion_mul(b, a),
                             fano_octonion_mul(cd_conj(a), c))


# --------------------------------------------------------------------------
# permutations of the quaternion units

_PARITY = {
    (1, 2, 3): "even", (2, 3, 1): "even", (3, 1, 2): "even",
    (2, 1, 3): "odd", (1, 3, 2): "odd", (3, 2, 1): "odd",
}


@dataclass(frozen=True)
class PermutationIJK:
    """A permutation of the three imaginary quaternion units.

    `images` lists the images of (1, 2, 3); parity is derived.
    """

    images: Tuple[int, int, int]

    def __post_init__(self):
        if tuple(sorted(self.images)) != (1, 2, 3):
            raise ValueError("images must be a permutation of (1, 2, 3)")

    @property
    def parity(self) -> str:
        return _PARITY[self.images]


def ijk_permute(p: PermutationIJK, q: HyperNumber) -> HyperNumber:
    """Carry coefficients along with their units: if p sends i to j, the i
    coefficient of q becomes the j coefficient of the result."""
    if q.level != 2:
        raise ValueError("unit permutation acts on quaternions")
    out = [q.coords[0]] * 4
    for t in (1, 2, 3):
        out[p.images[t - 1]] = q.coords[t]
    return HyperNumber(q.field, tuple(out))


ALL_IJK_PERMUTATIONS = tuple(PermutationIJK(im) for im in _PARITY)


# --------------------------------------------------------------------------
# the Hurwitz ring

def hurwitz_contains(q: HyperNumber) -> bool:
    """True iff all four coordinates are integers, or all four are odd
    halves; these are exactly the quaternions of the 24-cell ring."""
    if q.field != RATIONAL or q.level != 2:
        raise ValueError("Hurwitz membership is for rational quaternions")
    dens = {c.denominator for c in q.coords}
    return dens == {1} or dens == {2}


def hurwitz_units() -> Tuple[HyperNumber, ...]:
    """The 24 units: ±1, ±i, ±j, ±k and (±1 ± i ± j ± k)/2."""
    units = []
    for i in range(4):
        for s in (1, -1):
            units.append(basis_element(2, i).scale(s))
    half = Fraction(1, 2)
    for mask in range(16):
        coords = tuple(half if mask >> b & 1 else -half for b in range(4))
        units.append(hyper(coords))
    return tuple(units)


# --------------------------------------------------------------------------
# the icosian ring

@dataclass(frozen=True)
class IcosianElement:
    """A golden quaternion together with its integer coordinates in the
    fixed rank-8 basis of the ring (the membership certificate)."""

    q: HyperNumber
    certificate: Tuple[int, ...]


_ICOSIAN_LOCK = threading.Lock()
_ICOSIAN_STATE: Optional[Tuple[frozenset, Tuple[Tuple[int, ...], ...]]] = None

_CLOSURE_BOUND = 10_000


def _golden_quat(coords) -> HyperNumber:
    return HyperNumber(GOLDEN, tuple(coords))


def _build_icosian_state():
    half = Fraction(1, 2)
    gi = basis_element(2, 1, GOLDEN)
    gj = basis_element(2, 2, GOLDEN)
    phi_inv = GOLDEN_ONE / PHI
    seed3 = _golden_quat((
        phi_inv * GoldenRational(half),
        GoldenRational(half),
        PHI * GoldenRational(half),
        GOLDEN_ZERO,
    ))
    elems = {gi, gj, seed3}
    frontier = list(elems)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(elems):
                for r in (cd_mul(p, q), cd_mul(q, p)):
                    if r not in elems:
                        elems.add(r)
                        fresh.append(r)
        if len(elems) > _CLOSURE_BOUND:
            raise RuntimeError("unit closure exceeded the defensive bound; "
                               "seed set is wrong")
        frontier = fresh

    # fixed integer coordinate system: HNF basis of the quadrupled images
    scaled = [[_quad(c) for c in icosian_to_r8_raw(q)] for q in sorted_units(elems)]
    basis = intlinalg.hnf(scaled)
    if len(basis) != 8:
        raise RuntimeError("icosian images span the wrong rank")
    units = frozenset(
        IcosianElement(q, _certificate(q, basis)) for q in elems
    )
    return units, tuple(tuple(row) for row in basis)


def sorted_units(elems) -> list:
    """Deterministic ordering of golden quaternions (by coordinate tuples)."""
    def key(q):
        return tuple((c.u, c.v) for c in q.coords)
    return sorted(elems, key=key)


def _quad(c: Fraction) -> int:
    q = 4 * c
    if q.denominator != 1:
        raise ValueError("quaternion lies outside the icosian ring")
    return q.numerator


def _certificate(q: HyperNumber, basis) -> Tuple[int, ...]:
    target = [_quad(c) for c in icosian_to_r8_raw(q)]
    x = intlinalg.solve_left(basis, target)
    if x is None:
        raise ValueError("quaternion lies outside the icosian ring")
    return tuple(x)


def _icosian_state():
    global _ICOSIAN_STATE
    state = _ICOSIAN_STATE
    if state is None:
        with _ICOSIAN_LOCK:
            state = _ICOSIAN_STATE
            if state is None:
                state = _build_icosian_state()
                _ICOSIAN_STATE = state
    return state


def icosian_units() -> frozenset:
    """The 120 unit icosians (with membership certificates), cached."""
    return _icosian_state()[0]


def icosian_basis() -> Tuple[Tuple[int, ...], ...]:
    """The fixed rank-8 integer basis (quadrupled coordinates) of the ring."""
    return _icosian_state()[1]


def to_icosian(q: HyperNumber) -> IcosianElement:
    """Attach a membership certificate, or raise ValueError for non-members."""
    if q.field != GOLDEN or q.level != 2:
        raise ValueError("icosians are golden quaternions")
    return IcosianElement(q, _certificate(q, _icosian_state()[1]))


def icosian_to_r8_raw(q: HyperNumber) -> Tuple[Fraction, ...]:
    """Split each golden coordinate u + v*sqrt5 into (u, v), concatenated."""
    out = []
    for c in q.coords:
        out.append(c.u)
        out.append(c.v)
    return tuple(out)


def icosian_to_r8(x: IcosianElement) -> Tuple[Fraction, ...]:
    return icosian_to_r8_raw(x.q)
