"""Exact integral-lattice machinery.

Named constructions (A_n, D_n, E6, E7, E8, D16+, the Leech lattice two ways),
integrality and unimodularity tests, dual lattices, LLL reduction, exact
short-vector enumeration and theta series, plus the even unimodular
Lorentzian lattices II_{8k+1,1} with their Weyl vectors.

Everything is exact: bases are rational, Grams are rational, enumeration
counts are decided by integer arithmetic. Floating point appears only inside
the enumerator to propose search windows, which are then filtered exactly, so
a float can cost time but never correctness.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import intlinalg
from .intlinalg import det_fraction, invert_fraction, left_kernel, solve_left

EUCLIDEAN = "euclidean"
LORENTZIAN = "lorentzian"

_SIGNATURES = (EUCLIDEAN, LORENTZIAN)

DEFAULT_LLL_DELTA = Fraction(99, 100)


class LatticeError(ValueError):
    """Domain error raised by lattice operations."""


class LatticeConstructionError(LatticeError):
    """A construction could not deliver its promised lattice.

    Carries whatever partial data makes the failure auditable (typically the
    raw Gram matrix before any rescaling attempt).
    """

    def __init__(self, message: str, **payload):
        super().__init__(message)
        for key, value in payload.items():
            setattr(self, key, value)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


def _fraction_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _row_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _ldl_pivots(g: Sequence[Sequence[Fraction]]) -> Optional[List[Fraction]]:
    """LDL^T pivots of a symmetric matrix, or None if a pivot hits zero."""
    n = len(g)
    a = [[Fraction(v) for v in row] for row in g]
    piv = []
    for k in range(n):
        d = a[k][k]
        if d == 0:
            return None
        piv.append(d)
        for i in range(k + 1, n):
            f = a[i][k] / d
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return piv


def _positive_definite(g: Sequence[Sequence[Fraction]]) -> bool:
    piv = _ldl_pivots(g)
    return piv is not None and all(p > 0 for p in piv)


@dataclass(frozen=True)
class Lattice:
    """A lattice given by basis rows in an ambient bilinear space.

    ``signature`` names the ambient form: the identity for ``euclidean``,
    diag(-1, +1, ..., +1) with the first coordinate timelike for
    ``lorentzian``. The Gram matrix is derived from the basis and the form at
    construction time. ``summands`` remembers direct-sum structure when a
    lattice was assembled blockwise, which lets the theta series use the
    convolution identity instead of enumerating the full-rank sum.
    """

    ambient_dim: int
    rank: int
    basis: Tuple[Tuple[Fraction, ...], ...]
    signature: str = EUCLIDEAN
    summands: Tuple["Lattice", ...] = ()
    gram: Tuple[Tuple[Fraction, ...], ...] = field(init=False)

    def __post_init__(self):
        if self.signature not in _SIGNATURES:
            raise LatticeError(f"unknown signature {self.signature!r}")
        rows = tuple(tuple(_frac(v) for v in row) for row in self.basis)
        if len(rows) != self.rank:
            raise LatticeError("rank does not match the number of basis rows")
        if self.rank < 1 or self.rank > self.ambient_dim:
            raise LatticeError("rank must satisfy 1 <= rank <= ambient_dim")
        if any(len(row) != self.ambient_dim for row in rows):
            raise LatticeError("basis row length differs from ambient_dim")
        if _row_rank(rows) != self.rank:
            raise LatticeError("basis rows are linearly dependent")
        object.__setattr__(self, "basis", rows)
        gram = tuple(
            tuple(self._form_dot(a, b) for b in rows) for a in rows
        )
        object.__setattr__(self, "gram", gram)
        if self.signature == EUCLIDEAN and not _positive_definite(gram):
            raise LatticeError("euclidean lattice with non-positive-definite "
                               "Gram; basis rows cannot be independent")

    def _form_dot(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        s = sum(x * y for x, y in zip(a, b))
        if self.signature == LORENTZIAN:
            s -= 2 * a[0] * b[0]
        return s

    def form_dot(self, a: Sequence, b: Sequence) -> Fraction:
        """Ambient bilinear form applied to two coordinate vectors."""
        av = [_frac(x) for x in a]
        bv = [_frac(x) for x in b]
        if len(av) != self.ambient_dim or len(bv) != self.ambient_dim:
            raise LatticeError("vector length differs from ambient_dim")
        return self._form_dot(av, bv)


def is_positive_definite(lat: Lattice) -> bool:
    """Whether the induced Gram is positive definite.

    Euclidean-signature lattices always are (enforced at construction); a
    lattice coordinatized in a Lorentzian ambient may still induce a positive
    definite form on its span, and every Euclidean-only operation here gates
    on this property rather than on the signature label.
    """
    if lat.signature == EUCLIDEAN:
        return True
    return _positive_definite(lat.gram)


def is_integral(lat: Lattice) -> bool:
    return all(v.denominator == 1 for row in lat.gram for v in row)


def is_even(lat: Lattice) -> bool:
    if not is_integral(lat):
        return False
    return all(lat.gram[i][i].numerator % 2 == 0 for i in range(lat.rank))


def gram_determinant(lat: Lattice) -> Fraction:
    return det_fraction(lat.gram)


def is_unimodular(lat: Lattice) -> bool:
    return abs(gram_determinant(lat)) == 1


def lattice_contains(lat: Lattice, vector: Sequence) -> bool:
    """Exact membership of an ambient coordinate vector."""
    v = [_frac(x) for x in vector]
    if len(v) != lat.ambient_dim:
        raise LatticeError("vector length differs from ambient_dim")
    # solve x B = v against the Gram: x = (v S B^T) G^{-1}, then confirm
    rhs = [lat.form_dot(v, row) for row in lat.basis]
    try:
        ginv = invert_fraction(lat.gram)
    except ZeroDivisionError:
        raise LatticeError("degenerate Gram matrix") from None
    x = [sum(rhs[j] * ginv[j][i] for j in range(lat.rank))
         for i in range(lat.rank)]
    recon = [sum(x[i] * lat.basis[i][k] for i in range(lat.rank))
             for k in range(lat.ambient_dim)]
    if recon != v:
        return False
    return all(c.denominator == 1 for c in x)


def sublattice_of(inner: Lattice, outer: Lattice) -> bool:
    return all(lattice_contains(outer, row) for row in inner.basis)


def same_lattice(a: Lattice, b: Lattice) -> bool:
    """Point-set equality, decided by mutual basis membership."""
    return sublattice_of(a, b) and sublattice_of(b, a)


def dual_lattice(lat: Lattice) -> Lattice:
    """Dual basis in the same span, via the Gram inverse."""
    try:
        ginv = invert_fraction(lat.gram)
    except ZeroDivisionError:
        raise LatticeError("singular Gram matrix has no dual basis") from None
    rows = intlinalg.matmul(ginv, [list(r) for r in lat.basis])
    return Lattice(lat.ambient_dim, lat.rank,
                   tuple(tuple(v for v in row) for row in rows),
                   signature=lat.signature)


# ---------------------------------------------------------------------------
# named constructions

def _half_rows(doubled: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v, 2) for v in row) for row in doubled)


def _hnf_basis_halved(doubled_gens: Sequence[Sequence[int]], rank: int,
                      what: str) -> Tuple[Tuple[Fraction, ...], ...]:
    rows = intlinalg.hnf(doubled_gens)
    if len(rows) != rank:
        raise LatticeConstructionError(
            f"{what}: generator span has rank {len(rows)}, expected {rank}")
    return _half_rows(rows)


def build_An(n: int) -> Lattice:
    """Integer vectors in R^{n+1} with coordinate sum zero."""
    if n < 1:
        raise LatticeError("A_n needs n >= 1")
    rows = []
    for i in range(n):
        r = [0] * (n + 1)
        r[i], r[i + 1] = 1, -1
        rows.append(tuple(map(Fraction, r)))
    return Lattice(n + 1, n, tuple(rows))


def build_Dn(n: int) -> Lattice:
    """Integer vectors in R^n with even coordinate sum."""
    if n < 2:
        raise LatticeError("D_n needs n >= 2")
    rows = [[1, 1] + [0] * (n - 2)]
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    return Lattice(n, n, tuple(tuple(map(Fraction, r)) for r in rows))


def _e8_generators_doubled() -> List[List[int]]:
    gens = []
    for i in range(7):
        r = [0] * 8
        r[i], r[i + 1] = 2, -2
        gens.append(r)
    r = [0] * 8
    r[6], r[7] = 2, 2
    gens.append(r)
    gens.append([1] * 8)          # the all-halves glue vector, doubled
    return gens


def build_E8() -> Lattice:
    """Vectors with all-integer or all-half-integer coordinates and even sum."""
    return Lattice(8, 8, _hnf_basis_halved(_e8_generators_doubled(), 8, "E8"))


def build_D16plus() -> Lattice:
    """The even-sum integer/half-integer construction in 16 dimensions."""
    gens = [[0] * 16 for _ in range(16)]
    gens[0][0] = gens[0][1] = 2
    for i in range(15):
        gens[i + 1][i], gens[i + 1][i + 1] = 2, -2
    gens.append([1] * 16)
    return Lattice(16, 16, _hnf_basis_halved(gens, 16, "D16+"))


def _norm2_vectors_sorted(e8: Lattice) -> List[Tuple[Fraction, ...]]:
    vecs = [v for _, v in short_vector_list(e8, 2)]
    vecs.sort()
    return vecs


def _check_e8_input(e8: Lattice, caller: str) -> None:
    if e8.rank != 8 or not (is_even(e8) and is_unimodular(e8)):
        raise LatticeError(f"{caller} expects the rank-8 even unimodular "
                           "lattice as input")


def _complement_in(e8: Lattice, conditions: Sequence[Sequence[Fraction]],
                   rank: int, what: str) -> Lattice:
    # columns: exact form against each condition vector, cleared to integers
    cols = []
    for v in conditions:
        col = [e8.form_dot(row, v) for row in e8.basis]
        lcm = 1
        for c in col:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        cols.append([int(c * lcm) for c in col])
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(8)]
    kern = left_kernel(mat)
    if len(kern) != rank:
        raise LatticeConstructionError(
            f"{what}: kernel rank {len(kern)}, expected {rank}")
    rows = intlinalg.matmul(kern, [list(r) for r in e8.basis])
    return Lattice(8, rank, tuple(tuple(v for v in row) for row in rows))


def build_E7(e8: Lattice) -> Lattice:
    """Orthogonal complement in E8 of its lexicographically least root."""
    _check_e8_input(e8, "build_E7")
    v = _norm2_vectors_sorted(e8)[0]
    return _complement_in(e8, [v], 7, "E7")


def build_E6(e8: Lattice) -> Lattice:
    """Orthogonal complement in E8 of an explicit A2 root pair."""
    _check_e8_input(e8, "build_E6")
    roots = _norm2_vectors_sorted(e8)
    v1 = roots[0]
    v2 = next((r for r in roots if e8.form_dot(v1, r) == -1), None)
    if v2 is None:
        raise LatticeConstructionError(
            "E6: no root meets the chosen one at inner product -1; "
            "the input cannot be E8")
    return _complement_in(e8, [v1, v2], 6, "E6")


def direct_sum(*lattices: Lattice) -> Lattice:
    """Orthogonal direct sum, remembering the components."""
    if len(lattices) < 2:
        raise LatticeError("direct_sum needs at least two lattices")
    if any(l.signature != EUCLIDEAN for l in lattices):
        raise LatticeError("direct_sum is defined for euclidean lattices")
    ambient = sum(l.ambient_dim for l in lattices)
    rows: List[Tuple[Fraction, ...]] = []
    offset = 0
    for lat in lattices:
        pre = (Fraction(0),) * offset
        post = (Fraction(0),) * (ambient - offset - lat.ambient_dim)
        for row in lat.basis:
            rows.append(pre + row + post)
        offset += lat.ambient_dim
    parts: List[Lattice] = []
    for lat in lattices:
        parts.extend(lat.summands if lat.summands else (lat,))
    return Lattice(ambient, sum(l.rank for l in lattices), tuple(rows),
                   summands=tuple(parts))


# ---------------------------------------------------------------------------
# LLL reduction (exact, Gram-based, with the unimodular transform)

def _gso_exact(g: Sequence[Sequence[Fraction]]):
    """Gram-Schmidt data (mu, B*) computed exactly from a Gram matrix."""
    n = len(g)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bs: List[Fraction] = [Fraction(0)] * n
    for i in range(n):
        bi = Fraction(g[i][i])
        for j in range(i):
            num = Fraction(g[i][j])
            num -= sum(mu[i][t] * mu[j][t] * bs[t] for t in range(j))
            mu[i][j] = num / bs[j]
            bi -= mu[i][j] * mu[i][j] * bs[j]
        if bi <= 0:
            raise LatticeError("Gram matrix is not positive definite")
        bs[i] = bi
    return mu, bs


def _lll_gram(g0: Sequence[Sequence[Fraction]], delta: Fraction):
    """LLL on a positive-definite Gram matrix.

    Returns (g, u, mu, bs) where u is unimodular, g = u g0 u^T is the reduced
    Gram, and (mu, bs) is its exact Gram-Schmidt data. Works entirely on the
    Gram; callers holding a basis apply u themselves.
    """
    n = len(g0)
    g = [[Fraction(v) for v in row] for row in g0]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 1:
        if g[0][0] <= 0:
            raise LatticeError("Gram matrix is not positive definite")
        return g, u, [[Fraction(0)]], [Fraction(g[0][0])]
    mu, bs = _gso_exact(g)
    half = Fraction(1, 2)

    def addmul(k: int, l: int, q: int) -> None:
        # b_k -= q b_l, propagated to the Gram by a row then a column update
        u[k] = [a - q * b for a, b in zip(u[k], u[l])]
        gk, gl = g[k], g[l]
        for j in range(n):
            gk[j] -= q * gl[j]
        for i in range(n):
            g[i][k] -= q * g[i][l]

    def red(k: int, l: int) -> None:
        mkl = mu[k][l]
        if mkl > half or mkl < -half:
            q = int((mkl + half).__floor__()) if mkl > 0 else -int((-mkl + half).__floor__())
            # nearest integer, ties rounded down in magnitude is fine here
            if q:
                addmul(k, l, q)
                mu[k][l] -= q
                for t in range(l):
                    mu[k][t] -= q * mu[l][t]

    k = 1
    while k < n:
        red(k, k - 1)
        if bs[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bs[k - 1]:
            # swap rows k-1 and k everywhere, then repair the GSO data
            u[k - 1], u[k] = u[k], u[k - 1]
            g[k - 1], g[k] = g[k], g[k - 1]
            for row in g:
                row[k - 1], row[k] = row[k], row[k - 1]
            m = mu[k][k - 1]
            big = bs[k] + m * m * bs[k - 1]
            mu[k][k - 1] = m * bs[k - 1] / big
            bs[k] = bs[k - 1] * bs[k] / big
            bs[k - 1] = big
            for j in range(k - 1):
                mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return g, u, mu, bs


def lll_reduce(lat: Lattice, delta: Fraction = DEFAULT_LLL_DELTA) -> Lattice:
    """Exact LLL reduction of the basis; the lattice itself is unchanged.

    The transform is verified unimodular before the new lattice is returned.
    """
    delta = _frac(delta)
    if not (Fraction(1, 4) < delta < 1):
        raise LatticeError("delta must lie strictly between 1/4 and 1")
    if not is_positive_definite(lat):
        raise LatticeError("lll_reduce needs a positive-definite Gram")
    _, u, _, _ = _lll_gram(lat.gram, delta)
    if abs(det_fraction(u)) != 1:
        raise LatticeConstructionError("LLL transform lost unimodularity")
    rows = intlinalg.matmul(u, [list(r) for r in lat.basis])
    return Lattice(lat.ambient_dim, lat.rank,
                   tuple(tuple(v for v in row) for row in rows),
                   signature=lat.signature)


# ---------------------------------------------------------------------------
# short-vector enumeration
#
# Fincke-Pohst on an LLL-reduced integer Gram. Float Cholesky data proposes
# per-level windows (widened by an absolute slack), exact integer partial
# norms decide what is counted. Only one representative of each +-v pair is
# visited; counts are incremented by two.

_WINDOW_EPS = 1e-7
_BUDGET_SLACK = 0.01


def _thread_count() -> int:
    raw = os.environ.get("EXCEPTIA_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise LatticeError(f"EXCEPTIA_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise LatticeError("EXCEPTIA_THREADS must be at least 1")
    return n


def _fp_run(g: Sequence[Sequence[int]], muf: Sequence[Sequence[float]],
            bsf: Sequence[float], bound: int,
            top_range: Optional[Tuple[int, int]] = None,
            collect: Optional[list] = None) -> Dict[int, int]:
    """Enumerate x with 0 < (xB)(xB)^T <= bound over the reduced basis.

    Returns {norm: count}. With ``collect`` a list, also appends
    (norm, coefficient tuple) for one representative of each +-v pair.
    ``top_range`` restricts the outermost coordinate (used for work
    splitting); the outermost window is already clamped to x >= 0.
    """
    n = len(g)
    counts: Dict[int, int] = {}
    if bound <= 0:
        return counts
    bound_f = float(bound) + _BUDGET_SLACK

    x = [0] * n
    P = [0] * n                   # P[m] = sum_{j > level} g[m][j] x[j]
    lo = [0] * n
    hi = [0] * n
    tf = [0.0] * n                # float budget at each level
    ne = [0] * n                  # exact norm of the fixed tail at each level
    zpre = [False] * n            # all coordinates above this level are zero?

    def window(i: int) -> bool:
        c = 0.0
        for m_, xv in zip(muf[i], x[i + 1:]):
            if xv:
                c += m_ * xv
        t = tf[i]
        if t < 0.0:
            if t < -_BUDGET_SLACK:
                return False
            t = 0.0
        r = math.sqrt(t / bsf[i]) + 1e-9
        a = math.ceil(-c - r - _WINDOW_EPS)
        b = math.floor(-c + r + _WINDOW_EPS)
        if zpre[i] and a < 0:
            a = 0
        lo[i], hi[i] = a, b
        return a <= b

    top = n - 1
    tf[top] = bound_f
    ne[top] = 0
    zpre[top] = True
    if not window(top):
        return counts
    if top_range is not None:
        lo[top] = max(lo[top], top_range[0])
        hi[top] = min(hi[top], top_range[1])

    def leaf() -> None:
        a, b = lo[0], hi[0]
        if a > b:
            return
        g00 = g[0][0]
        p2 = 2 * P[0]
        nrm = ne[0] + g00 * a * a + p2 * a
        step = g00 * (2 * a + 1) + p2
        twog = 2 * g00
        if collect is None:
            for _ in range(a, b + 1):
                if 0 < nrm <= bound:
                    counts[nrm] = counts.get(nrm, 0) + 2
                nrm += step
                step += twog
        else:
            for v in range(a, b + 1):
                if 0 < nrm <= bound:
                    counts[nrm] = counts.get(nrm, 0) + 2
                    x[0] = v
                    collect.append((nrm, tuple(x)))
                nrm += step
                step += twog
        return

    if n == 1:
        ne[0] = 0
        tf[0] = bound_f
        leaf()
        return counts

    i = top
    cur = [0] * n
    cur[top] = lo[top] - 1
    while True:
        cur[i] += 1
        if cur[i] > hi[i]:
            # exhausted this level; undo the parent's P contribution
            i += 1
            if i > top:
                break
            v = x[i]
            if v:
                col = i
                for m in range(col):
                    P[m] -= g[m][col] * v
            continue
        v = cur[i]
        x[i] = v
        d = v + _center_of(muf, x, i)
        child_tf = tf[i] - bsf[i] * d * d
        if child_tf < -_BUDGET_SLACK:
            continue
        child_ne = ne[i] + g[i][i] * v * v + 2 * v * P[i]
        if i == 1:
            # set up level 0 directly
            if v:
                P[0] += g[0][1] * v
            tf[0] = child_tf
            ne[0] = child_ne
            zpre[0] = zpre[1] and v == 0
            if window(0):
                leaf()
            if v:
                P[0] -= g[0][1] * v
            continue
        if v:
            col = i
            for m in range(col):
                P[m] += g[m][col] * v
        i -= 1
        tf[i] = child_tf
        ne[i] = child_ne
        zpre[i] = zpre[i + 1] and v == 0
        if not window(i):
            # nothing below; undo and stay at this level
            i += 1
            v = x[i]
            if v:
                col = i
                for m in range(col):
                    P[m] -= g[m][col] * v
            continue
        cur[i] = lo[i] - 1
    return counts


def _center_of(muf, x, i) -> float:
    c = 0.0
    for m_, xv in zip(muf[i], x[i + 1:]):
        if xv:
            c += m_ * xv
    return c


def _fp_chunk(args):
    g, muf, bsf, bound, rng = args
    return _fp_run(g, muf, bsf, bound, top_range=rng)


def _enumerate_int_gram(g: Sequence[Sequence[int]], bound: int,
                        collect: Optional[list] = None,
                        threads: Optional[int] = None) -> Dict[int, int]:
    """Counts {norm: count} for an LLL-reduced positive-definite int Gram."""
    mu, bs = _gso_exact(g)
    n = len(g)
    muf = [[float(mu[j][i]) for j in range(i + 1, n)] for i in range(n)]
    bsf = [float(b) for b in bs]
    workers = _thread_count() if threads is None else threads
    if collect is not None or workers == 1 or n == 1:
        return _fp_run(g, muf, bsf, bound, collect=collect)
    # split the outermost window [0 .. hi] into contiguous chunks
    top_hi = math.floor(math.sqrt((bound + _BUDGET_SLACK) / bsf[n - 1]) + 1e-9)
    if top_hi < 1:
        return _fp_run(g, muf, bsf, bound)
    cuts = [round(k * (top_hi + 1) / workers) for k in range(workers + 1)]
    ranges = [(cuts[k], cuts[k + 1] - 1) for k in range(workers)
              if cuts[k] <= cuts[k + 1] - 1]
    if len(ranges) <= 1:
        return _fp_run(g, muf, bsf, bound)
    from concurrent.futures import ProcessPoolExecutor
    merged: Dict[int, int] = {}
    with ProcessPoolExecutor(max_workers=len(ranges)) as ex:
        for part in ex.map(_fp_chunk,
                           [(g, muf, bsf, bound, r) for r in ranges]):
            for k, v in part.items():
                merged[k] = merged.get(k, 0) + v
    return merged


def _lll_int(g: Sequence[Sequence[int]]):
    """LLL on an integer Gram; the reduced Gram comes back with int entries."""
    gr, u, _, _ = _lll_gram(g, DEFAULT_LLL_DELTA)
    return [[int(v) for v in row] for row in gr], u


def _integer_gram(gram: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], int]:
    """Scale a rational Gram to integers; returns (matrix, scale)."""
    scale = 1
    for row in gram:
        for v in row:
            d = _frac(v).denominator
            scale = scale * d // math.gcd(scale, d)
    out = [[int(_frac(v) * scale) for v in row] for row in gram]
    return out, scale


def _enumerate_gram(gram: Sequence[Sequence[Fraction]], bound: Fraction,
                    collect: Optional[list] = None):
    """Exact norm counts for an arbitrary positive-definite rational Gram.

    Returns ({norm: count}, transform) where norms are Fractions and the
    transform maps reduced coefficients back to the caller's basis.
    """
    gi, scale = _integer_gram(gram)
    gr, u = _lll_int(gi)
    scaled_bound = math.floor(_frac(bound) * scale)
    raw = _enumerate_int_gram(gr, scaled_bound, collect=collect)
    counts = {Fraction(k, scale): v for k, v in raw.items()}
    return counts, u


def short_vectors(lat: Lattice, max_norm: int) -> Dict[int, int]:
    """Exact counts of nonzero lattice vectors with norm <= max_norm.

    The map omits norms with zero count; an even lattice only ever shows even
    keys. Deterministic, including under EXCEPTIA_THREADS parallelism.
    """
    if not isinstance(max_norm, int) or max_norm < 0:
        raise LatticeError("max_norm must be a nonnegative integer")
    if not is_positive_definite(lat):
        raise LatticeError("short_vectors needs a positive-definite Gram")
    if not is_even(lat):
        raise LatticeError("short_vectors is defined for even lattices")
    g = [[int(v) for v in row] for row in lat.gram]
    gr, _ = _lll_int(g)
    counts = _enumerate_int_gram(gr, max_norm)
    return {k: counts[k] for k in sorted(counts)}


def short_vector_list(lat: Lattice, max_norm: int) -> List[Tuple[int, Tuple[Fraction, ...]]]:
    """All nonzero vectors with norm <= max_norm as (norm, ambient coords).

    Both members of each +-v pair are returned; the list is sorted by norm
    and then lexicographically. Intended for small bounds (root systems).
    """
    if not isinstance(max_norm, int) or max_norm < 0:
        raise LatticeError("max_norm must be a nonnegative integer")
    if not is_positive_definite(lat):
        raise LatticeError("short_vector_list needs a positive-definite Gram")
    if not is_even(lat):
        raise LatticeError("short_vector_list is defined for even lattices")
    g = [[int(v) for v in row] for row in lat.gram]
    gr, u = _lll_int(g)
    found: list = []
    _enumerate_int_gram(gr, max_norm, collect=found)
    rows = intlinalg.matmul(u, [list(r) for r in lat.basis])
    out = []
    for nrm, coeffs in found:
        amb = tuple(sum(coeffs[i] * rows[i][k] for i in range(lat.rank))
                    for k in range(lat.ambient_dim))
        out.append((nrm, amb))
        out.append((nrm, tuple(-v for v in amb)))
    out.sort()
    return out


def _minimal_norm(gram: Sequence[Sequence[Fraction]]) -> Fraction:
    """Smallest nonzero norm of a positive-definite rational Gram."""
    gi, scale = _integer_gram(gram)
    gr, _ = _lll_int(gi)
    cap = min(gr[i][i] for i in range(len(gr)))   # a lattice vector's norm
    counts = _enumerate_int_gram(gr, cap)
    if not counts:
        raise LatticeError("enumeration up to a realized norm found nothing")
    return Fraction(min(counts), scale)


@dataclass(frozen=True)
class ThetaSeries:
    """Truncated theta series: counts[m] vectors of norm 2m, m = 0..order."""

    order: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.counts) != self.order + 1:
            raise LatticeError("theta series length must be order + 1")
        if self.counts[0] != 1:
            raise LatticeError("theta series must start with count 1")
        if any(c % 2 for c in self.counts[1:]):
            raise LatticeError("vector counts above norm 0 pair up as +-v "
                               "and must be even")


def theta_product(a: ThetaSeries, b: ThetaSeries) -> ThetaSeries:
    order = min(a.order, b.order)
    counts = tuple(
        sum(a.counts[i] * b.counts[m - i]
            for i in range(m + 1) if i <= a.order and m - i <= b.order)
        for m in range(order + 1)
    )
    return ThetaSeries(order, counts)


def theta_series(lat: Lattice, order: int) -> ThetaSeries:
    """Vector counts by half-norm up to the given order.

    Costs a full enumeration up to norm 2*order, except that a remembered
    direct-sum structure is folded through the convolution identity, which
    turns one large enumeration into small per-component ones.
    """
    if not isinstance(order, int) or order < 0:
        raise LatticeError("order must be a nonnegative integer")
    if len(lat.summands) > 1:
        acc = theta_series(lat.summands[0], order)
        for part in lat.summands[1:]:
            acc = theta_product(acc, theta_series(part, order))
        return acc
    counts = short_vectors(lat, 2 * order) if order else {}
    return ThetaSeries(order, (1,) + tuple(counts.get(2 * m, 0)
                                           for m in range(1, order + 1)))


# ---------------------------------------------------------------------------
# Lorentzian vectors and the even unimodular lattices II_{8k+1,1}

PARITY_INTEGER = "all-integer"
PARITY_HALF = "all-half-integer"


@dataclass(frozen=True)
class LorentzianVector:
    """A vector of II_{8k+1,1} candidates, stored with doubled coordinates.

    Doubling keeps half-integers exact; the constructor enforces the shared
    parity of the doubled entries and the even coordinate sum.
    """

    doubled_coords: Tuple[int, ...]
    parity: str = field(init=False)

    def __post_init__(self):
        dc = tuple(int(v) for v in self.doubled_coords)
        if not dc:
            raise LatticeError("empty coordinate vector")
        object.__setattr__(self, "doubled_coords", dc)
        r = dc[0] % 2
        if any(v % 2 != r for v in dc):
            raise LatticeError("coordinates must be all integers or all "
                               "half-integers")
        if sum(dc) % 4:
            raise LatticeError("coordinate sum must be an even integer")
        object.__setattr__(self, "parity",
                           PARITY_HALF if r else PARITY_INTEGER)

    @classmethod
    def from_coords(cls, coords: Sequence) -> "LorentzianVector":
        doubled = []
        for c in coords:
            d = 2 * _frac(c)
            if d.denominator != 1:
                raise LatticeError("coordinates must be halves of integers")
            doubled.append(int(d))
        return cls(tuple(doubled))

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self.doubled_coords)

    @property
    def dim(self) -> int:
        return len(self.doubled_coords)


def minkowski_dot(u: LorentzianVector, v: LorentzianVector) -> Fraction:
    """The signature (-,+,...,+) bilinear form, exact."""
    if u.dim != v.dim:
        raise LatticeError("dimension mismatch")
    a, b = u.doubled_coords, v.doubled_coords
    s = -a[0] * b[0] + sum(x * y for x, y in zip(a[1:], b[1:]))
    return Fraction(s, 4)


_II_DIMS = (10, 18, 26)


def ii_member(vector: Sequence) -> bool:
    """Membership in II_{8k+1,1}: integer or half-integer type, even sum."""
    v = [_frac(c) for c in vector]
    if len(v) not in _II_DIMS:
        raise LatticeError(f"unsupported length {len(v)}; "
                           f"expected one of {_II_DIMS}")
    dens = {c.denominator for c in v}
    if dens == {1}:
        pass
    elif dens == {2}:
        pass
    else:
        return False
    total = sum(v)
    return total.denominator == 1 and total.numerator % 2 == 0


_WEYL_HEAD = {10: 28, 18: 46, 26: 70}


def weyl_vector(dim: int) -> LorentzianVector:
    """The vectors (28,0,1..8), (46,0,1..16), (70,0,1..24)."""
    if dim not in _II_DIMS:
        raise LatticeError(f"unsupported dimension {dim}; "
                           f"expected one of {_II_DIMS}")
    coords = [_WEYL_HEAD[dim]] + list(range(dim - 1))
    return LorentzianVector(tuple(2 * c for c in coords))


def is_fundamental_root(r: LorentzianVector, dim: int) -> bool:
    """Whether r has norm 2 and meets the Weyl vector of dim at -1."""
    if dim not in _II_DIMS:
        raise LatticeError(f"unsupported dimension {dim}; "
                           f"expected one of {_II_DIMS}")
    if r.dim != dim or not ii_member(r.coords):
        raise LatticeError("vector is not a member of the lattice")
    w = weyl_vector(dim)
    return minkowski_dot(r, r) == 2 and minkowski_dot(r, w) == -1


def _ii26_basis_halved() -> Tuple[Tuple[Fraction, ...], ...]:
    rows = [[-1] + [1] * 25]              # the all-halves row, doubled
    r = [0] * 26
    r[1], r[2] = 2, 2
    rows.append(r)
    for i in range(1, 25):
        r = [0] * 26
        r[i], r[i + 1] = 2, -2
        rows.append(r)
    return _half_rows(rows)


def leech_from_ii26() -> Lattice:
    """The rank-24 quotient w-perp / Zw inside II_{25,1}.

    w is the lightlike Weyl vector (70,0,1,...,24). The orthogonal sublattice
    S = {x : x.w = 0} has rank 25 and contains w; because w is isotropic and
    orthogonal to all of S, the bilinear form descends to the quotient S/Zw.
    The returned lattice keeps the ambient Lorentzian coordinates (its rows
    are the non-w rows of a basis of S completed from w), and its Gram is
    positive definite, integral and even.
    """
    basis = _ii26_basis_halved()
    ii = Lattice(26, 26, basis, signature=LORENTZIAN)
    w = weyl_vector(26)
    wc = w.coords

    col = [ii.form_dot(row, wc) for row in basis]
    if any(c.denominator != 1 for c in col):
        raise LatticeConstructionError("w pairs non-integrally with the basis")
    kern = left_kernel([[int(c)] for c in col])
    if len(kern) != 25:
        raise LatticeConstructionError(
            f"w-perp has kernel rank {len(kern)}, expected 25")

    # w's coefficients, first over the full basis, then over the kernel rows
    yw = _coefficients_of(ii, wc)
    z = solve_left(kern, yw)
    if z is None:
        raise LatticeConstructionError("w does not lie in its own perp")

    # complete z to a unimodular matrix with z as first row: if U z^T = e1
    # then the transpose of U^{-1} has first row z
    h, u = intlinalg.hnf_transform([[v] for v in z])
    if h[0][0] != 1:
        raise LatticeConstructionError("w is not primitive in w-perp")
    uinv = invert_fraction(u)
    m = [[int(uinv[j][i]) for j in range(25)] for i in range(25)]
    srows = intlinalg.matmul(m, kern)      # basis of S, first row maps to w
    if srows[0] != list(yw):
        raise LatticeConstructionError("basis completion lost the w row")

    quot = intlinalg.matmul(srows[1:], [list(r) for r in basis])
    return Lattice(26, 24, tuple(tuple(v for v in row) for row in quot),
                   signature=LORENTZIAN)


def _coefficients_of(lat: Lattice, vector: Sequence[Fraction]) -> List[int]:
    rhs = [lat.form_dot(vector, row) for row in lat.basis]
    ginv = invert_fraction(lat.gram)
    x = [sum(rhs[j] * ginv[j][i] for j in range(lat.rank))
         for i in range(lat.rank)]
    if any(c.denominator != 1 for c in x):
        raise LatticeConstructionError("vector is not a lattice member")
    return [int(c) for c in x]


# ---------------------------------------------------------------------------
# icosian constructions

def _icosian_ring_data():
    from . import hypercomplex
    basis8 = hypercomplex.icosian_basis()       # quadrupled integer rows
    return hypercomplex, basis8


def _ring_mult_matrix(hc, basis8, factor, side: str) -> List[List[int]]:
    """Matrix of s -> s*factor (side "right") or factor*s ("left") in ring
    coordinates."""
    rows = []
    for brow in basis8:
        q = _quat_from_quadrupled(hc, brow)
        prod = hc.cd_mul(q, factor) if side == "right" else hc.cd_mul(factor, q)
        target = [_quad_int(c) for c in hc.icosian_to_r8_raw(prod)]
        coeffs = solve_left(basis8, target)
        if coeffs is None:
            raise LatticeConstructionError(
                "ring is not closed under multiplication by the congruence "
                "quaternion; the seed data is wrong")
        rows.append(coeffs)
    return rows


def _quat_from_quadrupled(hc, row: Sequence[int]):
    from .exactnum import GoldenRational
    coords = []
    for t in range(4):
        u = Fraction(row[2 * t], 4)
        v = Fraction(row[2 * t + 1], 4)
        coords.append(GoldenRational(u, v))
    return hc.HyperNumber(hc.GOLDEN, tuple(coords))


def _quad_int(c: Fraction) -> int:
    q = 4 * c
    if q.denominator != 1:
        raise LatticeConstructionError("product left the quarter-integer grid")
    return q.numerator


def _icosian_flat_rows(basis8) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v, 4) for v in row) for row in basis8)


def _rescale_to_min_norm(raw: Lattice, target: int, what: str) -> Lattice:
    """Scale a lattice so its minimal norm hits the target, then insist the
    result is even and unimodular; otherwise raise with the raw Gram."""
    m = _minimal_norm(raw.gram)
    factor = Fraction(target, m)
    scaled = [[factor * v for v in row] for row in raw.gram]
    det = det_fraction(scaled)
    ok = (
        det == 1
        and all(v.denominator == 1 for row in scaled for v in row)
        and all(scaled[i][i].numerator % 2 == 0 for i in range(raw.rank))
    )
    if not ok:
        raise LatticeConstructionError(
            f"{what}: rescaling the Gram by {factor} (minimal norm {m} -> "
            f"{target}) does not give an even unimodular matrix "
            f"(determinant after rescaling: {det}); raw Gram attached",
            raw_gram=raw.gram, min_norm=m, factor=factor)
    root = _fraction_sqrt(factor)
    if root is None:
        raise LatticeConstructionError(
            f"{what}: norm factor {factor} is not a rational square, so the "
            "rescaled lattice has no rational coordinates; raw Gram attached",
            raw_gram=raw.gram, min_norm=m, factor=factor)
    rows = tuple(tuple(root * v for v in row) for row in raw.basis)
    return Lattice(raw.ambient_dim, raw.rank, rows)


def build_E8_from_icosians() -> Lattice:
    """The flat coordinate image of the icosian ring, rescaled to match E8.

    Each golden coordinate u + v sqrt5 contributes the pair (u, v); the ring's
    rank-8 integer basis is mapped through that splitting and the result is
    rescaled by the single global factor that makes the minimal norm 2. The
    outcome is verified against the coordinate construction of E8 through
    theta order 4.
    """
    hc, basis8 = _icosian_ring_data()
    raw = Lattice(8, 8, _icosian_flat_rows(basis8))
    lat = _rescale_to_min_norm(raw, 2, "icosian E8")
    mine = theta_series(lat, 4)
    ref = theta_series(build_E8(), 4)
    if mine != ref:
        raise LatticeConstructionError(
            "icosian E8: theta series disagrees with the coordinate "
            "construction", theta=mine.counts, expected=ref.counts)
    return lat


def _icosian_triple_lattice(side: str) -> Lattice:
    """The lattice of icosian triples with x = y = z mod h and
    x + y + z = 0 mod h-bar, embedded by the flat coordinate splitting."""
    hc, basis8 = _icosian_ring_data()
    from .exactnum import GoldenRational
    half = Fraction(1, 2)
    h = hc.HyperNumber(hc.GOLDEN, (
        GoldenRational(0, -half),            # the rational part is -sqrt5/2
        GoldenRational(half),
        GoldenRational(half),
        GoldenRational(half),
    ))
    hbar = hc.cd_conj(h)
    H = _ring_mult_matrix(hc, basis8, h, side)
    Hbar = _ring_mult_matrix(hc, basis8, hbar, side)

    # unknowns: ring coordinates of (x, y, z, s, t, u); equations state
    # x - y = s h, y - z = t h, x + y + z = u h-bar (or the left-handed
    # versions), eight coordinates each
    nv, ne = 48, 24
    A = [[0] * ne for _ in range(nv)]
    for i in range(8):
        A[i][i] = 1                      # x in eq1
        A[8 + i][i] = -1                 # -y in eq1
        A[8 + i][8 + i] = 1              # y in eq2
        A[16 + i][8 + i] = -1            # -z in eq2
        A[i][16 + i] = 1                 # x in eq3
        A[8 + i][16 + i] = 1             # y in eq3
        A[16 + i][16 + i] = 1            # z in eq3
        for j in range(8):
            A[24 + i][j] = -H[i][j]      # -s h in eq1
            A[32 + i][8 + j] = -H[i][j]  # -t h in eq2
            A[40 + i][16 + j] = -Hbar[i][j]
    kern = left_kernel(A)
    if len(kern) != 24:
        raise LatticeConstructionError(
            f"icosian triple lattice: kernel rank {len(kern)}, expected 24")
    flat8 = _icosian_flat_rows(basis8)
    rows = []
    for krow in kern:
        amb: List[Fraction] = []
        for blk in range(3):
            coeffs = krow[8 * blk: 8 * blk + 8]
            for k in range(8):
                amb.append(sum(coeffs[t] * flat8[t][k] for t in range(8)))
        rows.append(tuple(amb))
    return Lattice(24, 24, tuple(rows))


def leech_from_icosians() -> Lattice:
    """Icosian triple construction of the Leech lattice.

    The congruence u = v mod h is read as u - v in I*h (multiples of h from
    the right); if the rescaling check fails, the left-handed reading h*I is
    tried before giving up, and the failure carries both raw Grams rather
    than guessing at a normalization.
    """
    errors = []
    raws = {}
    for side in ("right", "left"):
        raw = _icosian_triple_lattice(side)
        raws[side] = raw
        try:
            return _rescale_to_min_norm(raw, 4, f"icosian Leech ({side})")
        except LatticeConstructionError as exc:
            errors.append((side, exc))
    lines = ["icosian triple lattice admits no even unimodular rescaling "
             "under either congruence convention:"]
    for side, exc in errors:
        lines.append(f"  {side}: {exc}")
    lines.append("raw Gram (right-handed convention) follows, one row per line:")
    for row in raws["right"].gram:
        lines.append("  " + " ".join(str(v) for v in row))
    raise LatticeConstructionError(
        "\n".join(lines),
        raw_gram=raws["right"].gram,
        raw_gram_left=raws["left"].gram,
        details={side: str(exc) for side, exc in errors})


# ---------------------------------------------------------------------------
# registry, info report, text format

def named_lattice(name: str) -> Lattice:
    """Resolve the names accepted by the command line tool."""
    if name == "E8":
        return build_E8()
    if name == "E7":
        return build_E7(build_E8())
    if name == "E6":
        return build_E6(build_E8())
    if name == "D16+":
        return build_D16plus()
    if name == "3E8":
        e8 = build_E8()
        return direct_sum(e8, e8, e8)
    if name == "E8+D16+":
        return direct_sum(build_E8(), build_D16plus())
    if name == "LeechII":
        return leech_from_ii26()
    if name == "LeechIcosian":
        return leech_from_icosians()
    if name.startswith("A") and name[1:].isdigit():
        return build_An(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return build_Dn(int(name[1:]))
    raise LatticeError(
        f"unknown lattice name {name!r}; expected A<n>, D<n>, E6, E7, E8, "
        "D16+, 3E8, E8+D16+, LeechII or LeechIcosian")


def lattice_info(lat: Lattice) -> dict:
    """Summary facts: rank, parity, unimodularity, minimum, kissing number."""
    info = {
        "rank": lat.rank,
        "even": is_even(lat),
        "unimodular": is_unimodular(lat),
    }
    if info["even"] and is_positive_definite(lat):
        gi = [[int(v) for v in row] for row in lat.gram]
        gr, _ = _lll_int(gi)
        cap = min(gr[i][i] for i in range(lat.rank))
        counts = _enumerate_int_gram(gr, cap)
        mn = min(counts)
        info["min_norm"] = mn
        info["kissing"] = counts[mn]
    else:
        info["min_norm"] = None
        info["kissing"] = None
    return info


def format_lattice(lat: Lattice) -> str:
    lines = [f"{lat.rank} {lat.ambient_dim} {lat.signature}"]
    for row in lat.basis:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_lattice(text: str) -> Lattice:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise LatticeError("empty lattice description")
    head = lines[0].split()
    if len(head) != 3:
        raise LatticeError("first line must be: rank ambient signature")
    try:
        rank, ambient = int(head[0]), int(head[1])
    except ValueError:
        raise LatticeError("rank and ambient dimension must be integers")
    signature = head[2]
    if signature not in _SIGNATURES:
        raise LatticeError(f"unknown signature {signature!r}")
    if len(lines) != rank + 1:
        raise LatticeError(f"expected {rank} basis rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            rows.append(tuple(Fraction(tok) for tok in ln.split()))
        except (ValueError, ZeroDivisionError):
            raise LatticeError(f"bad rational entry in row: {ln!r}")
    return Lattice(ambient, rank, tuple(rows), signature=signature)
