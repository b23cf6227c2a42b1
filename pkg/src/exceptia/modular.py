"""Integer q-series arithmetic: eta^24, truncated products and inverses,
and the j-function of a rank-24 even unimodular lattice.

Only the 24th power of eta is ever represented, so every exponent is an
integer and every coefficient stays in Z. Division is multiplication by an
exactly computed integer inverse series, which exists because eta^24 has
leading coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .lattices import Lattice, is_even, is_unimodular, theta_series


class SeriesError(ValueError):
    """Domain error raised by q-series operations."""


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent series: coeffs[i] is the coefficient of q^(low+i).

    The leading coefficient is nonzero unless the series is zero (empty
    coeffs); leading zeros are stripped at construction. Trailing zeros are
    kept, since the length records how far the truncation is valid.
    """

    low: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if any(not isinstance(c, int) for c in cs):
            raise SeriesError("coefficients must be integers")
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        low = self.low + k
        cs = cs[k:]
        if not cs:
            low = 0
        if low < -1:
            raise SeriesError("lowest exponent below -1 is not representable")
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def order(self) -> int:
        """Highest exponent carried by the truncation."""
        if self.is_zero:
            raise SeriesError("the zero series has no truncation order")
        return self.low + len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of q^k; exponents outside the carried range are 0."""
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0


ZERO_SERIES = LaurentSeries(0, ())


def eta24(N: int) -> LaurentSeries:
    """q * prod_{n=1..N} (1 - q^n)^24, carried through exponent N + 1."""
    if N < 1:
        raise SeriesError("eta24 needs N >= 1")
    # Euler product through exponent N, dense
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        for i in range(N, n - 1, -1):
            p[i] -= p[i - n]

    def mul(a, b):
        out = [0] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(min(N - i, N) + 1):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return out

    p2 = mul(p, p)
    p4 = mul(p2, p2)
    p8 = mul(p4, p4)
    p16 = mul(p8, p8)
    p24 = mul(p16, p8)
    return LaurentSeries(1, tuple(p24))


def series_mul(a: LaurentSeries, b: LaurentSeries, N: int) -> LaurentSeries:
    """Cauchy product truncated at exponent N."""
    if a.is_zero or b.is_zero:
        return ZERO_SERIES
    low = a.low + b.low
    if low > N:
        return ZERO_SERIES
    out = [0] * (N - low + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        ea = a.low + i
        top = N - ea - b.low
        for j, bj in enumerate(b.coeffs[: top + 1]):
            if bj:
                out[ea + b.low + j - low] += ai * bj
    return LaurentSeries(low, tuple(out))


def series_inv(a: LaurentSeries, N: int) -> LaurentSeries:
    """Inverse through exponent N: a * series_inv(a, N) = 1 + O(q^(N+1)).

    The leading coefficient must be 1 or -1 so the inverse stays integral,
    and a must carry enough coefficients to determine the result: exponents
    up to N + 2*a.low.
    """
    if a.is_zero:
        raise SeriesError("the zero series has no inverse")
    lead = a.coeffs[0]
    if lead not in (1, -1):
        raise SeriesError(f"leading coefficient must be 1 or -1, got {lead}")
    if N < -a.low:
        raise SeriesError("truncation order lies below the leading exponent "
                          "of the inverse")
    m_top = N + a.low                   # unit-part length of the result
    if len(a.coeffs) - 1 < m_top:
        raise SeriesError(
            f"series carried through exponent {a.order} cannot determine its "
            f"inverse through exponent {N}; extend it to exponent {m_top + a.low}")
    u = a.coeffs
    v = [0] * (m_top + 1)
    v[0] = lead
    for m in range(1, m_top + 1):
        s = sum(u[k] * v[m - k] for k in range(1, m + 1))
        v[m] = -lead * s
    return LaurentSeries(-a.low, tuple(v))


def series_sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Difference, valid through the shorter of the two truncations."""
    if a.is_zero:
        return LaurentSeries(b.low, tuple(-c for c in b.coeffs))
    if b.is_zero:
        return a
    top = min(a.order, b.order)
    low = min(a.low, b.low)
    if top < low:
        raise SeriesError("truncations do not overlap")
    out = [a.coefficient(k) - b.coefficient(k) for k in range(low, top + 1)]
    return LaurentSeries(low, tuple(out))


def j_from_lattice(lat: Lattice, N: int = 5) -> LaurentSeries:
    """j as theta(L)/eta^24, through exponent N, for rank-24 even unimodular L.

    theta at order N+1 requires enumerating lattice vectors with norm up to
    2N+2, which dominates the runtime once the lattice has no direct-sum
    structure to exploit (for the Leech lattice this is minutes, not seconds).
    """
    if lat.rank != 24 or not (is_even(lat) and is_unimodular(lat)):
        raise SeriesError("j_from_lattice needs a rank-24 even unimodular "
                          "lattice")
    if N < 0:
        raise SeriesError("truncation order must be nonnegative")
    th = theta_series(lat, N + 1)
    theta_q = LaurentSeries(0, th.counts)
    inv = series_inv(eta24(N + 1), N)
    return series_mul(theta_q, inv, N)


def format_series(s: LaurentSeries) -> str:
    """Render as a readable sum, e.g. "q^-1 + 744 + 196884 q"."""
    if s.is_zero:
        return "0"
    parts = []
    for i, c in enumerate(s.coeffs):
        if c == 0:
            continue
        k = s.low + i
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "q" if k == 1 else f"q^{k}"
            body = power if mag == 1 else f"{mag} {power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
