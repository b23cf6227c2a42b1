"""Geometry survey of the icosian ring's rank-8 coordinate lattice.

The 120 unit icosians (closure of {i, j, (1/phi + i + phi j)/2} under quaternion
multiplication over Q(sqrt5)) span a rank-8 Z-module once each golden coordinate
u + v*sqrt5 is split into the pair (u, v). This script asks, independently of the
library code, what that module looks like as a lattice:

  * under the flat form u0^2 + v0^2 + ... + v3^2 (plain dot product of the split
    coordinates), and
  * under the twisted form sum (u+v)^2 + (2v)^2 per coordinate pair, which is the
    sqrt5 -> 1 specialization of the quaternion norm (the natural norm carried
    over from the golden field).

For each form it prints the Gram determinant, the minimal norm, and the first
vector-count shells, then repeats the exercise for the rank-24 lattice of
icosian triples (x,y,z) with x = y = z mod h and x+y+z = 0 mod h*, for
h = (-sqrt5+i+j+k)/2, under both the right-ideal (u-v in I*h) and left-ideal
(u-v in h*I) congruence readings. The shell counts decide whether any single
global rescaling of either lattice can be even and unimodular.

Run: python3 scripts/icosian_survey.py   (takes a couple of minutes)
"""

import math
from fractions import Fraction

# ---------------------------------------------------------------- golden field

ZERO = (Fraction(0), Fraction(0))
ONE = (Fraction(1), Fraction(0))


def gadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def gsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def gmul(x, y):
    return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def ghalf(x):
    return (x[0] / 2, x[1] / 2)


PHI = (Fraction(1, 2), Fraction(1, 2))        # (1+sqrt5)/2
PHI_INV = (Fraction(-1, 2), Fraction(1, 2))   # phi - 1

# ------------------------------------------------------- golden quaternions


def qmul(p, q):
    a, b, c, d = p
    e, f, g, h = q
    return (
        gsub(gsub(gsub(gmul(a, e), gmul(b, f)), gmul(c, g)), gmul(d, h)),
        gsub(gadd(gadd(gmul(a, f), gmul(b, e)), gmul(c, h)), gmul(d, g)),
        gadd(gsub(gadd(gmul(a, g), gmul(c, e)), gmul(b, h)), gmul(d, f)),
        gadd(gadd(gsub(gmul(a, h), gmul(c, f)), gmul(b, g)), gmul(d, e)),
    )


def qconj(p):
    a, b, c, d = p
    return (a, gsub(ZERO, b), gsub(ZERO, c), gsub(ZERO, d))


def qnorm(p):
    n = ZERO
    for c in p:
        n = gadd(n, gmul(c, c))
    return n


def unit_group():
    i = (ZERO, ONE, ZERO, ZERO)
    j = (ZERO, ZERO, ONE, ZERO)
    s = (ghalf(PHI_INV), ghalf(ONE), ghalf(PHI), ZERO)
    elems = {i, j, s}
    frontier = list(elems)
    while frontier:
        nxt = []
        for p in frontier:
            for q in list(elems):
                for r in (qmul(p, q), qmul(q, p)):
                    if r not in elems:
                        elems.add(r)
                        nxt.append(r)
        frontier = nxt
        if len(elems) > 10_000:
            raise RuntimeError("closure exploded; wrong seed")
    return elems


def split8(q):
    out = []
    for c in q:
        out.extend(c)
    return out


# ------------------------------------------------------ integer linear algebra


def row_hnf(rows):
    """Hermite-style integer row reduction; returns the nonzero reduced rows."""
    rows = [list(r) for r in rows]
    m = len(rows[0])
    out = []
    pivot_col = 0
    while pivot_col < m and rows:
        live = [r for r in rows if any(r)]
        rows = live
        col_rows = [r for r in rows if r[pivot_col] != 0]
        if not col_rows:
            pivot_col += 1
            continue
        while True:
            col_rows.sort(key=lambda r: abs(r[pivot_col]))
            p = col_rows[0]
            done = True
            for r in col_rows[1:]:
                f = r[pivot_col] // p[pivot_col]
                for k in range(m):
                    r[k] -= f * p[k]
                if r[pivot_col] != 0:
                    done = False
            col_rows = [r for r in col_rows if r[pivot_col] != 0]
            if done or len(col_rows) == 1:
                break
        if p[pivot_col] < 0:
            for k in range(m):
                p[k] = -p[k]
        out.append(p)
        rows = [r for r in rows if r is not p and any(r)]
        pivot_col += 1
    return out


def gram(basis, form=None):
    n = len(basis)
    if form is None:
        return [[sum(Fraction(x) * y for x, y in zip(basis[a], basis[b]))
                 for b in range(n)] for a in range(n)]
    tb = [[sum(form[r][c] * Fraction(v[c]) for c in range(len(v))) for r in range(len(v))]
          for v in basis]
    return [[sum(Fraction(x) * y for x, y in zip(basis[a], tb[b])) for b in range(n)]
            for a in range(n)]


def det(mat):
    m = [row[:] for row in mat]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        inv = m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / inv
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return d


def cholesky(g):
    """g = L D L^T with unit lower-triangular L; returns (mu, diag)."""
    n = len(g)
    mu = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = g[i][i] - sum(mu[i][k] * mu[i][k] * d[k] for k in range(i))
        mu[i][i] = Fraction(1)
        for j in range(i + 1, n):
            mu[j][i] = (g[j][i] - sum(mu[j][k] * mu[i][k] * d[k] for k in range(i))) / d[i]
    return mu, d


def shells(g, max_norm):
    """Counts of nonzero vectors by exact norm <= max_norm (includes both signs)."""
    n = len(g)
    mu, d = cholesky(g)
    counts = {}
    # mu columns: cols[j][k] is the Gram-Schmidt coefficient of basis_j on b*_k
    cols = [[mu[j][k] for k in range(n)] for j in range(n)]

    def rec(level, residual, centers):
        c = -centers[level]
        bound = residual / d[level]
        lo = math.floor(c)
        while Fraction(lo - 1 - c) ** 2 <= bound:
            lo -= 1
        while Fraction(lo - c) ** 2 > bound:
            lo += 1
        x = lo
        while Fraction(x - c) ** 2 <= bound:
            t = d[level] * Fraction(x - c) ** 2
            if level == 0:
                nv = t + (max_norm - residual)
                counts[nv] = counts.get(nv, 0) + 1
            else:
                new_centers = [centers[k] + cols[level][k] * x for k in range(level)]
                rec(level - 1, residual - t, new_centers)
            x += 1

    rec(n - 1, Fraction(max_norm), [Fraction(0)] * n)
    counts.pop(Fraction(0), None)
    return {k: v for k, v in sorted(counts.items())}


def lll_reduce_gram(g, delta=Fraction(99, 100)):
    """Exact LLL on a Gram matrix; returns (new_gram, transform U) with
    new_gram = U g U^T. Gram is updated in place under the row operations."""
    n = len(g)
    U = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    G = [row[:] for row in g]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            bstar[i] = G[i][i] - sum(mu[i][k] ** 2 * bstar[k] for k in range(i))
            for j in range(i + 1, n):
                mu[j][i] = (G[j][i] - sum(mu[j][k] * mu[i][k] * bstar[k]
                                          for k in range(i))) / bstar[i]
        return mu, bstar

    def addmul(k, j, r):
        gkk = G[k][k] - 2 * r * G[k][j] + r * r * G[j][j]
        for t in range(n):
            U[k][t] -= r * U[j][t]
        for t in range(n):
            G[k][t] -= r * G[j][t]
        for t in range(n):
            G[t][k] -= r * G[t][j]
        G[k][k] = gkk

    def swap(k):
        U[k], U[k - 1] = U[k - 1], U[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]

    k = 1
    mu, bstar = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                addmul(k, j, r)
                for i in range(j):
                    mu[k][i] -= r * mu[j][i]
                mu[k][j] -= r
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            swap(k)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return G, U


def describe(tag, basis, form, max_norm):
    g = gram(basis, form)
    dg = det(g)
    sh = shells(g, Fraction(max_norm))
    print(f"{tag}: rank {len(basis)}, det(Gram) = {dg}")
    print(f"  shells (norm: count) up to {max_norm}: "
          + ", ".join(f"{k}: {v}" for k, v in sh.items()))
    if sh:
        mn = min(sh)
        scale = Fraction(2 if len(basis) == 8 else 4) / mn
        sg = [[scale * x for x in row] for row in g]
        integral = all(x.denominator == 1 for row in sg for x in row)
        even = integral and all(sg[i][i] % 2 == 0 for i in range(len(sg)))
        print(f"  rescale by {scale} -> min norm {scale * mn}: integral={integral}, "
              f"even={even}, det={det(sg)}")
    return g


FLAT = None
TWIST_BLOCK = [[1, 1], [1, 5]]


def twist_form(dim):
    f = [[Fraction(0)] * dim for _ in range(dim)]
    for p in range(dim // 2):
        for a in range(2):
            for b in range(2):
                f[2 * p + a][2 * p + b] = Fraction(TWIST_BLOCK[a][b])
    return f


def main():
    units = unit_group()
    print(f"unit closure size: {len(units)}")
    norms = {qnorm(u) for u in units}
    print(f"unit norms: {sorted(norms)}")

    vecs = [split8(u) for u in units]
    scaled = [[int(4 * c) for c in v] for v in vecs]
    basis8 = row_hnf(scaled)
    basis8 = [[Fraction(c, 4) for c in row] for row in basis8]
    print(f"span rank: {len(basis8)}")

    describe("icosian span, flat form", basis8, FLAT, 3)
    describe("icosian span, twisted form", basis8, twist_form(8), 3)

    # ---- triple lattice with congruences -------------------------------
    h = (ghalf((Fraction(0), Fraction(-1))), ghalf(ONE), ghalf(ONE), ghalf(ONE))
    print(f"norm(h) = {qnorm(h)}")

    # integer coordinates of the ring basis (times 4) for membership solving
    ibasis = [[int(4 * c) for c in row] for row in basis8]

    def to_ring_coords(q):
        """exact integer coordinates of icosian q in the ring basis, or None"""
        target = [4 * c for c in split8(q)]
        # solve x * ibasis = target over Z by back-substitution on the HNF basis
        x = [0] * len(ibasis)
        t = [Fraction(c) for c in target]
        rows = ibasis
        # HNF rows have staggered pivots; find pivot columns
        piv = []
        for r in rows:
            piv.append(next(i for i, v in enumerate(r) if v != 0))
        for idx in range(len(rows)):
            p = piv[idx]
            if t[p] % rows[idx][p] != 0:
                return None
            coef = t[p] / rows[idx][p]
            x[idx] = int(coef)
            for k in range(len(t)):
                t[k] -= coef * rows[idx][k]
        if any(t):
            return None
        return x

    ring_basis_q = []
    for row in basis8:
        q = (
            (row[0], row[1]),
            (row[2], row[3]),
            (row[4], row[5]),
            (row[6], row[7]),
        )
        ring_basis_q.append(q)

    def ideal_matrix(mult_left):
        """rows: ring coordinates of basis_i * h (or h * basis_i)."""
        rows = []
        for q in ring_basis_q:
            r = qmul(h, q) if mult_left else qmul(q, h)
            coords = to_ring_coords(r)
            assert coords is not None
            rows.append(coords)
        return rows

    for tag, left in (("right ideal I*h", False), ("left ideal h*I", True)):
        H = ideal_matrix(left)
        Hs_rows = []
        for q in ring_basis_q:
            r = qmul(qconj(h), q) if left else qmul(q, qconj(h))
            Hs_rows.append(to_ring_coords(r))
        # lattice T = {(a,b,c) in Z^24 : a-b, b-c in im(H), a+b+c in im(Hs)}
        # solved as integer kernel of [A | -M] projected to the first 24 coords.
        n = 8
        rows = []
        # unknowns: a(8) b(8) c(8) s(8) t(8) u(8) ; equations:
        # a - b - s*H = 0 ; b - c - t*H = 0 ; a + b + c - u*Hs = 0
        # build kernel via HNF of the transposed system: we instead enumerate the
        # kernel by rowspace trick: solutions (a,b,c,s,t,u) of the 24 linear
        # equations; compute kernel of the 24x48 integer matrix with HNF on its
        # transpose.
        eq = []
        for r in range(n):
            row = [0] * 48
            row[r] = 1
            row[8 + r] = -1
            for k in range(n):
                row[24 + k] = -H[k][r]
            eq.append(row)
        for r in range(n):
            row = [0] * 48
            row[8 + r] = 1
            row[16 + r] = -1
            for k in range(n):
                row[32 + k] = -H[k][r]
            eq.append(row)
        for r in range(n):
            row = [0] * 48
            row[r] = 1
            row[8 + r] = 1
            row[16 + r] = 1
            for k in range(n):
                row[40 + k] = -Hs_rows[k][r]
            eq.append(row)
        # kernel of eq (24 equations, 48 unknowns) over Z:
        kern = integer_kernel(eq)
        print(f"{tag}: kernel rank {len(kern)} (expect 24)")
        triples = [v[:24] for v in kern]
        tb = row_hnf(triples)
        # embed: coordinates are ring-basis combination -> R^24 via basis8 blocks
        emb = []
        for row in tb:
            v = []
            for blk in range(3):
                coeffs = row[blk * 8:(blk + 1) * 8]
                w = [Fraction(0)] * 8
                for cf, b in zip(coeffs, basis8):
                    for k in range(8):
                        w[k] += cf * b[k]
                v.extend(w)
            emb.append(v)
        g_flat = gram(emb)
        d_flat = det(g_flat)
        print(f"  flat det = {d_flat}")
        g_tw = gram(emb, twist_form(24))
        d_tw = det(g_tw)
        print(f"  twisted det = {d_tw}")
        red_flat, _ = lll_reduce_gram(g_flat)
        sh = shells(red_flat, Fraction(2))
        print("  flat shells <= 2: " + ", ".join(f"{k}: {v}" for k, v in sh.items()))
        red_tw, _ = lll_reduce_gram(g_tw)
        sh = shells(red_tw, Fraction(3))
        print("  twisted shells <= 3: " + ", ".join(f"{k}: {v}" for k, v in sh.items())
              or "  (none)")
        # scale needed for unimodularity: s^24 * det = 1
        for name, dd, gg in (("flat", d_flat, g_flat), ("twisted", d_tw, g_tw)):
            s = nth_root_rational(1 / dd, 24)
            if s is None:
                print(f"  {name}: no rational scale makes det 1")
            else:
                sg = [[s * x for x in row] for row in gg]
                integral = all(x.denominator == 1 for row in sg for x in row)
                even = integral and all(sg[i][i] % 2 == 0 for i in range(24))
                print(f"  {name}: scale {s} -> integral={integral} even={even}")


def integer_kernel(eq_rows):
    """Kernel over Z of the linear system given by eq_rows (each row an equation
    on len(row) unknowns): returns basis of integer solution vectors."""
    m = len(eq_rows)
    n = len(eq_rows[0])
    # work on columns: stack identity below the transposed system and HNF rows of
    # [A^T | I]; kernel rows are those whose A^T part vanished.
    aug = []
    for c in range(n):
        row = [eq_rows[r][c] for r in range(m)] + [1 if k == c else 0 for k in range(n)]
        aug.append(row)
    red = row_hnf_full(aug, m)
    kern = [r[m:] for r in red if all(v == 0 for v in r[:m])]
    return kern


def row_hnf_full(rows, lead_cols):
    """HNF-style reduction ordering pivots only within the first lead_cols
    columns; rows whose leading block is zero are returned as-is (reduced)."""
    rows = [list(r) for r in rows]
    total = len(rows[0])
    out = []
    for pivot_col in range(lead_cols):
        col_rows = [r for r in rows if r[pivot_col] != 0]
        if not col_rows:
            continue
        while True:
            col_rows.sort(key=lambda r: abs(r[pivot_col]))
            p = col_rows[0]
            done = True
            for r in col_rows[1:]:
                f = r[pivot_col] // p[pivot_col]
                if f:
                    for k in range(total):
                        r[k] -= f * p[k]
                if r[pivot_col] != 0:
                    done = False
            col_rows = [r for r in col_rows if r[pivot_col] != 0]
            if done or len(col_rows) == 1:
                break
        out.append(p)
        rows = [r for r in rows if r is not p]
    return rows + out  # rows: zero-lead rows (kernel part); out: pivots


def nth_root_rational(x, n):
    from math import isqrt

    def iroot(v, n):
        if v < 0:
            return None
        lo, hi = 0, max(1, v)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** n < v:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** n == v else None

    p = iroot(x.numerator, n)
    q = iroot(x.denominator, n)
    if p is None or q is None:
        return None
    return Fraction(p, q)


if __name__ == "__main__":
    main()
