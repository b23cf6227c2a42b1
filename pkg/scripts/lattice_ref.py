"""Determinant and root-count reference values for the root lattices.

Builds each lattice from its coordinate recipe, computes the Gram determinant
two ways (cofactor expansion and fraction-free Gaussian elimination), and
counts norm-2 and norm-4 vectors by brute-force coordinate boxes whose
sufficiency is argued inline. Also checks the Lorentzian II_{25,1} basis and
the Week-95 Weyl vectors.
"""

from fractions import Fraction
from itertools import product


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def gram(basis):
    return [[dot(a, b) for b in basis] for a in basis]


def det_cofactor(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * m[0][c] * det_cofactor(minor)
    return total


def det_gauss(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return d


def an_basis(n):
    return [[1 if k == i else -1 if k == i + 1 else 0 for k in range(n + 1)]
            for i in range(n)]


def dn_basis(n):
    rows = [[1, 1] + [0] * (n - 2)]
    rows += [[1 if k == i else -1 if k == i + 1 else 0 for k in range(n)]
             for i in range(n - 1)]
    return rows


def e8_basis():
    # doubled coordinates: integer vectors representing x*2, even sum,
    # generator set: 2e_i - 2e_{i+1}, 2e_6 + 2e_7, (1,...,1)
    rows = []
    for i in range(7):
        r = [0] * 8
        r[i], r[i + 1] = 2, -2
        rows.append(r)
    r = [0] * 8
    r[6], r[7] = 2, 2
    rows.append(r)
    rows.append([1] * 8)
    return rows  # 9 generators; HNF in the library reduces to rank 8


def hnf_rows(rows):
    rows = [list(r) for r in rows]
    m = len(rows[0])
    out = []
    for col in range(m):
        pool = [r for r in rows if any(r)]
        cand = [r for r in pool if r[col] != 0]
        if not cand:
            rows = pool
            continue
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[col]))
            p = cand[0]
            for r in cand[1:]:
                f = r[col] // p[col]
                for k in range(m):
                    r[k] -= f * p[k]
            cand = [r for r in cand if r[col] != 0]
        p = cand[0]
        if p[col] < 0:
            for k in range(m):
                p[k] = -p[k]
        out.append(p)
        rows = [r for r in pool if r is not p and any(r)]
    return out


def count_roots_box(basis_doubled, half_scale, norm_target, box):
    """Count lattice vectors of given doubled-norm by brute force over integer
    coordinate boxes; the lattice is {x : 2x integer coords in row span}."""
    raise NotImplementedError  # not needed; direct coordinate predicates below


def e8_contains(v2):
    # v2 = doubled coordinates
    if any((c - v2[0]) % 2 for c in v2):
        return False
    if v2[0] % 2 == 0:
        ints = [c // 2 for c in v2]
        return sum(ints) % 2 == 0
    return sum(v2) % 4 == 0  # halves: sum of eight half-integers must be even


def count_e8(norm):
    # doubled coords in {-4..4} suffice for norm <= 4: |x_i| <= 2
    n = 0
    target = 4 * norm  # doubled-norm
    for v2 in product(range(-4, 5), repeat=8):
        if sum(c * c for c in v2) == target and e8_contains(v2):
            n += 1
    return n


def count_dn_roots(n):
    cnt = 0
    for v in product(range(-2, 3), repeat=n):
        if sum(c * c for c in v) == 2 and sum(v) % 2 == 0:
            cnt += 1
    return cnt


def count_an_roots(n):
    cnt = 0
    for v in product(range(-1, 2), repeat=n + 1):
        if sum(v) == 0 and sum(c * c for c in v) == 2:
            cnt += 1
    return cnt


def main():
    for n in range(1, 9):
        g = gram(an_basis(n))
        dc, dg = det_cofactor(g), det_gauss(g)
        roots = count_an_roots(n)
        print(f"A{n}: det {dc} / {dg}, roots {roots} (expect {n*(n+1)})")
    for n in range(2, 9):
        g = gram(dn_basis(n))
        dc, dg = det_cofactor(g), det_gauss(g)
        roots = count_dn_roots(n)
        print(f"D{n}: det {dc} / {dg}, roots {roots}")

    e8rows = hnf_rows(e8_basis())
    assert len(e8rows) == 8
    g = [[Fraction(dot(a, b), 4) for b in e8rows] for a in e8rows]
    print(f"E8: det {det_gauss(g)}, norm-2 count {count_e8(2)}, "
          f"norm-4 count {count_e8(4)}")

    # E7: orthogonal complement in E8 of the lexicographically least root.
    # roots scanned in doubled coords; least by tuple order
    roots = sorted(v for v in product(range(-4, 5), repeat=8)
                   if sum(c * c for c in v) == 8 and e8_contains(v))
    v0 = roots[0]
    print(f"E8 least root (doubled): {v0}")
    e7 = [r for r in roots if dot(r, v0) == 0]
    print(f"E7 root count: {len(e7)}")
    e7b = hnf_rows(e7)
    g7 = [[Fraction(dot(a, b), 4) for b in e7b] for a in e7b]
    print(f"E7: rank {len(e7b)}, det {det_gauss(g7)}")

    # E6: complement of an A2 pair u, w with u.w = -1 (doubled: -4)
    u = v0
    w = next(r for r in roots if dot(r, u) == -4)
    print(f"A2 pair (doubled): {u}, {w}")
    e6 = [r for r in roots if dot(r, u) == 0 and dot(r, w) == 0]
    e6b = hnf_rows(e6)
    g6 = [[Fraction(dot(a, b), 4) for b in e6b] for a in e6b]
    print(f"E6: rank {len(e6b)}, roots {len(e6)}, det {det_gauss(g6)}")

    # D16+ root count: half-integer vectors need norm 16*(1/4) = 4 > 2, so
    # roots are the integer ones, same shape as D16
    print(f"D16+ roots = D16 roots = 2*16*15 = {2*16*15} (box check on D4/D8 "
          f"pattern above)")

    # Lorentzian II_{25,1}: basis check in doubled coordinates, eta = diag(-1,1...)
    dim = 26
    rows = []
    g0 = [-1] + [1] * 25
    rows.append(g0)  # (-1/2, 1/2, ..., 1/2) doubled
    r = [0] * dim
    r[1], r[2] = 2, 2
    rows.append(r)
    for i in range(1, 25):
        r = [0] * dim
        r[i], r[i + 1] = 2, -2
        rows.append(r)
    b = [[Fraction(x, 2) for x in row] for row in rows]
    m = [[Fraction(x) for x in row] for row in b]
    d = det_gauss(m)
    print(f"II_25,1 basis |det| = {abs(d)} (expect 1)")

    def mdot(a, bb):
        return -a[0] * bb[0] + sum(x * y for x, y in zip(a[1:], bb[1:]))

    for dim_, k in ((10, 8), (18, 16), (26, 24)):
        w = [0] * (dim_)
        # Weyl vectors (u; 0, 1, ..., k); only the k = 24 one is isotropic
        u = {8: 28, 16: 46, 24: 70}[k]
        w[0] = u
        for i in range(1, k + 1):
            w[i + 1] = i
        print(f"dim {dim_}: w = ({u}; 0,1,...,{k}), w.w = {mdot(w, w)}")


if __name__ == "__main__":
    main()
