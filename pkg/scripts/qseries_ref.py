"""Independent q-series targets for the modular-form module.

Everything here is built from scratch with integer series arithmetic:

  * E4 via sigma_3 divisor sums,
  * eta^24 via Euler's pentagonal number theorem (24th power of the sparse
    pentagonal series, times q),
  * j = E4^3 / Delta by exact series division,
  * theta(Leech) = E4^3 - 720*Delta.

Prints the coefficient tables the library tests will freeze. Any mismatch
between these numbers and the library later is a bug in exactly one of the two.
"""

N = 12  # truncation order in q


def series_mul(a, b, n=N):
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            out[i + j] += ai * bj
    return out


def series_inv(a, n=N):
    assert a[0] in (1, -1)
    inv = [0] * (n + 1)
    inv[0] = a[0]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * inv[k - i]
        inv[k] = -a[0] * acc
    return inv


def sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein4(n=N):
    return [1] + [240 * sigma(3, m) for m in range(1, n + 1)]


def pentagonal(n=N):
    """Euler product prod (1-q^m) as a series: sum (-1)^k q^{k(3k-1)/2}."""
    out = [0] * (n + 1)
    k = 0
    while True:
        hit = False
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e <= n:
                out[e] += -1 if kk % 2 else 1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return out


def eta24_over_q(n=N):
    p = pentagonal(n)
    out = [1] + [0] * n
    for _ in range(24):
        out = series_mul(out, p, n)
    return out


def main():
    e4 = eisenstein4()
    print("E4 (= theta_E8 with q^m at norm 2m):")
    print(" ", e4[:8])

    disc = eta24_over_q()  # Delta / q
    print("Delta/q coefficients (Ramanujan tau):")
    print(" ", disc[:8])

    e4cubed = series_mul(series_mul(e4, e4), e4)
    print("E4^3 (= theta of any even unimodular rank-24 lattice with 720 roots):")
    print(" ", e4cubed[:8])

    j = series_mul(e4cubed, series_inv(disc))
    # j has a 1/q pole: with Delta = q * disc, j = (E4^3 / disc) / q, so the
    # series just computed is sum c(m) q^m with c(0) the 1/q coefficient shifted.
    print("j-function: c(-1), c(0), c(1), ... :")
    print(" ", j[:7])

    leech = [a - 720 * b for a, b in zip(e4cubed, [0] + disc[:-1])]
    print("theta_Leech = E4^3 - 720*Delta, q^m at norm 2m:")
    print(" ", leech[:7])

    # cusp-form sanity: tau(2) = -24, tau(3) = 252, tau(4) = -1472
    assert disc[0] == 1 and disc[1] == -24 and disc[2] == 252 and disc[3] == -1472
    # j sanity: McKay numbers
    assert j[0] == 1 and j[1] == 744 and j[2] == 196884
    print("tau and McKay spot checks passed")


if __name__ == "__main__":
    main()
