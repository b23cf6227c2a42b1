"""Survey of the Cayley-Dickson doubling recipe (a,b)(c,d) = (ac - d*b, da + bc*).

Self-contained reference computation, independent of the library code. It pins
down which algebra laws survive at which level of the tower, and finds explicit
witnesses for the failures. The frozen outputs feed the test suite:

  * the level-2 basis table (quaternion relations),
  * norm multiplicativity through level 3 on random rational inputs,
  * alternativity x(xy) = (xx)y: holds at level 3, first fails at level 4,
  * associativity: first fails at level 3,
  * a search over two-term basis elements for genuine zero divisors at level 4,
  * the value of the particular product (e1 + e12)(-1 + e13), i.e. the pair
    ((e1, e4), (-1, e5)) in doubled-pair notation.

Run: python scripts/doubling_laws.py
"""

from fractions import Fraction
import itertools
import random


def cd_mul(x, y):
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = cd_mul(a, c)
    db = cd_mul(cd_conj(d), b)
    da = cd_mul(d, a)
    bc = cd_mul(b, cd_conj(c))
    return tuple(p - q for p, q in zip(ac, db)) + tuple(p + q for p, q in zip(da, bc))


def cd_conj(x):
    if len(x) == 1:
        return x
    return (x[0],) + tuple(-c for c in x[1:])


def basis(level, i):
    v = [Fraction(0)] * (1 << level)
    v[i] = Fraction(1)
    return tuple(v)


def norm(x):
    return sum(c * c for c in x)


def random_elt(rng, level):
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(1 << level))


def main():
    rng = random.Random(59)

    # Level-2 basis table in the e-indexing (e1=i, e2=j, e3=k).
    names = ["1", "i", "j", "k"]
    print("level-2 table:")
    for i in range(1, 4):
        row = []
        for j in range(1, 4):
            p = cd_mul(basis(2, i), basis(2, j))
            term = [(k, c) for k, c in enumerate(p) if c != 0]
            (k, c), = term
            row.append(("-" if c < 0 else "+") + names[k])
        print(f"  {names[i]}*[i j k] = {row}")

    # Norm multiplicativity, levels 1..4.
    for level in (1, 2, 3, 4):
        bad = None
        for _ in range(1000):
            x, y = random_elt(rng, level), random_elt(rng, level)
            if norm(cd_mul(x, y)) != norm(x) * norm(y):
                bad = (x, y)
                break
        print(f"norm multiplicative at level {level}: {bad is None}")

    # Alternativity and associativity on basis vectors.
    for level in (3, 4):
        n = 1 << level
        alt_bad = []
        for i, j in itertools.product(range(n), repeat=2):
            x, y = basis(level, i), basis(level, j)
            if cd_mul(x, cd_mul(x, y)) != cd_mul(cd_mul(x, x), y):
                alt_bad.append((i, j))
        print(f"level {level} alternativity basis failures: {len(alt_bad)}"
              + (f" first={alt_bad[0]}" if alt_bad else ""))
    # Alternativity on random pairs at level 3 (the basis check above is not exhaustive).
    ok = all(
        cd_mul(x, cd_mul(x, y)) == cd_mul(cd_mul(x, x), y)
        for x, y in (tuple(random_elt(rng, 3) for _ in range(2)) for _ in range(1000))
    )
    print(f"level 3 alternativity, 1000 random pairs: {ok}")

    # Basis pairs generate associative subalgebras, so the level-4 alternativity
    # failure needs a two-term element.
    alt_witness = None
    for a, b in itertools.combinations(range(1, 16), 2):
        if alt_witness:
            break
        x = tuple(p + q for p, q in zip(basis(4, a), basis(4, b)))
        for c in range(1, 16):
            y = basis(4, c)
            if cd_mul(x, cd_mul(x, y)) != cd_mul(cd_mul(x, x), y):
                alt_witness = (a, b, c)
                break
    print(f"level-4 alternativity two-term witness: x = e{alt_witness[0]} + e{alt_witness[1]},"
          f" y = e{alt_witness[2]}")

    assoc_bad = []
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        x, y, z = basis(3, i), basis(3, j), basis(3, k)
        if cd_mul(cd_mul(x, y), z) != cd_mul(x, cd_mul(y, z)):
            assoc_bad.append((i, j, k))
            if len(assoc_bad) == 1:
                break
    print(f"level 3 associativity first basis failure: {assoc_bad[0]}")

    # Zero-divisor search at level 4 over (e_a + s*e_b)(e_c + t*e_d), s,t = +-1.
    found = []
    for a, b in itertools.combinations(range(1, 16), 2):
        for c, d in itertools.combinations(range(1, 16), 2):
            for s in (1, -1):
                for t in (1, -1):
                    x = tuple(p + s * q for p, q in zip(basis(4, a), basis(4, b)))
                    y = tuple(p + t * q for p, q in zip(basis(4, c), basis(4, d)))
                    if all(v == 0 for v in cd_mul(x, y)):
                        found.append((a, s, b, c, t, d))
    print(f"level-4 two-term zero divisors found: {len(found)}")
    if found:
        a, s, b, c, t, d = found[0]
        print(f"  first: (e{a} {'+' if s > 0 else '-'} e{b})"
              f"(e{c} {'+' if t > 0 else '-'} e{d}) = 0")

    # The particular pair ((e1,e4), (-1,e5)) at level 4, i.e. (e1+e12)(-1+e13).
    x = tuple(p + q for p, q in zip(basis(4, 1), basis(4, 12)))
    y = tuple(q - p for p, q in zip(basis(4, 0), basis(4, 13)))
    z = cd_mul(x, y)
    print("(e1+e12)(-1+e13) =", {i: str(c) for i, c in enumerate(z) if c != 0})

    # Octonion-level products that decide the pair above.
    for (i, j) in ((1, 4), (4, 5), (5, 1), (5, 4), (1, 5)):
        p = cd_mul(basis(3, i), basis(3, j))
        (k, c), = [(k, c) for k, c in enumerate(p) if c != 0]
        print(f"  level3: e{i} e{j} = {'-' if c < 0 else '+'}e{k}")


if __name__ == "__main__":
    main()
