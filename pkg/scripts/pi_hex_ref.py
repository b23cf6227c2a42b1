"""Reference hexadecimal digits of pi from exact partial sums.

Sums the 16^-n series with Fraction arithmetic out to enough terms that the
tail is provably below the last digit requested, then extracts fractional hex
digits by repeated multiply-by-16 on the exact rational. No floating point.
"""

from fractions import Fraction

DIGITS = 72


def pi_fraction(terms):
    s = Fraction(0)
    for n in range(terms):
        s += Fraction(1, 16 ** n) * (
            Fraction(4, 8 * n + 1)
            - Fraction(2, 8 * n + 4)
            - Fraction(1, 8 * n + 5)
            - Fraction(1, 8 * n + 6)
        )
    return s


def main():
    # term n is bounded by 6/16^n, so stopping at n = DIGITS + 8 leaves a tail
    # below 16^-(DIGITS+7), far under one unit in the last digit printed
    s = pi_fraction(DIGITS + 8)
    frac = s - 3
    digits = []
    num, den = frac.numerator, frac.denominator
    for _ in range(DIGITS):
        num *= 16
        d, num = divmod(num, den)
        digits.append("0123456789ABCDEF"[d])
    print("pi = 3." + "".join(digits) + " (hex)")
    print("first fractional hex digits, indexed from 1:")
    for start in range(0, DIGITS, 24):
        chunk = digits[start:start + 24]
        print(f"  {start + 1:3d}..{start + len(chunk):3d}: {''.join(chunk)}")


if __name__ == "__main__":
    main()
