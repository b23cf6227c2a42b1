"""Integer matrix routines: HNF, kernels, exact solving."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exceptia import intlinalg as la


def det_int(m):
    return la.det_fraction([[Fraction(x) for x in row] for row in m])


small_mats = st.lists(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3),
    min_size=3, max_size=3)


@given(small_mats)
@settings(max_examples=60)
def test_hnf_transform_is_unimodular(a):
    h, u = la.hnf_transform(a)
    assert abs(det_int(u)) == 1
    assert la.matmul(u, a) == h


@given(small_mats)
@settings(max_examples=60)
def test_hnf_rows_are_staircase(a):
    h = la.hnf(a)
    pivots = []
    for row in h:
        nz = [j for j, x in enumerate(row) if x]
        pivots.append(nz[0] if nz else None)
    # nonzero rows first, pivot columns strictly increasing
    seen_zero = False
    prev = -1
    for p in pivots:
        if p is None:
            seen_zero = True
            continue
        assert not seen_zero
        assert p > prev
        prev = p


@given(small_mats)
@settings(max_examples=60)
def test_left_kernel_annihilates(a):
    k = la.left_kernel(a)
    for row in k:
        assert all(x == 0 for x in la.matmul([row], a)[0])


def test_left_kernel_finds_known_relation():
    a = [[1, 2], [2, 4], [0, 1]]
    k = la.left_kernel(a)
    assert len(k) == 1
    r = k[0]
    assert r[0] * 1 + r[1] * 2 + r[2] * 0 == 0
    assert r[0] * 2 + r[1] * 4 + r[2] * 1 == 0


def test_solve_left_roundtrip():
    rng = random.Random(89)
    a = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(3)]
    x = [rng.randint(-7, 7) for _ in range(3)]
    t = la.matmul([x], a)[0]
    sol = la.solve_left(a, t)
    assert sol is not None
    assert la.matmul([sol], a)[0] == t


def test_solve_left_detects_unsolvable():
    assert la.solve_left([[2, 0], [0, 2]], [1, 0]) is None


def test_det_and_inverse():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert la.det_fraction(m) == 1
    inv = la.invert_fraction(m)
    assert la.matmul(m, inv) == [[1, 0], [0, 1]]


def test_invert_singular_raises():
    with pytest.raises(ZeroDivisionError):
        la.invert_fraction([[Fraction(1), Fraction(2)],
                            [Fraction(2), Fraction(4)]])
