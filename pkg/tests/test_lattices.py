"""Euclidean and Lorentzian lattices: builders, enumeration, reduction."""

from fractions import Fraction

import pytest

from exceptia import lattices as lat


E8 = lat.build_E8()


# --------------------------------------------------------------------------
# construction and basic predicates

def test_lattice_requires_independent_rows():
    with pytest.raises(lat.LatticeError):
        lat.Lattice(2, 2, ((1, 0), (2, 0)))


def test_lattice_rank_must_match_rows():
    with pytest.raises(lat.LatticeError):
        lat.Lattice(2, 1, ((1, 0), (0, 1)))


def test_row_length_must_match_ambient():
    with pytest.raises(lat.LatticeError):
        lat.Lattice(3, 1, ((1, 0),))


def test_negative_definite_lorentzian_spans_are_constructible_but_gated():
    # a timelike basis row is a legal coordinatization, but everything
    # Euclidean refuses to run on it
    l = lat.Lattice(2, 1, ((1, 0),), signature=lat.LORENTZIAN)
    assert not lat.is_positive_definite(l)
    with pytest.raises(lat.LatticeError):
        lat.short_vectors(l, 2)
    with pytest.raises(lat.LatticeError):
        lat.lll_reduce(l)


def test_form_dot_signatures():
    l = lat.Lattice(2, 1, ((0, 1),), signature=lat.LORENTZIAN)
    assert l.form_dot((1, 0), (1, 0)) == -1
    assert l.form_dot((0, 1), (0, 1)) == 1
    e = lat.Lattice(2, 1, ((0, 1),))
    assert e.form_dot((1, 0), (1, 0)) == 1


@pytest.mark.parametrize("n,det,roots", [(1, 2, 2), (2, 3, 6), (3, 4, 12),
                                         (4, 5, 20), (6, 7, 42)])
def test_An_series(n, det, roots):
    a = lat.build_An(n)
    assert a.rank == n
    assert lat.is_even(a)
    assert lat.gram_determinant(a) == det
    assert lat.short_vectors(a, 2) == {2: roots}


@pytest.mark.parametrize("n,roots", [(3, 12), (4, 24), (5, 40), (8, 112)])
def test_Dn_series(n, roots):
    d = lat.build_Dn(n)
    assert d.rank == n
    assert lat.is_even(d)
    assert lat.gram_determinant(d) == 4
    assert lat.short_vectors(d, 2) == {2: roots}


def test_series_builders_validate_n():
    with pytest.raises(lat.LatticeError):
        lat.build_An(0)
    with pytest.raises(lat.LatticeError):
        lat.build_Dn(1)


def test_E8_is_even_unimodular_with_240_roots():
    assert E8.rank == 8
    assert lat.is_even(E8)
    assert lat.is_unimodular(E8)
    assert lat.short_vectors(E8, 2) == {2: 240}


def test_E7_E6_complements():
    e7 = lat.build_E7(E8)
    assert e7.rank == 7
    assert lat.gram_determinant(e7) == 2
    assert lat.short_vectors(e7, 2) == {2: 126}
    e6 = lat.build_E6(E8)
    assert e6.rank == 6
    assert lat.gram_determinant(e6) == 3
    assert lat.short_vectors(e6, 2) == {2: 72}


def test_D16plus_is_even_unimodular_with_480_roots():
    d = lat.build_D16plus()
    assert d.rank == 16
    assert lat.is_even(d)
    assert lat.is_unimodular(d)
    assert lat.short_vectors(d, 2) == {2: 480}


def test_integrality_flags():
    assert lat.is_integral(E8)
    dual_a2 = lat.dual_lattice(lat.build_An(2))
    assert not lat.is_integral(dual_a2)
    assert not lat.is_even(dual_a2)


# --------------------------------------------------------------------------
# duality, containment

def test_E8_is_self_dual():
    assert lat.same_lattice(lat.dual_lattice(E8), E8)


def test_dual_of_dual_returns_home():
    for l in (lat.build_An(3), lat.build_Dn(4), lat.build_E6(E8)):
        assert lat.same_lattice(lat.dual_lattice(lat.dual_lattice(l)), l)


def test_dual_determinant_inverts():
    a3 = lat.build_An(3)
    assert lat.gram_determinant(lat.dual_lattice(a3)) == Fraction(1, 4)


def test_D8_sits_inside_E8():
    d8 = lat.build_Dn(8)
    assert d8.ambient_dim == E8.ambient_dim
    assert lat.sublattice_of(d8, E8)
    assert not lat.sublattice_of(E8, d8)


def test_lattice_contains_handles_non_members():
    assert lat.lattice_contains(E8, (1, 1, 0, 0, 0, 0, 0, 0))
    assert lat.lattice_contains(E8, (Fraction(1, 2),) * 8)
    assert not lat.lattice_contains(E8, (1, 0, 0, 0, 0, 0, 0, 0))
    assert not lat.lattice_contains(E8, (Fraction(1, 3),) * 8)


def test_same_lattice_distinguishes_scalings():
    a1 = lat.build_An(1)
    doubled = lat.Lattice(2, 1, tuple(tuple(2 * x for x in row)
                                      for row in a1.basis))
    assert not lat.same_lattice(a1, doubled)


# --------------------------------------------------------------------------
# direct sums and theta series

def test_direct_sum_shapes():
    s = lat.direct_sum(E8, E8, E8)
    assert s.rank == 24
    assert s.ambient_dim == 24
    assert lat.is_even(s) and lat.is_unimodular(s)
    assert len(s.summands) == 3


def test_theta_E8_matches_the_eisenstein_expansion():
    th = lat.theta_series(E8, 4)
    assert th.counts == (1, 240, 2160, 6720, 17520)


def test_theta_of_sums_is_the_product_of_thetas():
    a1 = lat.build_An(1)
    square = lat.direct_sum(a1, a1)
    th = lat.theta_series(square, 3)
    single = lat.theta_series(a1, 3)
    assert th == lat.theta_product(single, single)
    # convolution path agrees with direct enumeration of the same lattice
    plain = lat.Lattice(square.ambient_dim, square.rank, square.basis)
    assert lat.theta_series(plain, 3) == th


def test_theta_3E8_prefix():
    s = lat.direct_sum(E8, E8, E8)
    th = lat.theta_series(s, 2)
    assert th.counts == (1, 720, 179280)


@pytest.mark.slow
def test_theta_3E8_against_flat_enumeration():
    s = lat.direct_sum(E8, E8, E8)
    plain = lat.Lattice(s.ambient_dim, s.rank, s.basis)
    assert lat.theta_series(plain, 2) == lat.theta_series(s, 2)


def test_theta_D16plus_agrees_with_E8_squared():
    d16 = lat.build_D16plus()
    th = lat.theta_series(d16, 2)
    e8sq = lat.theta_product(lat.theta_series(E8, 2), lat.theta_series(E8, 2))
    assert th == e8sq == lat.ThetaSeries(2, (1, 480, 61920))


def test_theta_series_validates_order():
    with pytest.raises(lat.LatticeError):
        lat.theta_series(E8, -1)
    with pytest.raises(lat.LatticeError):
        lat.ThetaSeries(2, (1, 240))
    with pytest.raises(lat.LatticeError):
        lat.ThetaSeries(1, (1, 239))  # odd count cannot happen


def test_short_vector_listing_is_sorted_and_signed():
    a2 = lat.build_An(2)
    entries = lat.short_vector_list(a2, 2)
    assert len(entries) == 6
    assert sorted(entries) == entries
    for norm, v in entries:
        assert norm == 2
        assert a2.form_dot(v, v) == 2
        assert (norm, tuple(-x for x in v)) in entries


def test_short_vectors_gates():
    odd = lat.Lattice(1, 1, ((1,),))
    with pytest.raises(lat.LatticeError):
        lat.short_vectors(odd, 2)
    with pytest.raises(lat.LatticeError):
        lat.short_vectors(lat.build_An(2), -1)


def test_enumeration_agrees_across_thread_counts(monkeypatch):
    monkeypatch.setenv("EXCEPTIA_THREADS", "1")
    serial = lat.short_vectors(E8, 4)
    monkeypatch.setenv("EXCEPTIA_THREADS", "2")
    parallel = lat.short_vectors(E8, 4)
    assert serial == parallel == {2: 240, 4: 2160}


def test_thread_env_validation(monkeypatch):
    monkeypatch.setenv("EXCEPTIA_THREADS", "0")
    with pytest.raises(lat.LatticeError):
        lat.short_vectors(E8, 2)
    monkeypatch.setenv("EXCEPTIA_THREADS", "soon")
    with pytest.raises(lat.LatticeError):
        lat.short_vectors(E8, 2)


# --------------------------------------------------------------------------
# reduction

def test_lll_preserves_the_lattice():
    for l in (lat.build_An(4), lat.build_E6(E8), E8):
        r = lat.lll_reduce(l)
        assert lat.same_lattice(r, l)
        assert lat.gram_determinant(r) == lat.gram_determinant(l)
        assert lat.short_vectors(r, 4) == lat.short_vectors(l, 4)


def test_lll_delta_validation():
    with pytest.raises(lat.LatticeError):
        lat.lll_reduce(E8, delta=Fraction(1, 4))
    with pytest.raises(lat.LatticeError):
        lat.lll_reduce(E8, delta=Fraction(101, 100))


def test_lll_improves_a_skewed_basis():
    skew = lat.Lattice(2, 2, ((1, 0), (10**6, 1)))
    r = lat.lll_reduce(skew)
    assert lat.same_lattice(r, skew)
    assert max(r.gram[i][i] for i in range(2)) <= 2


# --------------------------------------------------------------------------
# the Lorentzian side

def test_lorentzian_vector_classes():
    v = lat.LorentzianVector.from_coords((1, 2, 3) + (0,) * 7)
    assert v.parity == lat.PARITY_INTEGER
    h = lat.LorentzianVector.from_coords((Fraction(1, 2),) * 9
                                         + (Fraction(-1, 2),))
    assert h.parity == lat.PARITY_HALF
    assert h.coords[0] == Fraction(1, 2)


def test_lorentzian_vector_rejects_bad_classes():
    with pytest.raises(lat.LatticeError):
        lat.LorentzianVector.from_coords((Fraction(1, 2),) + (0,) * 9)
    with pytest.raises(lat.LatticeError):
        lat.LorentzianVector.from_coords((Fraction(1, 4),) + (0,) * 9)
    with pytest.raises(lat.LatticeError):
        # odd coordinate sum
        lat.LorentzianVector.from_coords((1,) + (0,) * 9)


def test_ii_membership():
    assert lat.ii_member((2, 1, 1) + (0,) * 7)
    assert lat.ii_member((1, 0, 0, 0, 0, 0, 0, 0, 0, 1))
    assert not lat.ii_member((1, 0, 0, 0, 0, 0, 0, 0, 0, 0))
    assert not lat.ii_member((Fraction(1, 2),) * 10)       # sum 5, odd
    assert not lat.ii_member((Fraction(1, 2),) + (0,) * 9)  # mixed classes
    with pytest.raises(lat.LatticeError):
        lat.ii_member((1, 2, 3))


def test_weyl_vectors_and_their_norms():
    by_dim = {10: -580, 18: -620, 26: 0}
    for dim, norm in by_dim.items():
        w = lat.weyl_vector(dim)
        assert w.dim == dim
        assert lat.ii_member(w.coords)
        assert lat.minkowski_dot(w, w) == norm
    with pytest.raises(lat.LatticeError):
        lat.weyl_vector(12)


def test_fundamental_roots_next_to_the_weyl_vector():
    # spatial coordinate swaps (0, ..., 1, -1, ...) are simple roots
    for dim in (10, 18, 26):
        coords = [0] * dim
        coords[1], coords[2] = 1, -1
        r = lat.LorentzianVector.from_coords(coords)
        assert lat.is_fundamental_root(r, dim)
        coords2 = [0] * dim
        coords2[1], coords2[2] = 1, 1
        r2 = lat.LorentzianVector.from_coords(coords2)
        assert not lat.is_fundamental_root(r2, dim)


def test_fundamental_root_dimension_gate():
    coords = [0] * 10
    coords[1], coords[2] = 1, -1
    r = lat.LorentzianVector.from_coords(coords)
    with pytest.raises(lat.LatticeError):
        lat.is_fundamental_root(r, 18)
    with pytest.raises(lat.LatticeError):
        lat.is_fundamental_root(r, 12)


def test_minkowski_dot_dimension_gate():
    with pytest.raises(lat.LatticeError):
        lat.minkowski_dot(lat.weyl_vector(10), lat.weyl_vector(18))


# --------------------------------------------------------------------------
# the two rank-24 constructions

def test_leech_from_ii26_shape():
    leech = lat.leech_from_ii26()
    assert leech.rank == 24
    assert leech.ambient_dim == 26
    assert leech.signature == lat.LORENTZIAN
    assert lat.is_positive_definite(leech)
    assert lat.is_even(leech)
    assert lat.is_unimodular(leech)
    assert lat.short_vectors(leech, 2) == {}


def test_icosian_E8_matches_the_coordinate_one():
    flat = lat.build_E8_from_icosians()
    assert flat.rank == 8
    assert lat.is_even(flat) and lat.is_unimodular(flat)
    assert lat.theta_series(flat, 2) == lat.theta_series(E8, 2)


def test_icosian_leech_attempt_reports_both_conventions():
    with pytest.raises(lat.LatticeConstructionError) as exc:
        lat.leech_from_icosians()
    err = exc.value
    assert "right" in str(err) and "left" in str(err)
    # the right-convention triple lattice sits at minimal norm 3/2, the
    # left one at 1; neither rescales to an even unimodular Gram
    assert "minimal norm 3/2 -> 4" in err.details["right"]
    assert "minimal norm 1 -> 4" in err.details["left"]
    assert len(err.raw_gram) == 24
    assert len(err.raw_gram_left) == 24


# --------------------------------------------------------------------------
# names, formatting, parsing

def test_named_lattice_resolves_everything():
    for name, rank in [("A1", 1), ("A9", 9), ("D4", 4), ("E6", 6), ("E7", 7),
                       ("E8", 8), ("D16+", 16), ("3E8", 24), ("E8+D16+", 24),
                       ("LeechII", 24)]:
        assert lat.named_lattice(name).rank == rank


def test_named_lattice_rejects_unknown_names():
    for bad in ("E9", "A0", "Leech", "", "A", "Dx"):
        with pytest.raises(lat.LatticeError):
            lat.named_lattice(bad)


def test_icosian_name_propagates_the_construction_error():
    with pytest.raises(lat.LatticeConstructionError):
        lat.named_lattice("LeechIcosian")


def test_lattice_info_summary():
    info = lat.lattice_info(E8)
    assert info == {"rank": 8, "even": True, "unimodular": True,
                    "min_norm": 2, "kissing": 240}


def test_lattice_info_on_an_odd_lattice():
    z1 = lat.Lattice(1, 1, ((1,),))
    info = lat.lattice_info(z1)
    assert info["even"] is False
    assert info["min_norm"] is None and info["kissing"] is None


def test_format_parse_roundtrip():
    for l in (E8, lat.dual_lattice(lat.build_An(2)), lat.build_D16plus()):
        again = lat.parse_lattice(lat.format_lattice(l))
        assert again.basis == l.basis
        assert again.signature == l.signature


def test_parse_lattice_rejects_malformed_text():
    with pytest.raises(lat.LatticeError):
        lat.parse_lattice("")
    with pytest.raises(lat.LatticeError):
        lat.parse_lattice("2 2 euclidean\n1 0\n")
    with pytest.raises(lat.LatticeError):
        lat.parse_lattice("1 2 euclidean\n1\n")
    with pytest.raises(lat.LatticeError):
        lat.parse_lattice("1 2 hyperbolic\n1 0\n")
