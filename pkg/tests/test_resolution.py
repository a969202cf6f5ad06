"""Minimal free resolutions of the residue field over the quotient rings."""

from momentkoszul.closed import froberg_product, hilbert_closed, roos_series
from momentkoszul.fields import GF
from momentkoszul.ideals import family
from momentkoszul.resolution import resolve_k_over_quotient
from momentkoszul.verify import table_poincare_totals

from helpers import series_coeffs_one_var


def test_gl1_residue_field_resolution():
    # k[p,q]/(pq): periodic resolution with two generators per step, linear
    t = resolve_k_over_quotient(family("gl", 1), 5, 6)
    assert t.totals() == [1, 2, 2, 2, 2, 2]
    for i in range(6):
        assert t.top(i) == i


def test_sl2_resolution_jump():
    t = resolve_k_over_quotient(family("sl", 2), 3, 5)
    assert t.top(0) == 0 and t.top(1) == 1 and t.top(2) == 2
    assert t.top(3) == 4
    # the jump happens in the two extreme bidegrees
    assert t.beta(3, (3, 1)) == 1
    assert t.beta(3, (1, 3)) == 1


def test_gl2_froberg_from_oracle_resolution():
    f = family("gl", 2)
    t = resolve_k_over_quotient(f, 5, 6)
    P = table_poincare_totals(t, 5)
    H = hilbert_closed(f, 5).collapse("u")
    assert froberg_product(P, H, 5).is_one()


def test_gl2_residue_field_totals_match_koszul_inverse():
    # A is Koszul, so the totals are the coefficients of 1/H(-u)
    t = resolve_k_over_quotient(family("gl", 2), 5, 6)
    h = hilbert_closed(family("gl", 2), 6).collapse("u")
    denom = [(-1) ** k * h.coefficient((k,)) for k in range(7)]
    expected = series_coeffs_one_var([1], denom, 5)
    assert t.totals() == expected == [1, 4, 10, 24, 58, 140]


def test_resolution_prime_field_agrees():
    a = resolve_k_over_quotient(family("sl", 2), 3, 5)
    b = resolve_k_over_quotient(family("sl", 2), 3, 5, fld=GF(32003))
    assert a.entries == b.entries


def test_roos_series_matches_oracle_resolution():
    table = resolve_k_over_quotient(family("sl", 2), 4, 6)
    series = roos_series("sl2", 12)
    grid = {}
    for (i, v), c in table.entries.items():
        key = (i, v[0] + v[1])
        grid[key] = grid.get(key, 0) + c
    for i in range(5):
        for j in range(7):
            assert grid.get((i, j), 0) == series.coefficient((j, i)), (i, j)
