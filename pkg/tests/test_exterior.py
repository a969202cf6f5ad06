from math import comb

import pytest

from momentkoszul.exterior import (
    exterior_mult_rank,
    gl_ext_module_candidates,
    symmetric_identity_check,
)
from momentkoszul.fields import GF, QQ, InvalidFieldError
from momentkoszul.linalg import LinearMap

from helpers import brute_rank, wedge_matrix_for_pair_form


def test_rank_base_case():
    assert exterior_mult_rank(1, 0) == (1, True)


def test_rank_n2_bijective_middle():
    matrix = wedge_matrix_for_pair_form(2, 1)
    assert brute_rank(matrix) == 4
    assert exterior_mult_rank(2, 1) == (4, True)


def test_rank_n3_middle():
    matrix = wedge_matrix_for_pair_form(3, 2)
    assert brute_rank(matrix) == 15
    assert exterior_mult_rank(3, 2) == (15, True)


def test_rank_equals_api_level_dense_rank():
    from fractions import Fraction

    matrix = wedge_matrix_for_pair_form(2, 0)
    m = LinearMap(len(matrix), len(matrix[0]),
                  [[Fraction(x) for x in row] for row in matrix])
    assert m.rank() == exterior_mult_rank(2, 0)[0]


def test_maximal_rank_all_small_n_all_fields():
    for n in range(1, 5):
        for fld in (QQ, GF(3), GF(32003)):
            for i in range(0, 2 * n - 1):
                rank, maximal = exterior_mult_rank(n, i, fld)
                assert maximal, (n, i, str(fld))
                assert rank == min(comb(2 * n, i), comb(2 * n, i + 2))


def test_symmetric_identity_degenerate_case():
    # d = 0: both sides reduce to s_1(x) + s_1(y)
    assert symmetric_identity_check(1, 1, 0)


def test_symmetric_identity_example():
    assert symmetric_identity_check(2, 3, 2)


def test_symmetric_identity_sweep():
    for u in range(1, 5):
        for v in range(1, 5):
            for d in range(5):
                assert symmetric_identity_check(u, v, d, QQ), (u, v, d)
                assert symmetric_identity_check(u, v, d, GF(7)), (u, v, d)


def test_symmetric_identity_characteristic_guard():
    with pytest.raises(InvalidFieldError):
        symmetric_identity_check(2, 2, 3, GF(3))


def test_ext_module_candidate_resolution():
    # the full quadratic ideal matches the cohomology module; the diagonal
    # one falls short already in bidegree (1, 1)
    for n in (2, 3):
        data = gl_ext_module_candidates(n)
        assert data["full_matches"]
        assert not data["diagonal_matches"]
        assert data["first_diagonal_mismatch"][0] == (1, 1)
    both = gl_ext_module_candidates(1)
    assert both["full_matches"] and both["diagonal_matches"]


def test_middle_map_through_public_rank_op():
    from fractions import Fraction

    matrix = wedge_matrix_for_pair_form(2, 1)
    m = LinearMap(len(matrix), len(matrix[0]),
                  [[Fraction(x) for x in row] for row in matrix])
    assert m.rank() == 4
