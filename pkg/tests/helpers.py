"""Independent brute-force oracles used to derive expected test values.

Nothing here imports the package's linear algebra: ranks come from a plain
dense Gaussian elimination over Fraction, so the values frozen in the tests
are computed by a second route.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def brute_rank(rows) -> int:
    """Dense Gaussian elimination over exact rationals."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def brute_rref(rows):
    """Reduced row echelon form over Fraction (canonical, zero rows dropped)."""
    m = [[Fraction(x) for x in row] for row in rows]
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
    return [r for r in m[:row]]


def wedge_matrix_for_pair_form(n: int, i: int):
    """Dense matrix of multiplication by sum_j e_j f_j from degree i to i+2.

    Independent construction: generators indexed 0..2n-1 (e_j = j,
    f_j = n + j); the sign of x ^ (sorted monomial) counts the elements
    below x.
    """
    source = list(combinations(range(2 * n), i))
    target = list(combinations(range(2 * n), i + 2))
    tindex = {t: k for k, t in enumerate(target)}
    matrix = [[0] * len(source) for _ in target]
    for c, mono in enumerate(source):
        for j in range(n):
            if j in mono or n + j in mono:
                continue
            s1 = (-1) ** sum(1 for y in mono if y < n + j)
            m1 = tuple(sorted(mono + (n + j,)))
            s2 = (-1) ** sum(1 for y in m1 if y < j)
            m2 = tuple(sorted(m1 + (j,)))
            matrix[tindex[m2]][c] += s1 * s2
    return matrix


def series_coeffs_one_var(numer, denom, order):
    """Coefficients of numer(u)/denom(u) with integer lists, denom[0] = 1."""
    out = []
    for k in range(order + 1):
        acc = Fraction(numer[k] if k < len(numer) else 0)
        for j in range(1, k + 1):
            d = denom[j] if j < len(denom) else 0
            acc -= d * out[k - j]
        out.append(acc)
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]
