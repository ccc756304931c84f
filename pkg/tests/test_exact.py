import random
from fractions import Fraction

import pytest

from ncdp.errors import BadPrime, NonIntegral, NonUnique, NoSolution
from ncdp.exact import (
    ExactMatrix,
    RowSpace,
    det_rational,
    rank_modp,
    rank_rational,
    solve_unique_integer,
)


def mat(rows):
    return ExactMatrix.from_rows(rows)


def naive_rank(rows):
    """Independent oracle: plain fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[piv], rows[rank] = rows[rank], rows[piv]
        pivval = rows[rank][col]
        rows[rank] = [x / pivval for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_rank_empty_and_identity():
    assert rank_rational(ExactMatrix(0, 0, ())) == 0
    assert rank_rational(ExactMatrix.identity(3)) == 3


def test_rank_proportional_rows():
    assert rank_rational(mat([[1, 2], [2, 4]])) == 1


def test_rank_rational_entries():
    m = mat([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank_rational(m) == naive_rank(m.to_rows())


def test_solve_identity():
    assert solve_unique_integer(ExactMatrix.identity(2), [3, -3]) == [3, -3]


def test_solve_inconsistent():
    with pytest.raises(NoSolution):
        solve_unique_integer(mat([[1], [2]]), [1, 3])


def test_solve_non_integral():
    with pytest.raises(NonIntegral):
        solve_unique_integer(mat([[2]]), [1])


def test_solve_non_unique():
    with pytest.raises(NonUnique):
        solve_unique_integer(mat([[1, 1], [2, 2]]), [1, 2])


def test_rank_modp_basic():
    assert rank_modp(ExactMatrix.identity(3), 5) == 3
    assert rank_modp(mat([[5]]), 5) == 0
    assert rank_modp(mat([[1, 2], [2, 4]]), 7) == 1


def test_rank_modp_bad_prime():
    with pytest.raises(BadPrime):
        rank_modp(mat([[Fraction(1, 5)]]), 5)
    with pytest.raises(BadPrime):
        rank_modp(mat([[1]]), 6)


def test_det_small():
    assert det_rational(mat([[2, 0], [0, 3]])) == 6
    assert det_rational(mat([[1, 2], [2, 4]])) == 0
    assert det_rational(mat([[0, 1], [1, 0]])) == -1
    assert det_rational(mat([[Fraction(1, 2), 0], [7, Fraction(2, 3)]])) == Fraction(1, 3)


def random_matrix(rng, nrows, ncols, scale=6):
    return [
        [Fraction(rng.randint(-scale, scale), rng.randint(1, 4)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def test_rank_properties_randomized():
    rng = random.Random(0)
    for _ in range(300):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        rows = random_matrix(rng, nrows, ncols)
        m = mat(rows)
        r = rank_rational(m)
        assert r == naive_rank(rows)
        assert r == rank_rational(m.transpose())
        perm_rows = rows[:]
        rng.shuffle(perm_rows)
        cols = list(range(ncols))
        rng.shuffle(cols)
        permuted = [[row[c] for c in cols] for row in perm_rows]
        assert rank_rational(mat(permuted)) == r


def test_rank_modp_never_exceeds_rational():
    rng = random.Random(1)
    for _ in range(200):
        rows = [
            [Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, 4))]
            for _ in range(rng.randint(1, 4))
        ]
        rows = [r + [Fraction(0)] * (max(len(x) for x in rows) - len(r)) for r in rows]
        m = mat(rows)
        r = rank_rational(m)
        for p in (2, 3, 5, 7):
            assert rank_modp(m, p) <= r


def test_solve_residual_randomized():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 4)
        # build a unimodular-ish integer matrix so solutions stay integral
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        m = mat(rows)
        x = [rng.randint(-5, 5) for _ in range(n)]
        rhs = m.mul_vector(x)
        try:
            sol = solve_unique_integer(m, rhs)
        except NonUnique:
            assert naive_rank(rows) < n
            continue
        assert m.mul_vector(sol) == rhs


def test_rowspace_matches_rank():
    rng = random.Random(3)
    for _ in range(100):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        rows = random_matrix(rng, nrows, ncols, scale=4)
        rs = RowSpace(ncols)
        for r in rows:
            rs.add(r)
        assert rs.dim() == naive_rank(rows)
        # every original row must reduce to zero
        for r in rows:
            assert all(x == 0 for x in rs.reduce(r))


def test_rowspace_modp():
    rs = RowSpace(2, p=5)
    assert rs.add([5, 1])
    assert rs.add([1, 0])
    assert rs.dim() == 2
    assert not rs.add([3, 4])
