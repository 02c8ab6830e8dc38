import itertools
import random

import pytest

from jacring.cohomology import Coordinates
from jacring.errors import IndexOutOfRange
from jacring.exactla import ExactMatrix
from jacring.higgs import apply_theta, block_report


def test_shape(theta):
    assert len(theta) == 9
    for m in theta.mats:
        assert (m.rows, m.cols) == (20, 20)
    with pytest.raises(IndexOutOfRange):
        theta[0]
    with pytest.raises(IndexOutOfRange):
        theta[10]


def test_first_row_is_unit_vector(theta):
    # row 1 is the image of 1, i.e. e_j itself
    for j in range(1, 10):
        assert theta[j].row(0) == [1 if k == j else 0 for k in range(20)]


def test_last_row_is_zero(theta):
    for j in range(1, 10):
        assert not any(theta[j].row(19))


def test_commutators_vanish(theta):
    for a, b in itertools.combinations(range(1, 10), 2):
        assert theta[a] @ theta[b] == theta[b] @ theta[a]


def test_nilpotent(theta):
    zero = ExactMatrix.zeros(20, 20)
    for a, b, c, d in itertools.product(range(1, 10), repeat=4):
        if a <= b <= c <= d:
            assert theta[a] @ theta[b] @ theta[c] @ theta[d] == zero


def test_grading_shift(theta):
    deg = [theta.basis.degree_of(k) for k in range(20)]
    for m in theta.mats:
        for r in range(20):
            for c in range(20):
                if m.data[r][c]:
                    assert deg[c] == deg[r] + 1


def test_matrix_path_matches_polynomial_path(jr, basis, theta):
    coords = Coordinates(jr, basis)
    e = [coords.r1(i) for i in range(9)]
    rng = random.Random(7)
    for _ in range(200):
        i, j, k = (rng.randint(1, 9) for _ in range(3))
        via_matrix = apply_theta(theta, k, coords(e[i - 1] * e[j - 1]))
        assert via_matrix == coords(e[i - 1] * e[j - 1] * e[k - 1])
        assert apply_theta(theta, j, theta[i].row(0)) == coords(e[i - 1] * e[j - 1])


def test_block_report(theta):
    text = block_report(theta)
    assert len(text.splitlines()) == 9
    assert "R0->R1" in text and "R2->R3" in text


def test_json_shape(theta):
    d = theta.to_json()
    assert len(d["mats"]) == 9 and d["mats"][0]["rows"] == 20
