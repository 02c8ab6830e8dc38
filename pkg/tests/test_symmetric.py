import random

import pytest

from jacring.errors import IndexOutOfRange
from jacring.exactla import Subspace
from jacring.symmetric import (
    Symm2Action,
    grading_of_basis,
    indexer,
    pos_of_pair,
    pos_of_triple,
    symm2_graded_indices,
    symm2_graded_subspace,
    symm2_im_theta,
    tuple_of_pos,
)


@pytest.mark.parametrize("n,d,size", [(9, 2, 45), (9, 3, 165), (20, 2, 210)])
def test_bijection(n, d, size):
    idx = indexer(n, d)
    assert idx.size == size
    for pos in range(1, size + 1):
        t = tuple_of_pos(idx, pos)
        assert list(t) == sorted(t)
        assert idx.pos_of(*t) == pos


def test_known_positions():
    p2, p3, s20 = indexer(9, 2), indexer(9, 3), indexer(20, 2)
    assert pos_of_pair(p2, 1, 1) == 1
    assert pos_of_pair(p2, 1, 9) == 9
    assert tuple_of_pos(p2, 10) == (2, 2)
    assert pos_of_pair(p2, 9, 9) == 45
    assert pos_of_triple(p3, 1, 1, 1) == 1
    assert pos_of_triple(p3, 9, 9, 9) == 165
    assert pos_of_pair(s20, 20, 20) == 210
    assert tuple_of_pos(s20, 21) == (2, 2)


def test_permutation_symmetry():
    rng = random.Random(0)
    for _ in range(1000):
        n, d = rng.choice([(9, 2), (9, 3), (20, 2)])
        t = [rng.randint(1, n) for _ in range(d)]
        s = t[:]
        rng.shuffle(s)
        assert indexer(n, d).pos_of(*t) == indexer(n, d).pos_of(*s)


def test_out_of_range():
    with pytest.raises(IndexOutOfRange):
        indexer(9, 2).pos_of(0, 3)
    with pytest.raises(IndexOutOfRange):
        indexer(9, 3).pos_of(1, 2, 10)
    with pytest.raises(IndexOutOfRange):
        indexer(20, 2).tuple_of(211)
    with pytest.raises(ValueError):
        pos_of_triple(indexer(9, 2), 1, 2, 3)


def reference_degree_pairs(p):
    # the graded pieces of S^2 of a ring with grading 0 | 1..9 | 10..18 | 19, case by case
    r = {0: [1], 1: list(range(2, 11)), 2: list(range(11, 20)), 3: [20]}
    pairs = []
    for a in range(4):
        b = p - a
        if a <= b and b in r:
            for i in r[a]:
                for j in r[b]:
                    if a < b or i <= j:
                        pairs.append((i, j))
    return sorted(indexer(20, 2).pos_of(i, j) for i, j in pairs)


def test_graded_indices():
    sizes = [len(symm2_graded_indices(p)) for p in range(7)]
    assert sizes == [1, 9, 9 + 45, 1 + 81, 9 + 45, 9, 1]
    assert sum(sizes) == 210
    seen = set()
    for p in range(7):
        ids = symm2_graded_indices(p)
        assert ids == reference_degree_pairs(p)
        assert not seen & set(ids)
        seen |= set(ids)
    with pytest.raises(IndexOutOfRange):
        symm2_graded_indices(7)


def test_grading_of_basis():
    assert grading_of_basis((1, 9, 9, 1)) == [0] + [1] * 9 + [2] * 9 + [3]


def tensor_oracle(theta, th, i, j):
    """mu(b_i b_j) computed in the full tensor square.

    b_i b_j is sent to b_i(x)b_j + b_j(x)b_i, acted on by mu(x)1 + 1(x)mu, and the
    symmetric result is read back: T_ab for a < b, T_aa / 2 on the diagonal.
    """
    n = theta.basis.total_dim
    m = theta[th].data
    f = theta.field
    T = {}
    for a, b in ((i, j), (j, i)):
        for k in range(1, n + 1):
            for key, c in (((k, b), m[a - 1][k - 1]), ((a, k), m[b - 1][k - 1])):
                if c:
                    T[key] = f.add(T.get(key, f.zero), c)
    idx = indexer(n, 2)
    out = [f.zero] * idx.size
    half = f.inv(f.coerce(2))
    for (a, b), c in T.items():
        if a < b:
            out[idx.pos_of(a, b) - 1] = c
        elif a == b:
            out[idx.pos_of(a, a) - 1] = f.mul(c, half)
    return out


def test_derivation_against_tensor_oracle(theta):
    rng = random.Random(5)
    n = theta.basis.total_dim
    idx = indexer(n, 2)
    for _ in range(60):
        th = rng.randint(1, 9)
        i, j = sorted((rng.randint(1, n), rng.randint(1, n)))
        ours = symm2_im_theta(theta, th, idx.pos_of(i, j))
        assert ours == tensor_oracle(theta, th, i, j)
        assert ours == symm2_im_theta(theta, th, idx.pos_of(j, i))


def test_graded_images(theta):
    action = Symm2Action(theta)
    dims = theta.basis.dims
    for p in range(7):
        img = action.image(symm2_graded_subspace(p, dims))
        if p == 6:
            assert img.dimension == 0
        else:
            assert img.issubspace(symm2_graded_subspace(p + 1, dims))
    assert isinstance(img, Subspace)
