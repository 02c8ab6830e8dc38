import itertools
import random

import pytest

from jacring.cohomology import (
    EXPECTED_DIMS,
    TOP_CLASS,
    Coordinates,
    GradedBasis,
    bidegree,
    build_jacobian_ring,
    compute_graded_basis,
    is_h_invariant,
    poly2vec,
)
from jacring.errors import ResidueOffBasis
from jacring.matrixgen import GenConfig, generate_matrix
from jacring.scalar import Field


def test_h_invariance_examples():
    z = [0] * 12
    assert is_h_invariant(tuple(z))
    assert not is_h_invariant(tuple([1] + z[1:]))
    assert is_h_invariant(tuple([1] * 8 + [0] * 4))
    assert is_h_invariant(tuple([2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]))
    assert not is_h_invariant(tuple([1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]))
    # y exponents do not matter
    assert is_h_invariant(tuple([0] * 8 + [3, 1, 4, 1]))


def test_h_invariance_is_multiplicative():
    small = [m + (0, 0, 0, 0) for m in itertools.product(range(3), repeat=8) if sum(m) <= 4]
    inv = [m for m in small if is_h_invariant(m)]
    rng = random.Random(0)
    for a, b in (rng.sample(inv, 2) for _ in range(3000)):
        assert is_h_invariant(tuple(x + y for x, y in zip(a, b)))


def test_dimensions(basis, oracle):
    assert basis.dims == EXPECTED_DIMS == tuple(oracle["dims"])
    assert basis.total_dim == 20
    assert basis.components[3] == [TOP_CLASS] and list(TOP_CLASS) == oracle["top_class"]
    for p, comp in enumerate(basis.components):
        for m in comp:
            assert bidegree(m) == (2 * p, p) and is_h_invariant(m)


def test_computed_top_class_matches(jr, basis):
    full = compute_graded_basis(jr, compute_top=True)
    assert full.components == basis.components


def test_parallel_scan_matches(jr, basis):
    assert compute_graded_basis(jr, workers=2).components == basis.components


def test_low_degree_basis_shape(basis):
    # R_1 is x5^2, x6^2, x7^2 times y2, y3, y4; y1 never appears
    xs = {m[:8] for m in basis.components[1]}
    assert len(xs) == 3 and all(sum(x[5:]) == 2 for x in xs)
    assert all(m[8] == 0 for c in basis.components for m in c)


def test_unit_vectors(jr, basis):
    coords = Coordinates(jr, basis)
    for k in range(basis.total_dim):
        v = coords(coords.element(k))
        assert v == [1 if i == k else 0 for i in range(20)]


def test_products_land_in_the_right_block(jr, basis):
    coords = Coordinates(jr, basis)
    e = [coords.r1(i) for i in range(9)]
    for i in range(9):
        for j in range(i, 9):
            v = coords(e[i] * e[j])
            assert not any(v[:10]) and not v[19]
    rng = random.Random(1)
    for _ in range(40):
        i, j, k = (rng.randrange(9) for _ in range(3))
        v = coords(e[i] * e[j] * e[k])
        assert not any(v[:19])


def test_linearity(jr, basis):
    coords = Coordinates(jr, basis)
    rng = random.Random(2)
    e = [coords.r1(i) for i in range(9)]
    for _ in range(20):
        i, j, k, l = (rng.randrange(9) for _ in range(4))
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        f, g = e[i] * e[j], e[k] * e[l]
        lhs = coords(a * f + b * g)
        rhs = [a * x + b * y for x, y in zip(coords(f), coords(g))]
        assert lhs == rhs


def test_off_basis_residue(jr, basis):
    # x0 alone is not invariant, so its residue has no coordinates
    with pytest.raises(ResidueOffBasis):
        poly2vec(jr.x(0), jr, basis)


def test_json_round_trip(basis):
    assert GradedBasis.from_json(basis.to_json()).components == basis.components


def test_random_matrix_mod_p():
    A = generate_matrix(GenConfig("random", seed=3, field=Field(modulus=32003)))
    jr = build_jacobian_ring(A)
    basis = compute_graded_basis(jr, compute_top=True)
    assert basis.dims == EXPECTED_DIMS
