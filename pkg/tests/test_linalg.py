import itertools
import random
from functools import reduce

import pytest

from drinfeld_charpoly.linalg import (
    MatrixShapeError,
    RingMatrix,
    berkowitz_charpoly,
    identity,
    mat_mul,
    mat_poly_eval,
    permute,
    product_chain,
    transpose,
    zero_matrix,
)
from drinfeld_charpoly.wk_ring import WkRing


def random_matrix(ring: WkRing, rng: random.Random, rows: int, cols: int) -> RingMatrix:
    tower = ring.tower
    return RingMatrix.from_rows(ring, [
        [ring.reduce(tuple(tower.random_element(rng) for _ in range(ring.k))) for _ in range(cols)]
        for _ in range(rows)
    ])


def _zpoly_mul(ring, f, g):
    out = [ring.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return out


def _zpoly_add(ring, f, g):
    size = max(len(f), len(g))
    f = list(f) + [ring.zero] * (size - len(f))
    g = list(g) + [ring.zero] * (size - len(g))
    return [ring.add(a, b) for a, b in zip(f, g)]


def _sign(perm) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def leibniz_charpoly(m: RingMatrix):
    """det(Z I - M) over ring[Z] by the permutation expansion."""
    ring = m.ring
    size = m.rows
    entry = [
        [[ring.neg(m[i, j]), ring.one] if i == j else [ring.neg(m[i, j])] for j in range(size)]
        for i in range(size)
    ]
    total = [ring.zero]
    for perm in itertools.permutations(range(size)):
        term = reduce(lambda acc, i: _zpoly_mul(ring, acc, entry[i][perm[i]]), range(size), [ring.one])
        if _sign(perm) < 0:
            term = [ring.neg(c) for c in term]
        total = _zpoly_add(ring, total, term)
    return total


class TestMatrixProducts:
    def test_associativity(self, f8_module, rng) -> None:
        ring = WkRing.for_module(f8_module, 2)
        for _ in range(5):
            a, b, c = (random_matrix(ring, rng, 3, 3) for _ in range(3))
            assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))

    def test_product_chain_matches_fold(self, example1_module, rng) -> None:
        ring = WkRing.for_module(example1_module, 2)
        matrices = [random_matrix(ring, rng, 3, 3) for _ in range(6)]
        folded = matrices[0]
        for m in matrices[1:]:
            folded = mat_mul(m, folded)
        assert product_chain(matrices) == folded

    def test_identity_and_transpose(self, f8_module, rng) -> None:
        ring = WkRing.for_module(f8_module, 1)
        a = random_matrix(ring, rng, 2, 3)
        assert mat_mul(identity(ring, 2), a) == a
        assert transpose(transpose(a)) == a

    def test_shape_errors(self, f8_module, rng) -> None:
        ring = WkRing.for_module(f8_module, 1)
        a = random_matrix(ring, rng, 2, 3)
        with pytest.raises(MatrixShapeError):
            mat_mul(a, a)
        with pytest.raises(MatrixShapeError):
            product_chain([])
        with pytest.raises(MatrixShapeError):
            RingMatrix.from_rows(ring, [[ring.one], [ring.one, ring.zero]])
        with pytest.raises(MatrixShapeError):
            berkowitz_charpoly(a)

    def test_ring_mismatch(self, f8_module) -> None:
        one = identity(WkRing.for_module(f8_module, 1), 2)
        two = identity(WkRing.for_module(f8_module, 2), 2)
        with pytest.raises(MatrixShapeError):
            mat_mul(one, two)


class TestBerkowitz:
    def test_worked_example_matrix(self, f8_tower) -> None:
        ring = f8_tower
        el = f8_tower.element
        rows = [
            [el([1]), el([0, 1]), el([1, 1]), el([1])],
            [el([1, 0, 1]), el([1, 0, 1]), el([0, 1, 1]), el([1])],
            [el([1, 0, 1]), el([1, 1, 1]), el([0, 0, 1]), el([0, 0, 1])],
            [el([1]), ring.zero, ring.zero, ring.zero],
        ]
        coefficients = berkowitz_charpoly(RingMatrix.from_rows(ring, rows))
        # Z^4 + (t + 1) Z^2 + (t + 1) Z
        assert coefficients == [ring.zero, el([1, 1]), el([1, 1]), ring.zero, ring.one]

    def test_matches_leibniz(self, example1_module, rng) -> None:
        ring = WkRing.for_module(example1_module, 2)
        for size in (1, 2, 3, 4):
            for _ in range(10):
                m = random_matrix(ring, rng, size, size)
                assert berkowitz_charpoly(m) == leibniz_charpoly(m)

    @pytest.mark.parametrize("k,size", [(1, 4), (2, 3), (3, 2), (3, 4)])
    def test_cayley_hamilton(self, f8_module, rng, k, size) -> None:
        ring = WkRing.for_module(f8_module, k)
        for _ in range(25):
            m = random_matrix(ring, rng, size, size)
            assert mat_poly_eval(berkowitz_charpoly(m), m) == zero_matrix(ring, size, size)

    def test_invariant_under_permutation(self, f8_module, rng) -> None:
        ring = WkRing.for_module(f8_module, 2)
        for _ in range(20):
            m = random_matrix(ring, rng, 3, 3)
            order = rng.sample(range(3), 3)
            assert berkowitz_charpoly(permute(m, order)) == berkowitz_charpoly(m)

    def test_invariant_under_transpose(self, example1_module, f8_module, rng) -> None:
        for module in (example1_module, f8_module):
            ring = WkRing.for_module(module, 3)
            for size in (2, 3, 4):
                m = random_matrix(ring, rng, size, size)
                assert berkowitz_charpoly(transpose(m)) == berkowitz_charpoly(m)
