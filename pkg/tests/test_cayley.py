from fractions import Fraction

import pytest

from spinhdet import cayley
from spinhdet.polynomial import evaluate


def test_combinatorial_equals_explicit():
    assert cayley.hdet222_combinatorial() == cayley.explicit_polynomial()


def test_monomial_structure():
    p = cayley.hdet222_combinatorial()
    assert len(p) == 12
    assert sorted(c for _, c in p.items()) == [-2] * 6 + [1] * 4 + [4] * 2


def test_cube_pieces():
    assert len(cayley.cube_diagonals()) == 4
    assert len(cayley.cube_parallelograms()) == 6
    tets = cayley.cube_tetrahedra()
    assert len(tets) == 2
    assert {sum(map(sum, t)) % 2 for t in tets} == {0}
    assert {sum(t[0]) % 2 for t in tets} == {0, 1}


def test_named_states():
    assert cayley.hdet222_explicit(cayley.GHZ) == 1
    assert cayley.hdet222_explicit(cayley.W) == 0
    assert cayley.hdet222_explicit(cayley.Tensor222.outer((1, 2), (3, 5), (7, 11))) == 0


def test_basis_tensors_vanish():
    for t in cayley.INDICES:
        assert cayley.hdet222_explicit(cayley.Tensor222.from_dict({t: 1})) == 0


def test_explicit_and_polynomial_agree(rng):
    p = cayley.hdet222_combinatorial()
    for _ in range(20):
        A = cayley.random_tensor(rng)
        assert evaluate(p, A.entries) == cayley.hdet222_explicit(A) == cayley.hdet222(A)


def test_rank_one_tensors_vanish(rng):
    for _ in range(100):
        u, v, w = ([cayley.random_rational(rng) for _ in range(2)] for _ in range(3))
        assert cayley.hdet222_explicit(cayley.Tensor222.outer(u, v, w)) == 0


def test_slot_scaling_is_degree_four(rng):
    A = cayley.random_tensor(rng)
    lam = Fraction(-3, 7)
    g = [[lam, 0], [0, lam]]
    eye = [[1, 0], [0, 1]]
    assert cayley.hdet222_explicit(A.act(g, eye, eye)) == lam**4 * cayley.hdet222_explicit(A)


def test_bit_complement_symmetry():
    p = cayley.hdet222_combinatorial()
    flipped = {tuple(reversed(e)): c for e, c in p.items()}  # index 4i+2j+k -> 7 - index
    assert flipped == dict(p.items())


def test_sl2_invariance(rng):
    for _ in range(20):
        A = cayley.random_tensor(rng)
        gs = [cayley.random_sl2(rng) for _ in range(3)]
        assert all(cayley.det2(g) == 1 for g in gs)
        assert cayley.sl2_invariance_check(A, *gs).ok


def test_shear_invariance(rng):
    eye = [[1, 0], [0, 1]]
    assert cayley.sl2_invariance_check(cayley.random_tensor(rng), [[1, 1], [0, 1]], eye, eye).ok


def test_determinant_precondition():
    eye = [[1, 0], [0, 1]]
    with pytest.raises(cayley.PreconditionError, match="g1"):
        cayley.sl2_invariance_check(cayley.GHZ, [[2, 0], [0, 1]], eye, eye)
