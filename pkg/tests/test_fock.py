import json
from fractions import Fraction

import pytest

from spinhdet import fock
from spinhdet.fock import FockState, Sqrt2Scalar, annihilate, create

VAC = FockState.vacuum()
IDENTITY = [[int(i == j) for j in range(8)] for i in range(8)]


def test_sqrt2_ring():
    r = Sqrt2Scalar(0, 1)
    assert r * r == Sqrt2Scalar(2, 0)
    x = Sqrt2Scalar(Fraction(1, 3), -2)
    assert (x * r) / r == x
    assert x - x == Sqrt2Scalar()
    with pytest.raises(ZeroDivisionError):
        x / Sqrt2Scalar()


def test_create_on_vacuum():
    assert create(0, VAC) == FockState({1: Sqrt2Scalar(0, 1)})
    assert not create(0, create(0, VAC))
    assert create(1, create(0, VAC)) == -create(0, create(1, VAC))


def test_annihilate():
    assert all(not annihilate(j, VAC) for j in range(8))
    assert annihilate(0, create(0, VAC)) == VAC.scale(2)


def test_jordan_wigner_sign():
    # p_2 on |mode 0 occupied> picks up one minus sign
    s = FockState.basis(0b001)
    assert create(2, s) == FockState({0b101: Sqrt2Scalar(0, -1)})
    assert create(0, FockState.basis(0b100)) == FockState({0b101: Sqrt2Scalar(0, 1)})
    assert create(1, s).amplitude(0b011) == Sqrt2Scalar(0, -1)


def test_car_exhaustive():
    r = fock.car_check()
    assert r.ok, r.failures[:5]
    assert r.checked == 256 * 64 * 3


def test_mixed_anticommutator_on_random_states(rng):
    for _ in range(5):
        s = fock.random_state(rng)
        assert not create(0, annihilate(1, s)) + annihilate(1, create(0, s))


@pytest.mark.parametrize(
    "v,alpha,q",
    [
        ([1, 0, 0, 0, 0, 0, 0, 0], [0] * 8, 0),
        ([1, 0, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0], 2),
        ([1, 1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0], 2),
        ([Fraction(1, 2), 0, 3, 0, 0, 0, 0, -1], [4, 0, 1, 0, 0, 0, 0, 2], 6),
    ],
)
def test_clifford_square(rng, v, alpha, q):
    states = [fock.random_state(rng) for _ in range(4)]
    assert fock.clifford_square_check(v, alpha, states).ok
    s = states[0]
    assert fock.o_vector(v, alpha, fock.o_vector(v, alpha, s)) == s.scale(q)


def test_identity_generator_on_vacuum():
    assert fock.spin_action(fock.SpinGenerator(IDENTITY), VAC) == VAC.scale(-8)


def test_generator_requires_antisymmetry():
    B = [[0] * 8 for _ in range(8)]
    B[0][1] = 1
    with pytest.raises(ValueError, match="B"):
        fock.SpinGenerator(IDENTITY, B=B)


def test_block_matrix_round_trip(rng):
    g = fock.SpinGenerator.random(rng)
    assert fock.SpinGenerator.from_matrix(g.matrix()) == g


def test_parity_preserved(rng):
    gens = [fock.SpinGenerator.random(rng) for _ in range(10)]
    states = [fock.random_state(rng, parity=p) for p in (0, 1, 0, 1)]
    assert fock.parity_check(gens, states).ok


def test_spin_matrix_stays_rational_and_in_sector(rng):
    masks, mat = fock.spin_matrix(fock.SpinGenerator.random(rng), parity=0)
    assert len(masks) == len(mat) == 128


def test_commutator_is_twice_the_bracket_action(rng):
    pairs = [(fock.SpinGenerator.random(rng), fock.SpinGenerator.random(rng)) for _ in range(2)]
    states = [fock.random_state(rng) for _ in range(2)]
    r = fock.representation_check(pairs, states)
    assert r.uniform_ratio == Sqrt2Scalar(2)
    for g1, g2 in pairs:
        s = states[0]
        lhs = fock.spin_action(g1, fock.spin_action(g2, s)) - fock.spin_action(g2, fock.spin_action(g1, s))
        assert lhs == fock.spin_action(g1.bracket(g2), s).scale(2)


def test_half_scaled_action_is_a_representation(rng):
    g1, g2 = fock.SpinGenerator.random(rng), fock.SpinGenerator.random(rng)
    s = fock.random_state(rng)

    def act(g, t):
        return fock.spin_action(g, t).scale(Fraction(1, 2))

    assert act(g1, act(g2, s)) - act(g2, act(g1, s)) == act(g1.bracket(g2), s)


def test_cartan_e8():
    s = fock.cartan_state([0] * 7 + [1])
    assert s.masks() == [0, 255]


def test_cartan_e1_masks():
    s = fock.cartan_state([1] + [0] * 7)
    assert s.masks() == [0b00001111, 0b11110000]


@pytest.mark.parametrize("variant,masks", [("printed", 15), ("corrected", 16)])
def test_cartan_independence(variant, masks):
    r = fock.cartan_report(variant)
    assert r.independent and r.all_even
    assert r.distinct_masks == masks


def test_cartan_rejects_unknown_variant():
    with pytest.raises(ValueError):
        fock.cartan_basis("other")


def test_state_json_round_trip(rng):
    s = fock.random_state(rng)
    text = json.dumps(s.to_json_obj())
    assert FockState.from_json_obj(json.loads(text)) == s


def test_mode_labels():
    assert fock.bit("1") == 0 and fock.bit("4b") == 7
    with pytest.raises(ValueError):
        fock.bit("5")


def test_fast_action_matches_operator_products(rng):
    for _ in range(3):
        g = fock.SpinGenerator.random(rng, density=0.5)
        s = fock.random_state(rng, nterms=8)
        assert fock.spin_action(g, s) == fock.spin_action_reference(g, s)
