import numpy as np
import pytest

from bezKit.src.errors import InvertibilityError, ShapeError, SymmetryError
from bezKit.src.vessel import (
    CommutativeVessel,
    OperatorNode,
    discriminant_exponent,
    node_residual,
    stacked_phi_prime,
    vessel_discriminant,
    vessel_from_node,
    vessel_residuals,
)

from helpers import P, biv

ONE_DIM = OperatorNode([[0.5j]], [[1.0]], [[1.0]])


def random_node(gen, h, e):
    """Random node: Hermitian part from A0, skew part forced to (i/2) Phi* sigma Phi."""
    A0 = gen.normal(size=(h, h)) + 1j * gen.normal(size=(h, h))
    Phi = gen.normal(size=(e, h)) + 1j * gen.normal(size=(e, h))
    S = gen.normal(size=(e, e)) + 1j * gen.normal(size=(e, e))
    sigma = (S + S.conj().T) / 2
    H = (A0 + A0.conj().T) / 2
    A = 0.5 * (H + 0.5j * Phi.conj().T @ sigma @ Phi)
    Phi = Phi * np.sqrt(0.5)
    return OperatorNode(A, Phi, sigma)


def build(c, p0, p1, p2, n=None):
    n = n or max(1, p0.degree, p1.degree, p2.degree)
    return vessel_from_node(c, p0, p1, p2, stacked_phi_prime(c, p0, n), n)


def test_node_residual_examples():
    assert node_residual(ONE_DIM) <= 1e-15
    assert node_residual(OperatorNode([[1.0, 2.0], [2.0, 0.0]], np.zeros((1, 2)), [[0.0]])) == 0.0
    assert node_residual(OperatorNode([[1j]], [[1.0]], [[1.0]])) == pytest.approx(1.0)


def test_node_validation():
    with pytest.raises(ShapeError):
        OperatorNode(np.eye(2), np.ones((1, 3)), [[1.0]])
    with pytest.raises(SymmetryError):
        OperatorNode(np.eye(2), np.ones((2, 2)), [[1.0, 1j], [1j, 1.0]])


def test_random_nodes_have_zero_residual():
    gen = np.random.default_rng(7)
    for _ in range(20):
        c = random_node(gen, gen.integers(1, 5), gen.integers(1, 3))
        assert node_residual(c) <= 1e-12


def test_zero_vessel_residuals():
    z2, z1 = np.zeros((2, 2)), np.zeros((1, 1))
    v = CommutativeVessel(z1, z1, np.zeros((2, 1)), z2, z2, z2, z2)
    assert all(r == 0.0 for r in vessel_residuals(v).as_dict().values())


def test_one_dimensional_vessel():
    v = build(ONE_DIM, P(1), P(0, 1), P(0, 0, 1))
    assert np.allclose(v.A1, [[0.5j]])
    assert np.allclose(v.A2, [[-0.25]])
    assert np.allclose(v.Phi, [[1.0], [-0.5j]])
    assert np.allclose(v.sigma1, [[1, 0], [0, 0]])
    assert np.allclose(v.sigma2, [[0, 1], [1, 0]])
    assert np.allclose(v.gamma_in, [[0, 0], [0, -1]])
    assert np.allclose(v.gamma_out, [[-1, 1j], [-1j, -1]])
    res = vessel_residuals(v)
    assert res.is_vessel(1e-12)
    assert res.commutativity <= 1e-12


def test_perturbed_output_breaks_linkage():
    v = build(ONE_DIM, P(1), P(0, 1), P(0, 0, 1))
    broken = CommutativeVessel(
        v.A1, v.A2, v.Phi, v.sigma1, v.sigma2, v.gamma_in, v.gamma_out + np.ones_like(v.gamma_out)
    )
    assert vessel_residuals(broken).linkage == pytest.approx(1.0)
    assert not vessel_residuals(broken).is_vessel()


def test_random_vessels_satisfy_axioms():
    gen = np.random.default_rng(11)
    triples = [
        (P(1), P(0, 1), P(0, 0, 1)),
        (P(10, 1), P(0, 1), P(1, 0, 1)),
        (P(1), P(2, -1), P(0, 3, 1)),
        (P(10, 0, 1), P(1, 1), P(0, 0, 2)),
    ]
    for p0, p1, p2 in triples:
        for _ in range(5):
            c = random_node(gen, gen.integers(1, 4), gen.integers(1, 3))
            res = vessel_residuals(build(c, p0, p1, p2))
            assert res.is_vessel(1e-9), res.as_dict()
            assert res.commutativity <= 1e-9


def test_gamma_out_is_hermitian():
    gen = np.random.default_rng(3)
    c = random_node(gen, 3, 2)
    v = build(c, P(1), P(0, 1), P(0, 0, 1))
    assert np.allclose(v.gamma_out, v.gamma_out.conj().T)


def test_equal_triple_gives_identity_operators():
    v = build(ONE_DIM, P(2, 1), P(2, 1), P(2, 1))
    assert np.allclose(v.A1, np.eye(1))
    assert np.allclose(v.A2, np.eye(1))


def test_singular_p0_is_rejected():
    with pytest.raises(InvertibilityError):
        vessel_from_node(ONE_DIM, P(0), P(0, 1), P(0, 0, 1), np.ones((2, 1)), 2)
    with pytest.raises(ShapeError):
        vessel_from_node(ONE_DIM, P(1), P(0, 1), P(0, 0, 1), np.ones((3, 1)), 2)


def test_discriminant_is_implicit_equation():
    assert vessel_discriminant(P(1), P(0, 1), P(0, 0, 1)) == biv([(0, 1, 1), (2, 0, -1)])
    assert discriminant_exponent(ONE_DIM) == 1
    gen = np.random.default_rng(5)
    assert discriminant_exponent(random_node(gen, 2, 2)) == 2


def test_pencil_determinant_factorizes():
    v = build(ONE_DIM, P(1), P(0, 1), P(0, 0, 1))
    x1, x2 = 0.3, 0.7
    pencil = v.gamma_in + x1 * v.sigma2 - x2 * v.sigma1
    det = np.linalg.det(pencil)
    assert abs(det.imag) <= 1e-12
    assert det.real == pytest.approx(x2 - x1**2)
