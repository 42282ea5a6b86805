import numpy as np
import pytest

from entrobound.errors import DimensionMismatchError, NotHermitianError
from entrobound.linalg import (
    Spectrum,
    hermitian_eigensystem,
    hermitian_part,
    max_eigenvalue,
    min_eigenvalue,
    partial_trace,
    pinch,
    recompose,
    require_hermitian,
    schatten_norm,
    spectral_function,
    tensor,
    trace_distance,
)


def random_hermitian(dim, rng):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (g + g.conj().T) / 2


def test_eigensystem_2x2_closed_form():
    m = np.array([[1.5, 0.5], [0.5, 0.5]])
    system = hermitian_eigensystem(m)
    expected = np.array([1 - np.sqrt(0.5), 1 + np.sqrt(0.5)])
    np.testing.assert_allclose(system.spectrum.values, expected, atol=1e-14)
    np.testing.assert_allclose(recompose(system.spectrum.values, system.vectors), m, atol=1e-14)


@pytest.mark.parametrize("dim", [2, 3, 7, 12])
def test_eigensystem_orthonormal_and_reconstructs(dim):
    rng = np.random.default_rng(7 * dim)
    m = random_hermitian(dim, rng)
    system = hermitian_eigensystem(m)
    gram = system.vectors.conj().T @ system.vectors
    np.testing.assert_allclose(gram, np.eye(dim), atol=1e-12)
    np.testing.assert_allclose(
        recompose(system.spectrum.values, system.vectors), m, atol=1e-11
    )
    # ascending order contract
    assert np.all(np.diff(system.spectrum.values) >= -1e-14)


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        require_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotHermitianError):
        hermitian_eigensystem(np.array([[0.0, 1.0], [1.0, 0.0]]) * 1j)


def test_rejects_non_square():
    with pytest.raises(NotHermitianError):
        require_hermitian(np.zeros((2, 3)))


def test_hermitian_part_is_hermitian():
    rng = np.random.default_rng(3)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = hermitian_part(g)
    np.testing.assert_allclose(h, h.conj().T, atol=0)


def test_spectrum_order_validation():
    Spectrum(values=np.array([1.0, 2.0, 3.0]), order="ascending")
    Spectrum(values=np.array([3.0, 2.0, 1.0]), order="descending")
    with pytest.raises(ValueError):
        Spectrum(values=np.array([1.0, 3.0, 2.0]), order="ascending")
    with pytest.raises(ValueError):
        Spectrum(values=np.array([1.0, 2.0]), order="sideways")


def test_schatten_norm_known_values():
    m = np.diag([3.0, -4.0])
    assert schatten_norm(m, 1) == pytest.approx(7.0)
    assert schatten_norm(m, 2) == pytest.approx(5.0)
    assert schatten_norm(m, np.inf) == pytest.approx(4.0)
    eye = np.eye(5)
    assert schatten_norm(eye, 1) == pytest.approx(5.0)
    assert schatten_norm(eye, 2) == pytest.approx(np.sqrt(5.0))
    assert schatten_norm(eye, np.inf) == pytest.approx(1.0)


def test_schatten_norm_monotone_in_p():
    rng = np.random.default_rng(11)
    m = random_hermitian(6, rng)
    norms = [schatten_norm(m, p) for p in (1, 1.5, 2, 4, np.inf)]
    assert all(a >= b - 1e-12 for a, b in zip(norms, norms[1:]))


def test_schatten_norm_rejects_small_p():
    with pytest.raises(ValueError):
        schatten_norm(np.eye(2), 0.5)


def test_trace_distance_diagonal():
    a = np.diag([0.7, 0.3])
    b = np.diag([0.4, 0.6])
    assert trace_distance(a, b) == pytest.approx(0.3, abs=1e-14)
    assert trace_distance(a, a) == pytest.approx(0.0, abs=1e-14)


def test_trace_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        trace_distance(np.eye(2), np.eye(3))


def test_trace_distance_range():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g1 = rng.normal(size=(4, 4))
        g2 = rng.normal(size=(4, 4))
        r1 = g1 @ g1.T
        r2 = g2 @ g2.T
        r1 /= np.trace(r1)
        r2 /= np.trace(r2)
        t = trace_distance(r1, r2)
        assert -1e-12 <= t <= 1 + 1e-12


def test_operator_norm_at_most_half_trace_norm_of_difference():
    # sup norm of a traceless Hermitian never exceeds half its 1-norm
    rng = np.random.default_rng(17)
    for _ in range(25):
        g1 = rng.normal(size=(5, 5))
        g2 = rng.normal(size=(5, 5))
        r1 = g1 @ g1.T
        r2 = g2 @ g2.T
        delta = r1 / np.trace(r1) - r2 / np.trace(r2)
        assert schatten_norm(delta, np.inf) <= 0.5 * schatten_norm(delta, 1) + 1e-12


def test_min_max_eigenvalue():
    m = np.diag([0.2, -1.0, 3.5])
    assert min_eigenvalue(m) == pytest.approx(-1.0)
    assert max_eigenvalue(m) == pytest.approx(3.5)


def test_spectral_function_exp_and_identity():
    rng = np.random.default_rng(23)
    m = random_hermitian(4, rng)
    system = hermitian_eigensystem(m)
    expm = spectral_function(m, np.exp)
    np.testing.assert_allclose(
        expm, recompose(np.exp(system.spectrum.values), system.vectors), atol=1e-12
    )
    np.testing.assert_allclose(spectral_function(m, lambda x: x), m, atol=1e-12)


def test_spectral_function_sqrt_squares_back():
    rng = np.random.default_rng(29)
    g = rng.normal(size=(4, 4))
    psd = g @ g.T
    root = spectral_function(psd, np.sqrt)
    np.testing.assert_allclose(root @ root, psd, atol=1e-10)


def test_spectral_function_rejects_undefined_values():
    import math

    singular = np.diag([1.0, 0.0])
    with pytest.raises(ValueError):
        spectral_function(singular, math.log)
    # restricted to the support the same call is fine
    on_support = spectral_function(singular, math.log, on_support_only=True)
    np.testing.assert_allclose(on_support, np.zeros((2, 2)), atol=1e-14)


def test_tensor_index_convention():
    a = np.diag([1.0, 2.0])
    b = np.diag([10.0, 20.0, 30.0])
    prod = tensor(a, b)
    # first factor owns the slow index
    diag = np.diag(prod)
    np.testing.assert_allclose(diag, [10, 20, 30, 20, 40, 60])


def test_partial_trace_of_product_state():
    rng = np.random.default_rng(31)
    ga = rng.normal(size=(2, 2))
    gb = rng.normal(size=(3, 3))
    ra = ga @ ga.T
    rb = gb @ gb.T
    ra /= np.trace(ra)
    rb /= np.trace(rb)
    joint = tensor(ra, rb)
    np.testing.assert_allclose(partial_trace(joint, (2, 3), keep="A"), ra, atol=1e-12)
    np.testing.assert_allclose(partial_trace(joint, (2, 3), keep="B"), rb, atol=1e-12)


def test_partial_trace_of_bell_state():
    v = np.zeros(4)
    v[0] = v[3] = 1 / np.sqrt(2)
    bell = np.outer(v, v)
    np.testing.assert_allclose(partial_trace(bell, (2, 2), keep="A"), np.eye(2) / 2, atol=1e-14)
    np.testing.assert_allclose(partial_trace(bell, (2, 2), keep="B"), np.eye(2) / 2, atol=1e-14)


def test_partial_trace_dimension_check():
    with pytest.raises(DimensionMismatchError):
        partial_trace(np.eye(4), (2, 3), keep="A")
    with pytest.raises(ValueError):
        partial_trace(np.eye(4), (2, 2), keep="C")


def test_pinch_with_diagonal_projectors():
    rng = np.random.default_rng(37)
    m = random_hermitian(3, rng)
    projectors = [np.diag([1.0, 0, 0]), np.diag([0, 1.0, 0]), np.diag([0, 0, 1.0])]
    pinched = pinch(m, projectors)
    np.testing.assert_allclose(pinched, np.diag(np.diag(m)), atol=1e-14)
    assert np.trace(pinched) == pytest.approx(np.real(np.trace(m)))


def test_pinch_rejects_bad_projectors():
    not_idempotent = np.diag([0.5, 0.0])
    with pytest.raises(ValueError):
        pinch(np.eye(2), [not_idempotent])
    overlapping = [np.diag([1.0, 0.0]), np.diag([1.0, 0.0])]
    with pytest.raises(ValueError):
        pinch(np.eye(2), overlapping)


def test_pinch_allows_incomplete_partition():
    m = np.array([[0.6, 0.2], [0.2, 0.4]])
    out = pinch(m, [np.diag([1.0, 0.0])])
    np.testing.assert_allclose(out, np.diag([0.6, 0.0]), atol=1e-14)
