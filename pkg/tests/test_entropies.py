import math

import numpy as np
import pytest

from entrobound.entropies import (
    binary_entropy,
    conditional_entropy,
    dmax,
    eta,
    relative_entropy,
    shannon,
    von_neumann,
)
from entrobound.states import (
    maximally_mixed,
    random_mixed,
    random_pure,
    trial_rng,
    validate_state,
)

LN2 = math.log(2.0)


def bell_state():
    v = np.zeros(4)
    v[0] = v[3] = 1 / math.sqrt(2)
    return validate_state(np.outer(v, v))


def test_eta_values():
    assert eta(0.0) == 0.0
    assert eta(1.0) == 0.0
    assert eta(1 / math.e) == pytest.approx(1 / math.e, abs=1e-15)
    with pytest.raises(ValueError):
        eta(-0.1)


def test_shannon_known_value():
    assert shannon([0.3, 0.7]) == pytest.approx(0.6108643020548935, abs=1e-12)
    assert shannon([1.0]) == 0.0
    assert shannon([]) == 0.0


def test_shannon_accepts_unnormalized_input():
    # definition is sum eta(p_i), no normalization assumed
    assert shannon([0.5, 0.5, 1.0]) == pytest.approx(LN2, abs=1e-14)


def test_shannon_negativity_tolerance():
    assert shannon([1.0, -1e-11]) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ValueError):
        shannon([1.0, -1e-3])


@pytest.mark.parametrize(
    "eps,expected",
    [
        (0.75, 0.5623351446188083),
        (0.25, 0.5623351446188083),
        (0.2, 0.5004024235381879),
        (1 / 6, 0.45056120886630466),
        (0.4, 0.6730116670092565),
        (0.0, 0.0),
        (1.0, 0.0),
        (0.5, LN2),
    ],
)
def test_binary_entropy_values(eps, expected):
    assert binary_entropy(eps) == pytest.approx(expected, abs=1e-12)


def test_binary_entropy_domain():
    with pytest.raises(ValueError):
        binary_entropy(-0.01)
    with pytest.raises(ValueError):
        binary_entropy(1.01)


def test_von_neumann_pure_and_mixed():
    rng = trial_rng(301)
    assert von_neumann(random_pure(5, rng=rng)) == pytest.approx(0.0, abs=1e-12)
    assert von_neumann(maximally_mixed(7)) == pytest.approx(math.log(7.0), abs=1e-12)
    qutrit = validate_state(np.diag([0.4, 0.4, 0.2]))
    assert von_neumann(qutrit) == pytest.approx(1.0549201679861441, abs=1e-12)


def test_conditional_entropy_extremes():
    # maximally entangled: S(A|B) = -ln 2; maximally mixed: +ln 2
    assert conditional_entropy(bell_state(), (2, 2)) == pytest.approx(-LN2, abs=1e-12)
    assert conditional_entropy(maximally_mixed(4), (2, 2)) == pytest.approx(LN2, abs=1e-12)


def test_conditional_entropy_range():
    rng = trial_rng(302)
    for _ in range(20):
        state = random_mixed(6, rng=rng)
        s = conditional_entropy(state, (2, 3))
        assert -LN2 - 1e-9 <= s <= LN2 + 1e-9


def test_relative_entropy_known_value():
    rho = validate_state(np.diag([0.7, 0.3]))
    sigma = np.diag([0.5, 0.5])
    assert relative_entropy(rho, sigma) == pytest.approx(0.0822828785050518, abs=1e-12)


def test_relative_entropy_basic_identities():
    rng = trial_rng(303)
    rho = random_mixed(4, rng=rng)
    assert relative_entropy(rho, rho.matrix) == pytest.approx(0.0, abs=1e-10)
    pure = random_pure(4, rng=rng)
    assert relative_entropy(pure, maximally_mixed(4).matrix) == pytest.approx(
        math.log(4.0), abs=1e-10
    )


def test_relative_entropy_nonnegative_for_states():
    rng = trial_rng(304)
    for _ in range(25):
        rho = random_mixed(5, rng=rng)
        sigma = random_mixed(5, rng=rng)
        assert relative_entropy(rho, sigma.matrix) >= -1e-10


def test_relative_entropy_support_violation_is_infinite():
    rho = validate_state(np.diag([0.5, 0.5]))
    sigma = np.diag([1.0, 0.0])
    assert relative_entropy(rho, sigma) == math.inf
    # aligned supports stay finite even when sigma is singular
    pure = validate_state(np.diag([1.0, 0.0]))
    assert relative_entropy(pure, sigma) == pytest.approx(0.0, abs=1e-12)


def test_relative_entropy_second_argument_scaling():
    # D(rho || c sigma) = D(rho || sigma) - ln c for unnormalized sigma
    rng = trial_rng(305)
    rho = random_mixed(3, rng=rng)
    sigma = random_mixed(3, rng=rng).matrix
    base = relative_entropy(rho, sigma)
    for c in (0.5, 2.0, 7.0):
        assert relative_entropy(rho, c * sigma) == pytest.approx(
            base - math.log(c), abs=1e-10
        )


def test_relative_entropy_rejects_bad_sigma():
    rho = maximally_mixed(2)
    with pytest.raises(ValueError):
        relative_entropy(rho, np.diag([1.5, -0.5]))
    from entrobound.errors import DimensionMismatchError

    with pytest.raises(DimensionMismatchError):
        relative_entropy(rho, np.eye(3))


def test_dmax_known_value():
    rho = validate_state(np.diag([0.5, 0.5]))
    assert dmax(rho, np.diag([0.75, 0.25])) == pytest.approx(LN2, abs=1e-12)
    assert dmax(rho, rho.matrix) == pytest.approx(0.0, abs=1e-12)


def test_dmax_dominates_relative_entropy():
    rng = trial_rng(306)
    for _ in range(25):
        rho = random_mixed(4, rng=rng)
        sigma = random_mixed(4, rng=rng).matrix
        d = relative_entropy(rho, sigma)
        m = dmax(rho, sigma)
        assert m >= d - 1e-10
        assert d >= -1e-10


def test_dmax_is_the_smallest_feasible_shift():
    rng = trial_rng(307)
    rho = random_mixed(3, rng=rng)
    sigma = random_mixed(3, rng=rng).matrix
    m = dmax(rho, sigma)
    gap = np.linalg.eigvalsh(math.exp(m) * sigma - rho.matrix)
    assert gap[0] >= -1e-10
    # shrinking the multiplier must break positivity
    shrunk = np.linalg.eigvalsh(math.exp(m - 1e-6) * sigma - rho.matrix)
    assert shrunk[0] < 0


def test_dmax_scaling_in_second_argument():
    rng = trial_rng(308)
    rho = random_mixed(3, rng=rng)
    sigma = random_mixed(3, rng=rng).matrix
    base = dmax(rho, sigma)
    for c in (0.5, 3.0):
        assert dmax(rho, c * sigma) == pytest.approx(base - math.log(c), abs=1e-10)


def test_dmax_support_violation_is_infinite():
    rho = maximally_mixed(2)
    assert dmax(rho, np.diag([1.0, 0.0])) == math.inf
