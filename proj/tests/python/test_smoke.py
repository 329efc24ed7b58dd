import numpy as np
import pytest

import hweyl


def rand_fn(n, seed):
    rng = np.random.default_rng(seed)
    return rng.normal(size=n * n) + 1j * rng.normal(size=n * n)


def test_plancherel_and_inverse():
    f = rand_fn(3, 0)
    w = hweyl.weyl_transform([3], f)
    assert w.shape == (3, 3)
    assert hweyl.schatten_norm(w, 2.0) == pytest.approx(hweyl.lp_norm([3], f, 2.0))
    np.testing.assert_allclose(hweyl.weyl_inverse([3], w), f, atol=1e-12)
    np.testing.assert_allclose(hweyl.weyl_transform([3], f, path="direct"), w, atol=1e-12)


def test_twisted_convolution_is_multiplicative():
    f, g = rand_fn(4, 1), rand_fn(4, 2)
    h = hweyl.twisted_convolve([2, 2], f, g)
    lhs = hweyl.weyl_transform([2, 2], h)
    rhs = hweyl.weyl_transform([2, 2], f) @ hweyl.weyl_transform([2, 2], g)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)
    np.testing.assert_allclose(hweyl.twisted_convolve([2, 2], f, g, path="direct"), h, atol=1e-12)


def test_semivariation_of_a_scalar_measure():
    atoms = np.array([[1.0], [-2.0], [0.5], [0.0]])
    est = hweyl.semivariation([2], atoms)
    assert est["exact"]
    assert est["value"] == pytest.approx(3.5)


def test_errors_raise():
    with pytest.raises(ValueError):
        hweyl.weyl_transform([2], np.zeros(3))
    with pytest.raises(ValueError):
        hweyl.lp_norm([2], np.zeros(4), 0.5)


def test_verify_zero_trials():
    rep = hweyl.verify("core", trials=0)
    assert rep["schema"] == 1
    assert rep["pass"]
