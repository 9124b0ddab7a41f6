"""Smoke tests for the compiled module: a few known values per operation
group, plus one end-to-end train/predict round trip. The heavy numerical
verification lives in the C++ unit and acceptance suites."""

import numpy as np
import pytest

import relm


def test_version():
    assert relm.__version__.count(".") == 2


def test_thresholding_values():
    assert relm.half_scalar(0.0, 5.0) == 5.0
    assert relm.half_scalar(1.0, 0.5) == 0.0
    assert relm.soft_scalar(1.0, 2.5) == 1.5
    assert relm.half_threshold(1.0) == pytest.approx(1.5)
    # prox of 0.5*(u-2)^2 + sqrt(|u|): interior minimum below t
    v = relm.half_scalar(1.0, 2.0)
    assert 1.5 < v < 2.0

    beta = np.array([[3.0], [-0.1]])
    out = relm.prox_hybrid_soft(1.0, 0.5, 0.25, beta)
    assert out[0, 0] == pytest.approx(5.0 / 3.0)
    assert out[1, 0] == 0.0


def test_numerics_roundtrip():
    rng = np.random.default_rng(0)
    H = rng.normal(size=(9, 4))
    G = relm.gram(H)
    assert np.allclose(G, H.T @ H)
    assert np.array_equal(G, G.T)

    sb = relm.spectral_bounds(G, 1e-10, 20000)
    ev = np.linalg.eigvalsh(G)
    assert sb.kappa >= ev[-1] * (1 - 1e-6)
    assert sb.kappa0 <= ev[0] * (1 + 1e-6)

    B = rng.normal(size=(4, 2))
    X = relm.solve_spd(G, B, 0.0)
    assert np.allclose(G @ X, B)


def test_hidden_layer_determinism():
    a = relm.init_hidden(6, 20, 1.0, 42)
    b = relm.init_hidden(6, 20, 1.0, 42)
    assert np.array_equal(a.weights, b.weights)
    assert np.array_equal(a.biases, b.biases)
    assert abs(a.weights).max() <= 1.0

    X = np.random.default_rng(1).normal(size=(10, 6))
    H = relm.hidden_matrix(a, X)
    assert H.shape == (10, 20)
    assert 0.0 < H.min() and H.max() < 1.0


def test_train_and_predict_end_to_end():
    rng = np.random.default_rng(7)
    n = 60
    X = np.vstack([
        rng.normal([0, 0, 2], 0.4, size=(n // 2, 3)),
        rng.normal([2, 2, 0], 0.4, size=(n // 2, 3)),
    ])
    labels = ["a"] * (n // 2) + ["b"] * (n // 2)
    enc = relm.make_encoding(labels)
    T = relm.one_hot(labels, enc)

    layer = relm.init_hidden(3, 30, 1.0, 5)
    H = relm.hidden_matrix(layer, X)

    cfg = relm.RegConfig()
    cfg.lam = 0.05
    cfg.gamma = 1.0
    cfg.epsilon = 0.5
    cfg.xi = 1e-4
    out = relm.train_hybrid_half(H, T, cfg)

    # fixed-point certificate on the returned weights
    g = relm.fixed_point_map(H, T, out.beta, cfg.lam, cfg.gamma, cfg.epsilon,
                             out.delta_used)
    assert np.linalg.norm(out.beta - g) <= cfg.xi * (1 + np.linalg.norm(out.beta))

    pred = relm.predict(layer, out.beta, X)
    truth = [enc.index_of(l) for l in labels]
    assert relm.accuracy(pred, truth) >= 0.9
    assert relm.remaining_nodes(out.beta, 1e-8) <= 30

    ref = relm.train_elm(H, T, cfg)
    assert relm.remaining_nodes(ref.beta, 1e-8) == 30


def test_solver_errors_surface_as_exceptions():
    H = np.zeros((3, 2))
    T = np.ones((3, 1))
    cfg = relm.RegConfig()
    cfg.lam = 0.1
    with pytest.raises(RuntimeError):
        relm.train_hybrid_half(H, T, cfg)
