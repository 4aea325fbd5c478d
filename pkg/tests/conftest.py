import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def random_density(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_effect_operator(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = (a + a.conj().T) / 2
    ev, vec = np.linalg.eigh(h)
    ev = (ev - ev.min()) / (ev.max() - ev.min() + 1e-12)
    return (vec * ev) @ vec.conj().T
