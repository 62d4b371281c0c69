import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_occupation(rng, s, max_eig=5.0):
    """Random Hermitian PSD occupation matrix with eigenvalues in [0, max_eig]."""
    q, _ = np.linalg.qr(rng.normal(size=(s, s)) + 1j * rng.normal(size=(s, s)))
    vals = rng.uniform(0.0, max_eig, size=s)
    return (q * vals) @ q.conj().T
