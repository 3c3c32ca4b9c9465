"""Seeded random states, unitaries and projections for demos and property tests."""

from __future__ import annotations

import numpy as np

from .states import BipartiteState, tensor_state


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_state_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    vec = _complex_gaussian(rng, dim)
    return vec / np.linalg.norm(vec)


def random_orthonormal_pair(rng: np.random.Generator, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Two exactly orthogonal unit vectors (dim >= 2)."""
    if dim < 2:
        raise ValueError("an orthonormal pair needs dimension >= 2")
    a = random_state_vector(rng, dim)
    b = _complex_gaussian(rng, dim)
    b = b - np.vdot(a, b) * a
    b = b - np.vdot(a, b) * a
    return a, b / np.linalg.norm(b)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(_complex_gaussian(rng, (dim, dim)))
    # Fix the column phases so the distribution is uniform (Haar).
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_projection(rng: np.random.Generator, dim: int, rank: int | None = None) -> np.ndarray:
    if rank is None:
        rank = int(rng.integers(1, dim + 1))
    if not 1 <= rank <= dim:
        raise ValueError(f"projection rank must lie in [1, {dim}]")
    basis = random_unitary(rng, dim)[:, :rank]
    return basis @ basis.conj().T


def random_bipartite_state(
    rng: np.random.Generator, dim_left: int, dim_right: int
) -> BipartiteState:
    coeffs = _complex_gaussian(rng, (dim_left, dim_right))
    return BipartiteState(coeffs / np.linalg.norm(coeffs))


def random_product_state(
    rng: np.random.Generator, dim_left: int, dim_right: int
) -> BipartiteState:
    return tensor_state(
        random_state_vector(rng, dim_left), random_state_vector(rng, dim_right)
    )
