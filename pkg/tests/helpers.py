"""Shared random generators and independent oracles for the test suite.

The oracles here deliberately avoid the library code paths they check:
channel equality is probed by applying both channels to every basis
endomorphism, and Choi matrices are rebuilt by brute-force summation over
basis pairs.
"""

import numpy as np

from quvac import DensityOperator, ExtendedSpace, KrausChannel, apply


def random_density(rng, dim: int) -> np.ndarray:
    """Random density matrix from a normalized Wishart sample."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = a @ a.conj().T
    return m / np.trace(m).real


def random_state(rng, space: ExtendedSpace) -> DensityOperator:
    return DensityOperator(space, random_density(rng, space.total_dim))


def random_hermitian(rng, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def random_unitary(rng, dim: int) -> np.ndarray:
    """Haar-like unitary via phase-fixed QR of a Ginibre sample."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    d = np.diag(r)
    return q @ np.diag(d / np.abs(d))


def random_tp_channel(rng, space: ExtendedSpace, n_elements: int, label: str = "random") -> KrausChannel:
    """Random trace-preserving channel: Ginibre elements whitened by S^(-1/2)."""
    n = space.total_dim
    raw = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(n_elements)]
    s = sum(g.conj().T @ g for g in raw)
    values, vectors = np.linalg.eigh(s)
    inv_sqrt = vectors @ np.diag(values**-0.5) @ vectors.conj().T
    return KrausChannel(space, tuple(g @ inv_sqrt for g in raw), label=label)


def random_subnormalized_channel(rng, space: ExtendedSpace, n_elements: int, scale: float = 0.7) -> KrausChannel:
    """Strictly trace-decreasing channel: a scaled trace-preserving one."""
    ch = random_tp_channel(rng, space, n_elements)
    return KrausChannel(space, tuple(scale * e for e in ch.elements), label="subnormalized")


def basis_endomorphism(dim: int, j: int, k: int) -> np.ndarray:
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[j, k] = 1.0
    return m


def apply_difference(a: KrausChannel, b: KrausChannel) -> float:
    """Max entrywise output difference over all basis endomorphisms.

    Equality oracle independent of the Choi code path.
    """
    n = a.space.total_dim
    worst = 0.0
    for j in range(n):
        for k in range(n):
            e = basis_endomorphism(n, j, k)
            worst = max(worst, float(np.max(np.abs(apply(a, e) - apply(b, e)))))
    return worst


def brute_force_choi(ch: KrausChannel) -> np.ndarray:
    """Choi matrix summed pair by pair from the definition."""
    n = ch.space.total_dim
    total = np.zeros((n * n, n * n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            e = basis_endomorphism(n, j, k)
            total += np.kron(e, apply(ch, e))
    return total
