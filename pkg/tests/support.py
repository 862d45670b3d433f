"""Independent oracles and random generators shared by the test modules.

Everything here is deliberately built on numpy.linalg (eigh, qr, norm)
instead of the package's own Jacobi/cache machinery, so the comparisons
in the tests are genuine dual-route checks.
"""

import numpy as np

from chanskew.quantum import DensityMatrix, KrausChannel, UnitaryOp
from chanskew.skewinfo import SkewParams


def eigh_power(mat: np.ndarray, p: float) -> np.ndarray:
    """Fractional PSD power via numpy.linalg.eigh; p = 0 gives the identity."""
    if p == 0.0:
        return np.eye(mat.shape[0], dtype=np.complex128)
    lam, v = np.linalg.eigh(mat)
    lam = np.clip(lam, 0.0, None)
    return (v * lam**p) @ v.conj().T


def weighted_mid(rho: np.ndarray, alpha: float, beta: float, gamma: float) -> np.ndarray:
    return (1.0 - gamma) * eigh_power(rho, alpha) + gamma * eigh_power(rho, beta)


def direct_skew(rho, e, alpha, beta, gamma) -> float:
    """Norm form 1/2 ||[W, E] rho^((1-a-b)/2)||^2, all numpy primitives."""
    w = weighted_mid(rho, alpha, beta, gamma)
    c = (w @ e - e @ w) @ eigh_power(rho, (1.0 - alpha - beta) / 2.0)
    return 0.5 * np.linalg.norm(c) ** 2


def trace_form_skew(rho, e, alpha, beta, gamma) -> float:
    """Trace form -1/2 Tr([W, E^H][W, E] rho^(1-a-b))."""
    w = weighted_mid(rho, alpha, beta, gamma)
    ca = w @ e.conj().T - e.conj().T @ w
    cb = w @ e - e @ w
    return -0.5 * np.trace(ca @ cb @ eigh_power(rho, 1.0 - alpha - beta)).real


def stacked_channel_skew(rho, ops, alpha, beta, gamma) -> float:
    """1/2 || [ [W,E_1]T  [W,E_2]T  ... ] ||^2 for the block-row stack."""
    w = weighted_mid(rho, alpha, beta, gamma)
    tail = eigh_power(rho, (1.0 - alpha - beta) / 2.0)
    blocks = [(w @ e - e @ w) @ tail for e in ops]
    return 0.5 * np.linalg.norm(np.hstack(blocks)) ** 2


# direct formulas for the reduced one- and two-parameter families


def skew_mean_arbitrary(rho, e, alpha) -> float:
    """-1/2 Tr([M, E^H][M, E]) with M = (rho^a + rho^(1-a)) / 2."""
    m = 0.5 * (eigh_power(rho, alpha) + eigh_power(rho, 1.0 - alpha))
    ca = m @ e.conj().T - e.conj().T @ m
    cb = m @ e - e @ m
    return -0.5 * np.trace(ca @ cb).real


def skew_mean_hermitian(rho, a_mat, alpha) -> float:
    """-1/2 Tr([M, A]^2) with M = (rho^a + rho^(1-a)) / 2, A Hermitian."""
    m = 0.5 * (eigh_power(rho, alpha) + eigh_power(rho, 1.0 - alpha))
    c = m @ a_mat - a_mat @ m
    return -0.5 * np.trace(c @ c).real


def skew_weighted_arbitrary(rho, e, alpha, gamma) -> float:
    """-1/2 Tr([M, E^H][M, E]) with M = (1-g) rho^a + g rho^(1-a)."""
    m = weighted_mid(rho, alpha, 1.0 - alpha, gamma)
    ca = m @ e.conj().T - e.conj().T @ m
    cb = m @ e - e @ m
    return -0.5 * np.trace(ca @ cb).real


def skew_weighted_hermitian(rho, a_mat, alpha, gamma) -> float:
    """-1/2 Tr([M, A]^2) with M = (1-g) rho^a + g rho^(1-a), A Hermitian."""
    m = weighted_mid(rho, alpha, 1.0 - alpha, gamma)
    c = m @ a_mat - a_mat @ m
    return -0.5 * np.trace(c @ c).real


def skew_two_exponent_hermitian(rho, a_mat, alpha, beta, gamma) -> float:
    """-1/2 Tr([W, A]^2 rho^(1-a-b)) with W = (1-g) rho^a + g rho^b."""
    w = weighted_mid(rho, alpha, beta, gamma)
    c = w @ a_mat - a_mat @ w
    return -0.5 * np.trace(c @ c @ eigh_power(rho, 1.0 - alpha - beta)).real


# random inputs


def random_matrix(rng, dim: int) -> np.ndarray:
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def random_hermitian(rng, dim: int) -> np.ndarray:
    g = random_matrix(rng, dim)
    return 0.5 * (g + g.conj().T)


def random_density(rng, dim: int) -> DensityMatrix:
    """Full-rank random state rho = G G^H / Tr(G G^H)."""
    g = random_matrix(rng, dim)
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho).real)


def random_qubit_state(rng) -> DensityMatrix:
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    from chanskew.quantum import bloch_state

    return bloch_state(0.95 * rng.random() * direction)


def random_params(rng) -> SkewParams:
    alpha = rng.random()
    return SkewParams(alpha=alpha, beta=rng.random() * (1.0 - alpha), gamma=rng.random())


def random_unitary(rng, dim: int = 2) -> UnitaryOp:
    q, r = np.linalg.qr(random_matrix(rng, dim))
    d = np.diag(r)
    return UnitaryOp(q * (d / np.abs(d)))


def random_channel(rng, dim: int, n_ops: int, name: str = "random") -> KrausChannel:
    """Random Kraus channel from the blocks of a random isometry."""
    g = rng.normal(size=(n_ops * dim, dim)) + 1j * rng.normal(size=(n_ops * dim, dim))
    q, _ = np.linalg.qr(g)
    ops = tuple(q[k * dim : (k + 1) * dim, :] for k in range(n_ops))
    return KrausChannel(name, ops)
