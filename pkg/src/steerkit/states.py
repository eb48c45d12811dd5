"""Two-qubit states: validation, Bloch form, random sampling, and the named families.

Family generators follow the parametrizations used for the extremal-state
scans: Werner mixtures (R1), asymmetric-Bell/classical mixtures (R2), the
maximal-concurrence states (CONC), and their linear mixtures (R3, R4, R5).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotNormalized, NotPositive
from .linalg import I2, PAULIS, dagger, hermitize, kron

EIG_CLAMP = 1e-9

KET_00 = np.array([1, 0, 0, 0], dtype=complex)
KET_01 = np.array([0, 1, 0, 0], dtype=complex)
KET_10 = np.array([0, 0, 1, 0], dtype=complex)
KET_11 = np.array([0, 0, 0, 1], dtype=complex)

BELL_PHI_PLUS = (KET_00 + KET_11) / np.sqrt(2)
BELL_PHI_MINUS = (KET_00 - KET_11) / np.sqrt(2)
BELL_PSI_PLUS = (KET_01 + KET_10) / np.sqrt(2)
BELL_PSI_MINUS = (KET_01 - KET_10) / np.sqrt(2)
BELL_BASIS = (BELL_PHI_PLUS, BELL_PHI_MINUS, BELL_PSI_PLUS, BELL_PSI_MINUS)


def projector(ket: np.ndarray) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(ket, np.conj(ket))


@dataclass(frozen=True)
class TwoQubitState:
    """A validated 4x4 density operator (Hermitian, PSD, unit trace)."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors a, b and the 3x3 correlation matrix t."""

    a: np.ndarray
    b: np.ndarray
    t: np.ndarray


@dataclass(frozen=True)
class FamilyParams:
    """Mixing parameters of the named state families; all live in [0, 1]."""

    family: str
    m1: float = 0.0
    m2: float = 0.0
    m3: float = 0.0
    m4: float = 0.0
    m5: float = 0.0
    p: float = 0.5
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("m1", "m2", "m3", "m4", "m5", "p", "gamma"):
            _check_unit(getattr(self, name), name)


def _check_unit(x: float, name: str) -> float:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name}={x} outside [0, 1]")
    return float(x)


def validate(matrix: np.ndarray) -> TwoQubitState:
    """Validate a 4x4 matrix as a density operator.

    Eigenvalues in [-1e-9, 0) are clamped to zero and the state renormalized;
    anything worse raises NotPositive.
    """
    m = np.array(matrix, dtype=complex)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"expected 4x4 matrix, got {m.shape}")
    scale = max(np.linalg.norm(m), 1e-300)
    if np.linalg.norm(m - dagger(m)) > 1e-9 * scale:
        raise NotHermitian("density matrix is not Hermitian")
    m = hermitize(m)
    tr = np.trace(m).real
    if abs(tr - 1.0) > 1e-9:
        raise NotNormalized(f"trace is {tr}, expected 1")
    w, v = np.linalg.eigh(m)
    if w[0] < -EIG_CLAMP:
        raise NotPositive(f"negative eigenvalue {w[0]:.3e}")
    if w[0] < 0.0:
        w = np.clip(w, 0.0, None)
        m = (v * w) @ dagger(v)
        m = hermitize(m / np.trace(m).real)
    return TwoQubitState(matrix=m)


def to_bloch(s: TwoQubitState) -> BlochForm:
    """Pauli expansion coefficients: a_i, b_j, T_ij = Tr[rho sigma_i x sigma_j]."""
    rho = s.matrix
    a = np.array([np.trace(rho @ kron(sig, I2)).real for sig in PAULIS])
    b = np.array([np.trace(rho @ kron(I2, sig)).real for sig in PAULIS])
    t = np.array(
        [[np.trace(rho @ kron(si, sj)).real for sj in PAULIS] for si in PAULIS]
    )
    return BlochForm(a=a, b=b, t=t)


def from_bloch(bf: BlochForm) -> TwoQubitState:
    """Inverse of to_bloch; raises NotPositive for unphysical Bloch data."""
    a, b, t = np.asarray(bf.a, float), np.asarray(bf.b, float), np.asarray(bf.t, float)
    if np.linalg.norm(a) > 1 + 1e-9 or np.linalg.norm(b) > 1 + 1e-9:
        raise NotPositive("local Bloch vector longer than 1")
    rho = np.eye(4, dtype=complex)
    for i, sig in enumerate(PAULIS):
        rho += a[i] * kron(sig, I2) + b[i] * kron(I2, sig)
        for j, sj in enumerate(PAULIS):
            rho += t[i, j] * kron(sig, sj)
    return validate(rho / 4.0)


def purity(s: TwoQubitState) -> float:
    """Tr[rho^2], in [1/4, 1]."""
    return float(np.trace(s.matrix @ s.matrix).real)


def linear_entropy(s: TwoQubitState) -> float:
    """(4/3)(1 - Tr[rho^2]): 0 for pure states, 1 for the maximally mixed state."""
    return (4.0 / 3.0) * (1.0 - purity(s))


def werner(m1: float) -> TwoQubitState:
    """R1 family: m1 |Phi+><Phi+| + (1 - m1) I/4."""
    _check_unit(m1, "m1")
    return validate(m1 * projector(BELL_PHI_PLUS) + (1 - m1) * np.eye(4) / 4)


def asymmetric_bell(p: float) -> np.ndarray:
    """Ket sqrt(p)|00> + sqrt(1-p)|11>."""
    _check_unit(p, "p")
    return np.sqrt(p) * KET_00 + np.sqrt(1 - p) * KET_11


def family_r2(p: float, m2: float) -> TwoQubitState:
    """R2 family: m2 |Phi~+><Phi~+| + (1 - m2)|01><01|."""
    _check_unit(m2, "m2")
    return validate(m2 * projector(asymmetric_bell(p)) + (1 - m2) * projector(KET_01))


def family_conc(gamma: float) -> TwoQubitState:
    """Maximal-concurrence states at fixed linear entropy.

    X-form matrix with diagonal (g, 1-2g, 0, g) and corner gamma/2, where
    g = gamma/2 for gamma >= 2/3 and g = 1/3 below.
    """
    _check_unit(gamma, "gamma")
    g = gamma / 2 if gamma >= 2.0 / 3.0 else 1.0 / 3.0
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = g
    m[1, 1] = 1 - 2 * g
    m[0, 3] = m[3, 0] = gamma / 2
    return validate(m)


def family_r3(m3: float, gamma: float, p: float, m2: float) -> TwoQubitState:
    """R3 family: m3 * conc(gamma) + (1 - m3) * r2(p, m2)."""
    _check_unit(m3, "m3")
    mix = m3 * family_conc(gamma).matrix + (1 - m3) * family_r2(p, m2).matrix
    return validate(mix)


def family_r4(p: float, m4: float) -> TwoQubitState:
    """R4 family: mixture of the doubly asymmetric Bell states.

    m4 |Phi~+><Phi~+| + (1 - m4)|Phi~-><Phi~-| with
    |Phi~+> = sqrt(p)|00> + sqrt(1-p)|11>, |Phi~-> = sqrt(p)|01> + sqrt(1-p)|10>.
    """
    _check_unit(m4, "m4")
    minus = np.sqrt(p) * KET_01 + np.sqrt(1 - p) * KET_10
    return validate(m4 * projector(asymmetric_bell(p)) + (1 - m4) * projector(minus))


def family_r5(m5: float, p: float, m4: float, gamma: float) -> TwoQubitState:
    """R5 family: m5 * r4(p, m4) + (1 - m5) * conc(gamma)."""
    _check_unit(m5, "m5")
    mix = m5 * family_r4(p, m4).matrix + (1 - m5) * family_conc(gamma).matrix
    return validate(mix)


def random_state(seed: int, rank: int = 4) -> TwoQubitState:
    """Random state rho = G G^dagger / Tr, G a 4 x rank complex Gaussian matrix.

    At rank 4 this is the Hilbert-Schmidt-induced measure. Deterministic for
    a fixed seed.
    """
    if not 1 <= rank <= 4:
        raise ValueError(f"rank must be in [1, 4], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    rho = g @ dagger(g)
    return validate(rho / np.trace(rho).real)


def random_x_state(seed: int) -> TwoQubitState:
    """Random Bell-diagonal (X) state: weights uniform on the 3-simplex."""
    rng = np.random.default_rng(seed)
    lam = rng.dirichlet(np.ones(4))
    rho = sum(l * projector(k) for l, k in zip(lam, BELL_BASIS))
    return validate(rho)


def random_pure_state(seed: int) -> TwoQubitState:
    """Haar-random pure two-qubit state."""
    return random_state(seed, rank=1)


def random_product_state(seed: int) -> TwoQubitState:
    """Random product state rho_A x rho_B (each a single-qubit Ginibre state)."""
    rng = np.random.default_rng(seed)

    def qubit():
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        r = g @ dagger(g)
        return r / np.trace(r).real

    return validate(kron(qubit(), qubit()))


def random_separable_state(seed: int, n_terms: int = 4) -> TwoQubitState:
    """Random convex mixture of ``n_terms`` pure product states."""
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(n_terms))
    rho = np.zeros((4, 4), dtype=complex)
    for w in weights:
        ka = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        kb = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        ka /= np.linalg.norm(ka)
        kb /= np.linalg.norm(kb)
        rho += w * projector(np.kron(ka, kb))
    return validate(rho)
