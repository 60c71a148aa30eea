"""Bell states, lifted commuting operators, and the joint outcome distribution.

The distribution of simultaneous outcomes (k, l) is computed by three routes
that must agree: Born-rule brute force against the tensor eigenvector frame,
the two-term interference amplitude formula, and closed trigonometric forms
in the angle sums. Brute force works for any unit state and serves as the
reference oracle; the other two are specific to Bell states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, qmath
from .observables import IDENTITY2, TWO_PI, Observable, eigenvector, matrix

#: fixed cell order for joint outcomes (k, l); all arrays and CSV output use it
INDEX_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1))

PROB_SLACK = 1e-12        # numeric undershoot tolerated before clamping
SUM_TOL = 1e-12
NORM_TOL = 1e-10
CLOSED_VARIANT_TOL = 1e-10  # max disagreement allowed between the two closed forms


class InternalConsistencyError(RuntimeError):
    """The two closed-form variants disagreed beyond tolerance."""


@dataclass(frozen=True)
class BellLabel:
    """Names the maximally entangled state (|0 t> + (-1)^s |1 (t+1)>)/sqrt(2)."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s not in (0, 1) or self.t not in (0, 1):
            raise ValueError(f"bell label bits must be 0 or 1, got ({self.s}, {self.t})")


@dataclass(frozen=True)
class ObservablePair:
    """The first-qubit observable a and the second-qubit observable b."""

    a: Observable
    b: Observable


@dataclass(frozen=True)
class JointDistribution:
    """Probabilities of the four simultaneous outcomes, in INDEX_ORDER.

    Values are clamped to [0, 1] at construction; raw inputs may undershoot 0
    by ~1e-16 through cancellation in the closed forms. Anything outside the
    1e-12 slack, or a total away from 1 by more than 1e-12, is rejected.
    """

    p: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        values = tuple(float(x) for x in self.p)
        if len(values) != 4:
            raise ValueError(f"expected 4 probabilities, got {len(values)}")
        for x in values:
            if not math.isfinite(x) or x < -PROB_SLACK or x > 1.0 + PROB_SLACK:
                raise ValueError(f"probability {x} lies outside [0, 1] beyond slack")
        total = sum(values)
        if abs(total - 1.0) > SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        object.__setattr__(self, "p", tuple(min(1.0, max(0.0, x)) for x in values))

    def probability(self, k: int, ell: int) -> float:
        if k not in (0, 1) or ell not in (0, 1):
            raise ValueError("outcome indices must be 0 or 1")
        return self.p[2 * k + ell]

    def as_array(self) -> np.ndarray:
        return np.array(self.p)


@dataclass(frozen=True)
class OutcomeFrame:
    """The four joint eigenvectors u_a^(k) tensor u_b^(l), rows in INDEX_ORDER."""

    vectors: np.ndarray  # shape (4, 4) complex, row index 2k+l

    def vector(self, k: int, ell: int) -> np.ndarray:
        return self.vectors[2 * k + ell]


def bell_state(label: BellLabel) -> np.ndarray:
    """State vector (|0 t> + (-1)^s |1 (t+1)>)/sqrt(2) in the product basis."""
    psi = np.zeros(4, dtype=np.complex128)
    psi[label.t] = 1.0
    psi[2 + (label.t + 1) % 2] = -1.0 if label.s else 1.0
    return psi / math.sqrt(2.0)


def bell_state_batch(s, t) -> np.ndarray:
    """Stacked Bell states for bit arrays s, t; shape (n, 4)."""
    s = np.asarray(s, dtype=np.int64)
    t = np.asarray(t, dtype=np.int64)
    n = s.shape[0]
    amp = 1.0 / math.sqrt(2.0)
    psi = np.zeros((n, 4), dtype=np.complex128)
    rows = np.arange(n)
    psi[rows, t] = amp
    psi[rows, 2 + (t + 1) % 2] = np.where(s == 1, -amp, amp)
    return psi


def lift_first(a) -> np.ndarray:
    """Lift a 2x2 operator to act on the first qubit: a tensor identity."""
    return qmath.tensor_mat(a, IDENTITY2)


def lift_second(b) -> np.ndarray:
    """Lift a 2x2 operator to act on the second qubit: identity tensor b."""
    return qmath.tensor_mat(IDENTITY2, b)


def outcome_frame(pair: ObservablePair) -> OutcomeFrame:
    """Orthonormal frame of common eigenvectors of both lifted observables."""
    rows = [
        qmath.tensor_vec(eigenvector(pair.a, k), eigenvector(pair.b, ell))
        for k, ell in INDEX_ORDER
    ]
    return OutcomeFrame(vectors=np.array(rows))


def joint_distribution_bruteforce(pair: ObservablePair, psi) -> JointDistribution:
    """Born-rule probabilities |<frame_kl|psi>|^2 for an arbitrary unit state.

    Reference oracle for the amplitude and closed-form routes.
    """
    psi = qmath.as_vector(psi, dim=4)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state vector has norm {norm}, expected 1")
    frame = outcome_frame(pair)
    probs = tuple(abs(qmath.inner(row, psi)) ** 2 for row in frame.vectors)
    return JointDistribution(probs)


def joint_distribution_amplitude(pair: ObservablePair, label: BellLabel) -> JointDistribution:
    """Joint probabilities from the interference amplitude formula."""
    mu, eta, nu, zeta, s, t = _point_arrays(pair, label)
    row = joint_amplitude_batch(mu, eta, nu, zeta, s, t)[0]
    return JointDistribution(tuple(row))


def joint_distribution_closed(pair: ObservablePair, label: BellLabel) -> JointDistribution:
    """Joint probabilities from the closed forms in the angle sums.

    Both equivalent closed-form variants are evaluated; a disagreement beyond
    CLOSED_VARIANT_TOL raises InternalConsistencyError instead of averaging.
    """
    mu, eta, nu, zeta, s, t = _point_arrays(pair, label)
    row = joint_closed_batch(mu, eta, nu, zeta, s, t, check=True)[0]
    return JointDistribution(tuple(row))


def marginals(dist: JointDistribution) -> tuple[tuple[float, float], tuple[float, float]]:
    """Row and column sums: outcome probabilities of each single measurement."""
    p = dist.p
    return (p[0] + p[1], p[2] + p[3]), (p[0] + p[2], p[1] + p[3])


def commutator_norm(pair: ObservablePair) -> float:
    """Frobenius norm of [a tensor I, I tensor b]; zero exactly when they commute."""
    big_a = lift_first(matrix(pair.a))
    big_b = lift_second(matrix(pair.b))
    comm = qmath.mat_mul(big_a, big_b) - qmath.mat_mul(big_b, big_a)
    return qmath.frobenius_norm(comm)


def is_klein_symmetric(dist: JointDistribution, tol: float = 1e-12) -> bool:
    """True when p00 equals p11 and p01 equals p10 within tol."""
    p = dist.p
    return abs(p[0] - p[3]) <= tol and abs(p[1] - p[2]) <= tol


def has_equal_marginals(dist: JointDistribution, tol: float = 1e-12) -> bool:
    """True when all four single-measurement outcome probabilities agree within tol."""
    (pa0, pa1), (pb0, pb1) = marginals(dist)
    values = (pa0, pa1, pb0, pb1)
    return max(values) - min(values) <= tol


# ---------------------------------------------------------------------------
# batch wrappers over the kernels (validated, clamped)
# ---------------------------------------------------------------------------

def _point_arrays(pair: ObservablePair, label: BellLabel):
    return (
        np.array([pair.a.mu]),
        np.array([pair.a.eta]),
        np.array([pair.b.mu]),
        np.array([pair.b.eta]),
        np.array([label.s], dtype=np.int64),
        np.array([label.t], dtype=np.int64),
    )


def _validated_angles(mu, eta, nu, zeta):
    # eta/zeta accept the closed upper end 2*pi, which is equivalent to 0
    bounds = (("mu", mu, math.pi), ("eta", eta, TWO_PI), ("nu", nu, math.pi), ("zeta", zeta, TWO_PI))
    arrays = []
    for name, values, hi in bounds:
        arr = np.ascontiguousarray(values, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"{name} must be a 1-d array, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError(f"{name} contains non-finite values")
        if arr.size and (arr.min() < 0.0 or arr.max() > hi):
            raise ValueError(f"{name} must lie in [0, {hi}]")
        arrays.append(arr)
    n = arrays[0].shape[0]
    if any(a.shape[0] != n for a in arrays):
        raise ValueError("angle arrays must share one length")
    return arrays


def _validated_bits(values, n: int, name: str) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.int64)
    if arr.shape != (n,):
        raise ValueError(f"{name} must be a 1-d array of length {n}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} entries must be 0 or 1")
    return arr


def joint_closed_batch(mu, eta, nu, zeta, s, t, *, check: bool = True) -> np.ndarray:
    """Closed-form probabilities for angle arrays; shape (n, 4), clamped to [0, 1].

    With check=True the alternate variant is evaluated as well and compared.
    """
    mu, eta, nu, zeta = _validated_angles(mu, eta, nu, zeta)
    s = _validated_bits(s, mu.shape[0], "s")
    t = _validated_bits(t, mu.shape[0], "t")
    primary = _kernels.closed_joint(mu, eta, nu, zeta, s, t)
    if check:
        alternate = _kernels.closed_joint_alt(mu, eta, nu, zeta, s, t)
        _require_variant_agreement(primary, alternate)
    return np.clip(primary, 0.0, 1.0)


def joint_closed_alt_batch(mu, eta, nu, zeta, s, t) -> np.ndarray:
    """Alternate closed-form probabilities; shape (n, 4), clamped to [0, 1]."""
    mu, eta, nu, zeta = _validated_angles(mu, eta, nu, zeta)
    s = _validated_bits(s, mu.shape[0], "s")
    t = _validated_bits(t, mu.shape[0], "t")
    return np.clip(_kernels.closed_joint_alt(mu, eta, nu, zeta, s, t), 0.0, 1.0)


def joint_amplitude_batch(mu, eta, nu, zeta, s, t) -> np.ndarray:
    """Amplitude-formula probabilities; shape (n, 4), clamped to [0, 1]."""
    mu, eta, nu, zeta = _validated_angles(mu, eta, nu, zeta)
    s = _validated_bits(s, mu.shape[0], "s")
    t = _validated_bits(t, mu.shape[0], "t")
    return np.clip(_kernels.amplitude_joint(mu, eta, nu, zeta, s, t), 0.0, 1.0)


def joint_bruteforce_batch(mu, eta, nu, zeta, psi) -> np.ndarray:
    """Born-rule probabilities against states psi (n, 4); clamped to [0, 1]."""
    mu, eta, nu, zeta = _validated_angles(mu, eta, nu, zeta)
    psi = np.ascontiguousarray(psi, dtype=np.complex128)
    if psi.shape != (mu.shape[0], 4):
        raise ValueError(f"psi must have shape ({mu.shape[0]}, 4), got {psi.shape}")
    return np.clip(_kernels.bruteforce_joint(mu, eta, nu, zeta, psi), 0.0, 1.0)


def _require_variant_agreement(primary: np.ndarray, alternate: np.ndarray) -> None:
    gap = np.abs(primary - alternate)
    worst = float(gap.max()) if gap.size else 0.0
    if worst > CLOSED_VARIANT_TOL:
        index = int(np.unravel_index(np.argmax(gap), gap.shape)[0])
        raise InternalConsistencyError(
            f"closed-form variants disagree by {worst:.3e} at row {index}"
        )
