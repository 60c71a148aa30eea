"""Single-qubit observables with spectrum {1, -1}, parameterized by Bloch angles.

The matrix attached to polar angle mu and azimuthal angle eta is

    [[cos(mu),            exp(-i*eta)*sin(mu)],
     [exp(i*eta)*sin(mu), -cos(mu)           ]]

which identifies the family with the unit sphere of traceless Hermitian 2x2
operators through (x, y, z) = (sin(mu)cos(eta), sin(mu)sin(eta), cos(mu)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

TWO_PI = 2.0 * math.pi

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
IDENTITY2 = np.eye(2, dtype=np.complex128)

DEFAULT_PLANE_TOL = 1e-9


class NamedGate(Enum):
    SIGMA1 = "sigma1"
    SIGMA2 = "sigma2"
    SIGMA3 = "sigma3"
    HADAMARD = "hadamard"


class Plane(Enum):
    """Coordinate planes of the Bloch sphere; GENERIC when none matches."""

    X_ZERO = "x=0"
    Y_ZERO = "y=0"
    Z_ZERO = "z=0"
    GENERIC = "generic"


def normalize_azimuth(eta: float) -> float:
    """Reduce an azimuthal angle into [0, 2*pi)."""
    r = math.fmod(eta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        r = 0.0
    return r


@dataclass(frozen=True)
class Observable:
    """A point (mu, eta) on the Bloch sphere naming a spectrum-{1,-1} operator.

    mu is the polar angle and must lie in [0, pi]; values outside are rejected
    rather than reflected, since reflecting would silently shift eta by pi.
    eta is the azimuthal angle, normalized modulo 2*pi at construction. At the
    poles (mu = 0 or pi) eta only survives as a global eigenvector phase.
    """

    mu: float
    eta: float

    def __post_init__(self) -> None:
        mu = float(self.mu)
        eta = float(self.eta)
        if not (math.isfinite(mu) and math.isfinite(eta)):
            raise ValueError("observable angles must be finite")
        if not 0.0 <= mu <= math.pi:
            raise ValueError(f"polar angle mu must lie in [0, pi], got {mu}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "eta", normalize_azimuth(eta))


@dataclass(frozen=True)
class BlochDirection:
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class PlaneClass:
    """Coordinate planes an observable direction lies in, at a tolerance.

    planes holds every matching plane (a direction along a coordinate axis
    lies in two planes at once) and is (GENERIC,) when no coordinate vanishes.
    """

    planes: tuple[Plane, ...]
    tolerance: float

    def __contains__(self, plane: Plane) -> bool:
        return plane in self.planes

    @property
    def is_generic(self) -> bool:
        return self.planes == (Plane.GENERIC,)


def matrix(obs: Observable) -> np.ndarray:
    """2x2 Hermitian matrix of the observable; trace 0, squares to identity."""
    c, s = math.cos(obs.mu), math.sin(obs.mu)
    phase = complex(math.cos(obs.eta), -math.sin(obs.eta))
    return np.array([[c, phase * s], [phase.conjugate() * s, -c]], dtype=np.complex128)


def eigenvalue(k: int) -> float:
    """Measurement outcome for eigenvector index k: +1 for k=0, -1 for k=1."""
    if k not in (0, 1):
        raise ValueError("eigenvector index must be 0 or 1")
    return 1.0 if k == 0 else -1.0


def eigenvector(obs: Observable, k: int) -> np.ndarray:
    """Unit eigenvector for eigenvalue(k).

    k=0: (exp(-i*eta)*cos(mu/2), sin(mu/2));
    k=1: (-exp(-i*eta)*sin(mu/2), cos(mu/2)).
    """
    if k not in (0, 1):
        raise ValueError("eigenvector index must be 0 or 1")
    half = 0.5 * obs.mu
    tr = (math.cos(half), math.sin(half))
    phase = complex(math.cos(obs.eta), -math.sin(obs.eta))
    sign = 1.0 if k == 0 else -1.0
    return np.array([sign * phase * tr[k], tr[(k + 1) % 2]], dtype=np.complex128)


def direction(obs: Observable) -> BlochDirection:
    """Unit Bloch vector (sin(mu)cos(eta), sin(mu)sin(eta), cos(mu))."""
    s = math.sin(obs.mu)
    return BlochDirection(s * math.cos(obs.eta), s * math.sin(obs.eta), math.cos(obs.mu))


def classify_plane(obs: Observable, tol: float = DEFAULT_PLANE_TOL) -> PlaneClass:
    """Report every coordinate plane whose defining coordinate is within tol."""
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    d = direction(obs)
    hits = []
    if abs(d.x) <= tol:
        hits.append(Plane.X_ZERO)
    if abs(d.y) <= tol:
        hits.append(Plane.Y_ZERO)
    if abs(d.z) <= tol:
        hits.append(Plane.Z_ZERO)
    if not hits:
        hits.append(Plane.GENERIC)
    return PlaneClass(planes=tuple(hits), tolerance=float(tol))


_GATE_ANGLES = {
    NamedGate.SIGMA1: (math.pi / 2.0, 0.0),
    NamedGate.SIGMA2: (math.pi / 2.0, math.pi / 2.0),
    NamedGate.SIGMA3: (0.0, 0.0),
    NamedGate.HADAMARD: (math.pi / 4.0, 0.0),
}


def named_gate(name: NamedGate | str) -> Observable:
    """Observable whose matrix is the named Pauli or Hadamard gate."""
    gate = NamedGate(name.lower()) if isinstance(name, str) else name
    mu, eta = _GATE_ANGLES[gate]
    return Observable(mu, eta)
