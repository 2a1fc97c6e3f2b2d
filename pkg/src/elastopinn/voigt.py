"""Symmetric second-order tensors in 6-component Voigt form.

Component order is (11, 22, 33, 12, 13, 23).  Storage always holds plain
tensor components: shear entries are NOT doubled.  The factor of two on
shear terms lives exclusively inside ``double_contract`` and the stiffness
action, so there is a single contraction convention to test.

Every operation is generic over the scalar type: components may be floats,
numpy arrays, or autodiff expressions.  The constitutive formulas are
therefore written once and reused by both the ODE integrator and the
differentiable loss assembly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveModulus

VOIGT_ORDER = ("11", "22", "33", "12", "13", "23")
NORMAL = (0, 1, 2)
SHEAR = (3, 4, 5)
# contraction weights: normal terms once, shear terms twice
CONTRACT_W = (1.0, 1.0, 1.0, 2.0, 2.0, 2.0)


def generic_sqrt(x):
    """Square root that dispatches on the scalar type."""
    if isinstance(x, (int, float)):
        return math.sqrt(x)
    if isinstance(x, np.ndarray):
        return np.sqrt(x)
    return x.sqrt()


class SymTensor:
    """Symmetric tensor stored as 6 tensor components (no shear doubling)."""

    __slots__ = ("v",)

    def __init__(self, components):
        v = tuple(components)
        if len(v) != 6:
            raise ValueError(f"expected 6 components, got {len(v)}")
        self.v = v

    @classmethod
    def zero(cls) -> "SymTensor":
        return cls((0.0,) * 6)

    @classmethod
    def identity(cls, scale=1.0) -> "SymTensor":
        return cls((scale, scale, scale, 0.0, 0.0, 0.0))

    @classmethod
    def diag(cls, a, b, c) -> "SymTensor":
        return cls((a, b, c, 0.0, 0.0, 0.0))

    @classmethod
    def from_array(cls, arr) -> "SymTensor":
        return cls(tuple(float(x) for x in arr))

    def as_array(self) -> np.ndarray:
        return np.array(self.v, dtype=float)

    def as_matrix(self) -> np.ndarray:
        """Full 3x3 matrix; float components only."""
        a11, a22, a33, a12, a13, a23 = (float(x) for x in self.v)
        return np.array([[a11, a12, a13], [a12, a22, a23], [a13, a23, a33]])

    def __add__(self, other: "SymTensor") -> "SymTensor":
        return SymTensor(tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return SymTensor(tuple(a - b for a, b in zip(self.v, other.v)))

    def __neg__(self) -> "SymTensor":
        return SymTensor(tuple(-a for a in self.v))

    def __mul__(self, c) -> "SymTensor":
        return SymTensor(tuple(a * c for a in self.v))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SymTensor{self.v!r}"


def trace(x: SymTensor):
    return x.v[0] + x.v[1] + x.v[2]


def dev(x: SymTensor) -> SymTensor:
    """Deviatoric part: x minus its volumetric share."""
    m = trace(x) * (1.0 / 3.0)
    return SymTensor((x.v[0] - m, x.v[1] - m, x.v[2] - m, x.v[3], x.v[4], x.v[5]))


def double_contract(a: SymTensor, b: SymTensor):
    """Full contraction a:b -- normal terms once, shear terms twice."""
    acc = a.v[0] * b.v[0]
    acc = acc + a.v[1] * b.v[1]
    acc = acc + a.v[2] * b.v[2]
    acc = acc + 2.0 * (a.v[3] * b.v[3])
    acc = acc + 2.0 * (a.v[4] * b.v[4])
    acc = acc + 2.0 * (a.v[5] * b.v[5])
    return acc


def norm(x: SymTensor):
    """Frobenius norm of the full tensor."""
    return generic_sqrt(double_contract(x, x))


def invariants(sigma: SymTensor, beta: SymTensor | None = None):
    """Mean pressure, equivalent shear stress, and kinematic deviator.

    Returns ``(p, tau, eta)`` with p = -tr(sigma)/3 (compression positive),
    eta = dev(sigma) - beta, and tau = sqrt(3/2) * ||eta||.
    """
    p = -trace(sigma) * (1.0 / 3.0)
    eta = dev(sigma)
    if beta is not None:
        eta = eta - beta
    tau = generic_sqrt(1.5 * double_contract(eta, eta))
    return p, tau, eta


@dataclass(frozen=True)
class Stiffness:
    """Isotropic fourth-order elasticity operator parameterized by (kappa, mu)."""

    kappa: float
    mu: float

    def apply(self, eps: SymTensor) -> SymTensor:
        """C : eps = (kappa - 2mu/3) tr(eps) 1 + 2 mu eps."""
        lam_v = (self.kappa - 2.0 * self.mu / 3.0) * trace(eps)
        two_mu = 2.0 * self.mu
        return SymTensor((
            lam_v + two_mu * eps.v[0],
            lam_v + two_mu * eps.v[1],
            lam_v + two_mu * eps.v[2],
            two_mu * eps.v[3],
            two_mu * eps.v[4],
            two_mu * eps.v[5],
        ))

    def apply_inverse(self, sig: SymTensor) -> SymTensor:
        """Compliance action: volumetric over 3 kappa, deviatoric over 2 mu."""
        vol = trace(sig) * (1.0 / (9.0 * self.kappa))
        d = dev(sig)
        inv_2mu = 1.0 / (2.0 * self.mu)
        return SymTensor((
            vol + inv_2mu * d.v[0],
            vol + inv_2mu * d.v[1],
            vol + inv_2mu * d.v[2],
            inv_2mu * d.v[3],
            inv_2mu * d.v[4],
            inv_2mu * d.v[5],
        ))

    def matrix(self) -> np.ndarray:
        """6x6 matrix acting on tensor-component Voigt vectors."""
        k, mu = self.kappa, self.mu
        lam = k - 2.0 * mu / 3.0
        m = np.zeros((6, 6))
        m[:3, :3] = lam
        m[0, 0] += 2.0 * mu
        m[1, 1] += 2.0 * mu
        m[2, 2] += 2.0 * mu
        m[3, 3] = m[4, 4] = m[5, 5] = 2.0 * mu
        return m


def elastic_stiffness(kappa: float, mu: float) -> Stiffness:
    if not (kappa > 0.0 and mu > 0.0):
        raise NonPositiveModulus(f"kappa={kappa}, mu={mu} must both be > 0")
    return Stiffness(kappa, mu)


def convert_moduli(kappa: float, mu: float) -> tuple[float, float]:
    """(kappa, mu) -> (E, nu), inverting mu = E/2(1+nu), kappa = E/3(1-2nu)."""
    if not (kappa > 0.0 and mu > 0.0):
        raise NonPositiveModulus(f"kappa={kappa}, mu={mu} must both be > 0")
    e = 9.0 * kappa * mu / (3.0 * kappa + mu)
    nu = (3.0 * kappa - 2.0 * mu) / (2.0 * (3.0 * kappa + mu))
    return e, nu


def moduli_from_youngs(e: float, nu: float) -> tuple[float, float]:
    """(E, nu) -> (kappa, mu)."""
    kappa = e / (3.0 * (1.0 - 2.0 * nu))
    mu = e / (2.0 * (1.0 + nu))
    return kappa, mu
