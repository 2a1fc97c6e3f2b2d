"""Material-law catalogue for the generalized von Mises / Drucker-Prager family.

Yield surface, plastic potential, flow direction, hardening rules, isotropic
damage, and the consistency-condition plastic multiplier rate.  The kernels
at the bottom are scalar-generic (floats, arrays, or autodiff expressions);
the public wrappers add the float-path policies (hard errors on degenerate
states) used by the forward integrator.

Conventions:
  yield surface   F = R tau - M p - K(alpha)        (tau, p from the
                  kinematic deviator eta = dev(sigma) - beta)
  potential       G = R tau, so the flow direction r = R sqrt(3/2) eta/||eta||
                  is deviatoric with ||r|| = R sqrt(3/2)
  hardening       K(alpha) = sigma_y0 + kbar alpha + kbar2 alpha^2,
                  beta_rate = (2/3) hbar gamma_rate r (linear kinematic)
  damage          omega = alpha / alpha_s on [0, alpha_s], all stress-space
                  quantities evaluated at the effective stress sigma/(1-omega)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import (
    DamageSaturated,
    DegenerateStressState,
    NonPositiveDenominator,
    NonPositiveModulus,
)
from .voigt import (
    Stiffness,
    SymTensor,
    dev,
    double_contract,
    generic_sqrt,
    invariants,
    trace,
)

OMEGA_CAP_MARGIN = 1e-6
# below this fraction of sigma_y0 the kinematic deviator counts as degenerate
ETA_TOL_REL = 1e-12

PARAM_FIELDS = ("kappa", "mu", "sigma_y0", "kbar", "kbar2", "hbar", "m", "alpha_s", "r")


class ModelKind(Enum):
    VMIH = "vmih"
    VMKH = "vmkh"
    VM_MIXED = "vm_mixed"
    DRUCKER_PRAGER = "drucker_prager"
    VM_DAMAGE = "vm_damage"
    DISCOVERY_GENERAL = "discovery_general"

    @property
    def kinematic_on(self) -> bool:
        return self in (ModelKind.VMKH, ModelKind.VM_MIXED)

    @property
    def damage_on(self) -> bool:
        return self is ModelKind.VM_DAMAGE

    @property
    def pressure_on(self) -> bool:
        return self in (ModelKind.DRUCKER_PRAGER, ModelKind.DISCOVERY_GENERAL)

    @property
    def quadratic_hardening_on(self) -> bool:
        return self is ModelKind.DISCOVERY_GENERAL

    def default_trainables(self) -> tuple[str, ...]:
        return {
            ModelKind.VMIH: ("kappa", "mu", "sigma_y0", "kbar"),
            ModelKind.VMKH: ("kappa", "mu", "sigma_y0", "hbar"),
            ModelKind.VM_MIXED: ("kappa", "mu", "sigma_y0", "kbar", "hbar"),
            ModelKind.DRUCKER_PRAGER: ("kappa", "mu", "sigma_y0", "m"),
            ModelKind.VM_DAMAGE: ("kappa", "mu", "sigma_y0", "alpha_s"),
            ModelKind.DISCOVERY_GENERAL: ("kappa", "mu", "sigma_y0", "kbar", "m", "kbar2"),
        }[self]


@dataclass(frozen=True)
class MaterialParams:
    """Physical parameter set; unused entries stay at zero for a given kind."""

    kappa: float
    mu: float
    sigma_y0: float
    kbar: float = 0.0
    kbar2: float = 0.0
    hbar: float = 0.0
    m: float = 0.0
    alpha_s: float = 0.0
    r: float = 1.0
    trainable: tuple[str, ...] = field(default=(), compare=False)

    def validate(self, kind: ModelKind | None = None) -> None:
        if not (self.kappa > 0.0 and self.mu > 0.0):
            raise NonPositiveModulus(f"kappa={self.kappa}, mu={self.mu}")
        if not self.sigma_y0 > 0.0:
            raise ValueError(f"sigma_y0={self.sigma_y0} must be > 0")
        if self.m < 0.0:
            raise ValueError(f"m={self.m} must be >= 0")
        if kind is not None and kind.damage_on and not self.alpha_s > 0.0:
            raise ValueError("alpha_s must be > 0 when damage is enabled")

    def stiffness(self) -> Stiffness:
        return Stiffness(self.kappa, self.mu)

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAM_FIELDS}

    @classmethod
    def from_dict(cls, d: dict, trainable: tuple[str, ...] = ()) -> "MaterialParams":
        return cls(**{name: float(d[name]) for name in PARAM_FIELDS}, trainable=trainable)

    def with_values(self, **updates) -> "MaterialParams":
        return replace(self, **updates)


@dataclass
class HardeningState:
    """Equivalent plastic strain and deviatoric back stress."""

    alpha: float = 0.0
    beta: SymTensor = field(default_factory=SymTensor.zero)

    def validate(self) -> None:
        if self.alpha < 0.0:
            raise ValueError(f"alpha={self.alpha} must be >= 0")
        scale = max(abs(c) for c in self.beta.v) + 1.0
        if abs(trace(self.beta)) > 1e-9 * scale:
            raise ValueError("back stress must be deviatoric")


# --------------------------------------------------------------------------
# scalar-generic kernels (shared by the integrator and the loss assembly)
# --------------------------------------------------------------------------

def hardening_kernel(alpha, sigma_y0, kbar, kbar2):
    """K(alpha) and K'(alpha) for the (possibly quadratic) isotropic law."""
    k = sigma_y0 + kbar * alpha + kbar2 * (alpha * alpha)
    kprime = kbar + 2.0 * kbar2 * alpha
    return k, kprime


def flow_kernel(eta: SymTensor, eta_norm, r_shape) -> tuple[SymTensor, object]:
    """Flow direction r = R sqrt(3/2) eta/||eta|| given a safe ||eta||."""
    scale = r_shape * generic_sqrt(1.5) / eta_norm
    r_dir = eta * scale
    return r_dir, scale


def multiplier_rate_kernel(n_dir: SymTensor, r_dir: SymTensor, eps_dot: SymTensor,
                           stiff: Stiffness, kprime, hprime):
    """Numerator and denominator of the consistency-condition rate."""
    num = double_contract(n_dir, stiff.apply(eps_dot))
    n_c_r = double_contract(n_dir, stiff.apply(r_dir))
    rr = double_contract(r_dir, r_dir)
    den = n_c_r + generic_sqrt(2.0 / 3.0 * rr) * kprime + (2.0 / 3.0 * rr) * hprime
    return num, den


# --------------------------------------------------------------------------
# float-path operations
# --------------------------------------------------------------------------

def hardening_K(alpha: float, p: MaterialParams) -> tuple[float, float]:
    return hardening_kernel(alpha, p.sigma_y0, p.kbar, p.kbar2)


def damage_omega(alpha: float, p: MaterialParams) -> tuple[float, float]:
    """Damage ramp alpha/alpha_s clamped to [0, 1 - cap margin].

    The derivative is 1/alpha_s strictly inside the ramp and zero outside,
    so iterates that overshoot saturation stop growing instead of erroring.
    """
    cap = 1.0 - OMEGA_CAP_MARGIN
    raw = alpha / p.alpha_s
    if raw <= 0.0:
        return 0.0, 0.0
    if raw >= cap:
        return cap, 0.0
    return raw, 1.0 / p.alpha_s


def effective_stress(sigma: SymTensor, omega: float) -> SymTensor:
    if omega >= 1.0 - OMEGA_CAP_MARGIN:
        raise DamageSaturated(f"omega={omega}")
    return sigma * (1.0 / (1.0 - omega))


def _stress_for_kind(sigma: SymTensor, state: HardeningState, p: MaterialParams,
                     kind: ModelKind) -> SymTensor:
    if kind.damage_on:
        omega, _ = damage_omega(state.alpha, p)
        return effective_stress(sigma, omega)
    return sigma


def yield_F(sigma: SymTensor, state: HardeningState, p: MaterialParams,
            kind: ModelKind) -> float:
    """Yield function evaluated at the (effective, for damage) stress state."""
    s = _stress_for_kind(sigma, state, p, kind)
    pm, tau, _ = invariants(s, state.beta)
    k, _ = hardening_K(state.alpha, p)
    return p.r * tau - p.m * pm - k


def flow_and_normal(sigma: SymTensor, state: HardeningState, p: MaterialParams,
                    kind: ModelKind) -> tuple[SymTensor, SymTensor]:
    """Plastic flow direction r and yield normal n.

    With compression-positive mean stress p = -tr(sigma)/3, the gradient of
    F = R tau - M p - K picks up a POSITIVE volumetric term:
    n = r + (M/3) 1.  Verified against central differences of F.
    """
    s = _stress_for_kind(sigma, state, p, kind)
    eta = dev(s) - state.beta
    eta_norm = generic_sqrt(double_contract(eta, eta))
    if eta_norm <= ETA_TOL_REL * p.sigma_y0:
        raise DegenerateStressState(f"||eta||={eta_norm}")
    r_dir, _ = flow_kernel(eta, eta_norm, p.r)
    third_m = p.m / 3.0
    n_dir = SymTensor((r_dir.v[0] + third_m, r_dir.v[1] + third_m, r_dir.v[2] + third_m,
                       r_dir.v[3], r_dir.v[4], r_dir.v[5]))
    return r_dir, n_dir


def hardening_rates(gamma_dot: float, r_dir: SymTensor,
                    p: MaterialParams) -> tuple[float, SymTensor]:
    """alpha and back-stress rates for a given plastic multiplier rate."""
    rr = double_contract(r_dir, r_dir)
    alpha_dot = gamma_dot * generic_sqrt(2.0 / 3.0 * rr)
    beta_dot = r_dir * ((2.0 / 3.0) * p.hbar * gamma_dot)
    return alpha_dot, beta_dot


def plastic_multiplier_rate(sigma: SymTensor, state: HardeningState,
                            eps_dot: SymTensor, p: MaterialParams,
                            kind: ModelKind) -> float:
    """Consistency-condition rate; valid on the yield surface under loading."""
    r_dir, n_dir = flow_and_normal(sigma, state, p, kind)
    _, kprime = hardening_K(state.alpha, p)
    num, den = multiplier_rate_kernel(n_dir, r_dir, eps_dot, p.stiffness(), kprime, p.hbar)
    if den <= 0.0:
        raise NonPositiveDenominator(f"denominator={den}")
    return num / den
