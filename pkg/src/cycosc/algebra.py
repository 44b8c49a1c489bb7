"""Parameter handling and closed-form constants for C_lambda-extended oscillator algebras.

An algebra of order lam is specified by lam real parameters alpha_0..alpha_{lam-1}
summing to zero.  Everything else used downstream (beta, gamma, omega, the
structure function F, the kappa coordinates) is a closed-form function of alpha
and lives here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

REAL_TOL = 1e-12


class DomainError(ValueError):
    """Input outside the domain an operation is defined on."""


class SymmetryError(DomainError):
    """Kappa vector violates the conjugation symmetry kappa_mu* = kappa_{lam-mu}."""


class InvalidParamsError(DomainError):
    """Parameters fail the Fock-space existence condition.

    Carries the residue classes mu at which F(mu) <= 0.
    """

    def __init__(self, violations: tuple[int, ...]):
        self.violations = violations
        super().__init__(
            "no Fock representation: F(mu) <= 0 at mu = "
            + ", ".join(str(v) for v in violations)
        )


def cyc(index: int, lam: int) -> int:
    """Reduce a residue-class index mod lam.

    Every formula site indexes alpha, beta, gamma, and the projectors cyclically.
    """
    return index % lam


@dataclass(frozen=True)
class AlgebraParams:
    """Order lam and the full parameter vector alpha, with sum(alpha) = 0.

    Use new_params to construct: the last entry is always derived from the
    first lam - 1, so the zero-sum constraint holds by construction.
    """

    lam: int
    alpha: np.ndarray

    def __post_init__(self):
        if self.lam < 2:
            raise DomainError(f"order must be >= 2, got {self.lam}")
        alpha = np.asarray(self.alpha, dtype=float)
        if alpha.shape != (self.lam,):
            raise DomainError(f"alpha must have length {self.lam}, got {alpha.shape}")
        if not np.all(np.isfinite(alpha)):
            raise DomainError("alpha entries must be finite")
        alpha = alpha.copy()
        alpha.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class KappaParams:
    """Complex coordinates kappa_1..kappa_{lam-1} on the same parameter space.

    Subject to kappa_mu* = kappa_{lam-mu}; purely an alternate chart on alpha.
    """

    kappa: np.ndarray

    def __post_init__(self):
        kappa = np.asarray(self.kappa, dtype=complex).copy()
        if kappa.ndim != 1 or kappa.size < 1:
            raise DomainError("kappa must be a nonempty vector")
        if not np.all(np.isfinite(kappa)):
            raise DomainError("kappa entries must be finite")
        kappa.setflags(write=False)
        object.__setattr__(self, "kappa", kappa)

    @property
    def lam(self) -> int:
        return self.kappa.size + 1


@dataclass(frozen=True)
class DerivedConstants:
    """Prefix sums beta, Hamiltonian offsets gamma, and level spacings omega.

    beta_0 = 0, beta_mu = sum(alpha_nu for nu < mu), gamma_mu = beta_mu + alpha_mu / 2,
    omega_mu = 1 + alpha_mu.
    """

    beta: np.ndarray
    gamma: np.ndarray
    omega: np.ndarray

    def __post_init__(self):
        for name in ("beta", "gamma", "omega"):
            arr = np.asarray(getattr(self, name), dtype=float).copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class FockValidation:
    """Outcome of the existence check F(mu) > 0 for mu = 1..lam-1."""

    ok: bool
    violations: tuple[int, ...]


def new_params(lam: int, alpha_head: "np.ndarray | list[float]") -> AlgebraParams:
    """Build AlgebraParams from the first lam - 1 entries of alpha.

    The last entry is set to minus the prefix sum of the head, so the zero-sum
    constraint is exact in floating point.  The Fock condition is not enforced
    here; see validate_fock.
    """
    if lam < 2:
        raise DomainError(f"order must be >= 2, got {lam}")
    head = np.asarray(alpha_head, dtype=float)
    if head.shape != (lam - 1,):
        raise DomainError(f"alpha_head must have length {lam - 1}, got {head.shape}")
    if not np.all(np.isfinite(head)):
        raise DomainError("alpha_head entries must be finite")
    alpha = np.empty(lam)
    alpha[:-1] = head
    # Sequential prefix sum: the derived entry cancels beta_{lam-1} exactly,
    # so F(lam) = lam holds bitwise downstream.
    alpha[-1] = -float(np.cumsum(head)[-1])
    return AlgebraParams(lam=lam, alpha=alpha)


def derived_constants(params: AlgebraParams) -> DerivedConstants:
    """Compute beta, gamma, omega from alpha by prefix sums."""
    alpha = params.alpha
    beta = np.concatenate(([0.0], np.cumsum(alpha)[:-1]))
    gamma = beta + alpha / 2.0
    omega = 1.0 + alpha
    return DerivedConstants(beta=beta, gamma=gamma, omega=omega)


def validate_fock(params: AlgebraParams) -> FockValidation:
    """Check the Fock-space existence condition F(mu) > 0, mu = 1..lam-1.

    Returns the violations instead of raising, so invalid parameter regions can
    still be swept and mapped.
    """
    beta = derived_constants(params).beta
    violations = tuple(
        mu for mu in range(1, params.lam) if not mu + beta[mu] > 0.0
    )
    return FockValidation(ok=not violations, violations=violations)


def structure_function(params: AlgebraParams, n: int) -> float:
    """Evaluate F(n) = n + beta_{n mod lam}; F(0) = 0 always."""
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    beta = derived_constants(params).beta
    return float(n + beta[cyc(n, params.lam)])


def structure_values(params: AlgebraParams, n_max: int) -> np.ndarray:
    """Vector of F(0), F(1), ..., F(n_max)."""
    if n_max < 0:
        raise DomainError(f"level index must be >= 0, got {n_max}")
    beta = derived_constants(params).beta
    n = np.arange(n_max + 1)
    return n + beta[n % params.lam]


def cyclic_shift(params: AlgebraParams, mu: int) -> AlgebraParams:
    """Rotate the parameter vector: alpha'_nu = alpha_{nu + mu mod lam}.

    A pure permutation: entries are moved verbatim, so composing lam shifts
    restores the original bitwise and the zero sum is preserved as a value.
    """
    if not 0 <= mu < params.lam:
        raise DomainError(f"shift must satisfy 0 <= mu < {params.lam}, got {mu}")
    return AlgebraParams(lam=params.lam, alpha=np.roll(params.alpha, -mu))


def kappa_from_alpha(params: AlgebraParams) -> KappaParams:
    """Inverse Fourier transform of alpha restricted to nu = 1..lam-1.

    kappa_nu = (1/lam) sum_mu exp(-2i pi mu nu / lam) alpha_mu.  The zero-sum
    constraint on alpha plays the role of the absent nu = 0 coefficient.
    """
    lam = params.lam
    if abs(float(np.sum(params.alpha))) > REAL_TOL:
        raise DomainError("alpha must sum to zero")
    mu = np.arange(lam)
    nu = np.arange(1, lam)
    phases = np.exp(-2j * np.pi * np.outer(mu, nu) / lam)
    kappa = phases.T @ params.alpha.astype(complex) / lam
    return KappaParams(kappa=kappa)


def alpha_from_kappa(kappa_params: KappaParams, lam: int) -> AlgebraParams:
    """Finite Fourier sum alpha_mu = sum_nu exp(2i pi mu nu / lam) kappa_nu.

    Requires the conjugation symmetry kappa_nu* = kappa_{lam-nu}, which makes
    the result real; imaginary parts below 1e-12 are dropped.
    """
    kappa = kappa_params.kappa
    if lam != kappa.size + 1:
        raise DomainError(f"kappa must have length {lam - 1}, got {kappa.size}")
    for nu in range(1, lam):
        if abs(np.conj(kappa[nu - 1]) - kappa[lam - nu - 1]) > REAL_TOL:
            raise SymmetryError(
                f"kappa_{nu}* != kappa_{lam - nu}: conjugation symmetry violated"
            )
    mu = np.arange(lam)
    nu = np.arange(1, lam)
    phases = np.exp(2j * np.pi * np.outer(mu, nu) / lam)
    alpha = phases @ kappa
    if np.abs(alpha.imag).max() > REAL_TOL:
        raise SymmetryError("transform produced non-real alpha")
    # Rebuild through new_params to restore the exact zero-sum invariant.
    return new_params(lam, alpha.real[: lam - 1])


def params_to_dict(params: AlgebraParams) -> dict:
    """Canonical JSON form: {"lambda": int, "alpha": [reals]}."""
    return {"lambda": params.lam, "alpha": [float(a) for a in params.alpha]}


def params_from_dict(obj: dict) -> AlgebraParams:
    """Load the canonical JSON form, accepting either full alpha or its head."""
    try:
        lam = int(obj["lambda"])
        alpha = [float(a) for a in obj["alpha"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed params object: {exc}") from exc
    if len(alpha) == lam:
        if abs(math.fsum(alpha)) > REAL_TOL:
            raise DomainError("alpha must sum to zero")
        return new_params(lam, alpha[: lam - 1])
    if len(alpha) == lam - 1:
        return new_params(lam, alpha)
    raise DomainError(
        f"alpha must have length {lam} or {lam - 1}, got {len(alpha)}"
    )
