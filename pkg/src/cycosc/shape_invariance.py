"""Cyclic shape-invariant partner hierarchy and 2x2 block supercharges.

The hierarchy realizes H^(mu) = F(N + mu) through the mu-shifted algebras:
A_mu and Adag_mu are the ladder operators of the algebra with parameters
rotated by mu, the level spacings are omega_mu = 1 + alpha_mu, and the ground
energies are the prefix sums E0^(mu) = sum(omega_nu for nu < mu).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraParams,
    DomainError,
    InvalidParamsError,
    cyc,
    cyclic_shift,
    derived_constants,
    structure_values,
    validate_fock,
)
from .fock import (
    DEGREE2_HEADROOM,
    RelationEntry,
    RelationReport,
    TruncatedRep,
    build_rep,
)


@dataclass(frozen=True)
class Hierarchy:
    """Partner chain of period p = lam over one truncated Fock tower."""

    params: AlgebraParams
    dim: int
    period: int
    reps: tuple[TruncatedRep, ...]
    e0: np.ndarray
    omega: np.ndarray
    hmats: tuple[np.ndarray, ...]

    def __post_init__(self):
        self.e0.setflags(write=False)
        self.omega.setflags(write=False)
        for m in self.hmats:
            m.setflags(write=False)


@dataclass(frozen=True)
class BlockPair:
    """Supercharges and Hamiltonian of one sector, as 2 dim x 2 dim blocks."""

    mu: int
    H: np.ndarray
    Qdag: np.ndarray
    Q: np.ndarray


def window_violations(params: AlgebraParams) -> tuple[str, ...]:
    """Inequalities the starting parameters must satisfy for the hierarchy.

    -1 < alpha_0 < lam - 1, and for mu = 1..lam-2:
    -1 < alpha_mu < lam - mu - 1 - sum(alpha_nu for nu < mu).
    Together with the zero-sum constraint these make every spacing positive.
    """
    lam = params.lam
    alpha = params.alpha
    beta = derived_constants(params).beta
    violations = []
    if not -1.0 < alpha[0] < lam - 1.0:
        violations.append(f"-1 < alpha_0 < {lam - 1} fails: alpha_0 = {alpha[0]}")
    for mu in range(1, lam - 1):
        upper = lam - mu - 1.0 - beta[mu]
        if not -1.0 < alpha[mu] < upper:
            violations.append(
                f"-1 < alpha_{mu} < {upper} fails: alpha_{mu} = {alpha[mu]}"
            )
    return tuple(violations)


def build_hierarchy(params: AlgebraParams, dim: int) -> Hierarchy:
    """Build the p = lam shifted representations and partner Hamiltonians."""
    check = validate_fock(params)
    if not check.ok:
        raise InvalidParamsError(check.violations)
    bad = window_violations(params)
    if bad:
        raise DomainError("; ".join(bad))
    p = params.lam
    reps = tuple(build_rep(cyclic_shift(params, mu), dim) for mu in range(p))
    consts = derived_constants(params)
    e0 = np.concatenate(([0.0], np.cumsum(consts.omega)))
    fvals = structure_values(params, dim - 1 + p)
    hmats = tuple(np.diag(fvals[mu : mu + dim]) for mu in range(p + 1))
    return Hierarchy(
        params=params,
        dim=dim,
        period=p,
        reps=reps,
        e0=e0,
        omega=consts.omega.copy(),
        hmats=hmats,
    )


def partner_check(h: Hierarchy, tol: float = 1e-12) -> RelationReport:
    """Verify both factorizations of every H^(mu) and the cyclic spacings."""
    hr = DEGREE2_HEADROOM
    dim = h.dim
    p = h.period
    b = slice(0, dim - hr)
    eye = np.eye(dim)
    entries = []

    def add(name: str, residual_matrix: np.ndarray):
        resid = float(np.abs(residual_matrix[b, b]).max())
        entries.append(RelationEntry(name, resid, resid <= tol))

    r0 = h.reps[0]
    add("H^(0) = Adag_0 A_0", h.hmats[0] - (r0.adag @ r0.a).real)
    for mu in range(1, p + 1):
        prev = h.reps[mu - 1]
        add(
            f"H^({mu}) = A_{mu - 1} Adag_{mu - 1} + E0^({mu - 1})",
            h.hmats[mu] - ((prev.a @ prev.adag).real + h.e0[mu - 1] * eye),
        )
        cur = h.reps[cyc(mu, p)]
        add(
            f"H^({mu}) = Adag_{mu} A_{mu} + E0^({mu})",
            h.hmats[mu] - ((cur.adag @ cur.a).real + h.e0[mu] * eye),
        )

    # Spacing claim: consecutive diagonal entries of H^(mu) differ by omega cyclically.
    worst = 0.0
    for mu in range(p + 1):
        diag = np.diag(h.hmats[mu])
        gaps = np.diff(diag[: dim - hr])
        target = h.omega[(np.arange(dim - hr - 1) + mu) % p]
        worst = max(worst, float(np.abs(gaps - target).max()))
    entries.append(
        RelationEntry("H^(mu) spacings realize omega cyclically", worst, worst <= tol)
    )
    return RelationReport(entries=tuple(entries), headroom=hr, tol=tol)


def block_pair(h: Hierarchy, mu: int) -> BlockPair:
    """Sector-mu supercharges: Qdag carries Adag_mu, H stacks the two partners.

    Both diagonal blocks are shifted by the same ground energy E0^(mu), which
    is what makes {Q, Qdag} = H an identity rather than a definition.
    """
    if not 0 <= mu < h.period:
        raise DomainError(f"sector must satisfy 0 <= mu < {h.period}, got {mu}")
    dim = h.dim
    rep = h.reps[mu]
    zero = np.zeros((dim, dim), dtype=complex)
    top = h.hmats[mu] - h.e0[mu] * np.eye(dim)
    bottom = h.hmats[mu + 1] - h.e0[mu] * np.eye(dim)
    H = np.block([[top.astype(complex), zero], [zero, bottom.astype(complex)]])
    Qdag = np.block([[zero, rep.adag], [zero, zero]])
    Q = np.block([[zero, zero], [rep.a, zero]])
    return BlockPair(mu=mu, H=H, Qdag=Qdag, Q=Q)


def _block_mask_max(m: np.ndarray, dim: int, headroom: int) -> float:
    """Max absolute entry over the headroom block of each dim x dim quadrant."""
    keep = np.r_[0 : dim - headroom, dim : 2 * dim - headroom]
    return float(np.abs(m[np.ix_(keep, keep)]).max())


def sqm2_check(h: Hierarchy, mu: int, tol: float = 1e-12) -> RelationReport:
    """Verify Q^2 = 0, [H, Q] = 0, {Q, Qdag} = H for sector mu."""
    pair = block_pair(h, mu)
    hr = DEGREE2_HEADROOM
    dim = h.dim
    entries = []

    def add(name: str, residual_matrix: np.ndarray):
        resid = _block_mask_max(residual_matrix, dim, hr)
        entries.append(RelationEntry(name, resid, resid <= tol))

    add("Q^2 = 0", pair.Q @ pair.Q)
    add("[H, Q] = 0", pair.H @ pair.Q - pair.Q @ pair.H)
    add(
        "{Q, Qdag} = H",
        pair.Q @ pair.Qdag + pair.Qdag @ pair.Q - pair.H,
    )
    return RelationReport(entries=tuple(entries), headroom=hr, tol=tol)
