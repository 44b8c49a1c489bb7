"""Truncated Fock-space matrix representation and defining-relation checks.

The representation acts on the number basis |0>..|D-1> with ladder matrix
elements sqrt(F(n)).  Truncation corrupts only the top of the tower, so every
identity is verified on a headroom-restricted block of rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraParams,
    DomainError,
    InvalidParamsError,
    cyc,
    derived_constants,
    structure_values,
    validate_fock,
)

# Headroom covering every relation of degree <= 2 in the ladder operators.
DEGREE2_HEADROOM = 3


@dataclass(frozen=True)
class RelationEntry:
    """One verified identity: its name, residual, and pass flag.

    For ordinary entries passed means residual <= tol.  Entries with
    nonzero=True assert a matrix is NOT negligible, so passed means
    residual > tol there.
    """

    name: str
    residual: float
    passed: bool
    nonzero: bool = False


@dataclass(frozen=True)
class RelationReport:
    """Residuals of a batch of operator identities on the headroom block."""

    entries: tuple[RelationEntry, ...]
    headroom: int
    tol: float

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> tuple[RelationEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def residual(self, name: str) -> float:
        for e in self.entries:
            if e.name == name:
                return e.residual
        raise KeyError(name)

    @property
    def max_residual(self) -> float:
        """Largest residual among ordinary (non-nonzero) entries."""
        vals = [e.residual for e in self.entries if not e.nonzero]
        return max(vals) if vals else 0.0


@dataclass(frozen=True)
class TruncatedRep:
    """Dense matrices for a, adag, N, T, P_mu at truncation dimension dim."""

    params: AlgebraParams
    dim: int
    a: np.ndarray
    adag: np.ndarray
    nmat: np.ndarray
    proj: tuple[np.ndarray, ...]
    tmat: np.ndarray

    def __post_init__(self):
        for name in ("a", "adag", "nmat", "tmat"):
            arr = getattr(self, name)
            arr.setflags(write=False)
        for p in self.proj:
            p.setflags(write=False)


def headroom_block(dim: int, headroom: int) -> slice:
    """Row/column slice excluding the top headroom levels."""
    return slice(0, dim - headroom)


def block_max(m: np.ndarray, headroom: int) -> float:
    """Max absolute entry of m restricted to the headroom block."""
    b = headroom_block(m.shape[0], headroom)
    return float(np.abs(m[b, b]).max())


def build_rep(params: AlgebraParams, dim: int) -> TruncatedRep:
    """Build the truncated representation of a valid algebra.

    a has sqrt(F(n)) at (n-1, n), adag is its conjugate transpose, N is
    diagonal, P_mu projects onto levels n = mu mod lam, and T = exp(2i pi N / lam).
    """
    check = validate_fock(params)
    if not check.ok:
        raise InvalidParamsError(check.violations)
    lam = params.lam
    if dim < 2 * lam:
        raise DomainError(f"dimension must be >= {2 * lam}, got {dim}")
    fvals = structure_values(params, dim - 1)
    a = np.diag(np.sqrt(fvals[1:]), k=1).astype(complex)
    adag = a.conj().T.copy()
    nmat = np.diag(np.arange(dim, dtype=float))
    levels = np.arange(dim)
    proj = tuple(
        np.diag((levels % lam == mu).astype(complex)) for mu in range(lam)
    )
    tmat = np.diag(np.exp(2j * np.pi * levels / lam))
    return TruncatedRep(
        params=params, dim=dim, a=a, adag=adag, nmat=nmat, proj=proj, tmat=tmat
    )


def check_relations(rep: TruncatedRep, tol: float = 1e-12) -> RelationReport:
    """Verify the defining relations and structure-function identities.

    All relations are degree <= 2 in the generators, checked on rows and
    columns n < dim - 3.
    """
    lam = rep.params.lam
    dim = rep.dim
    h = DEGREE2_HEADROOM
    alpha = rep.params.alpha
    a, adag, nmat, tmat = rep.a, rep.adag, rep.nmat, rep.tmat
    eye = np.eye(dim, dtype=complex)
    fvals = structure_values(rep.params, dim)

    entries = []

    def add(name: str, residual_matrices: "np.ndarray | list[np.ndarray]"):
        if isinstance(residual_matrices, np.ndarray):
            residual_matrices = [residual_matrices]
        resid = max(block_max(m, h) for m in residual_matrices)
        entries.append(RelationEntry(name, resid, resid <= tol))

    add("[N, adag] = adag", nmat @ adag - adag @ nmat - adag)
    add("[N, P_mu] = 0", [nmat @ p - p @ nmat for p in rep.proj])
    add("sum_mu P_mu = I", sum(rep.proj) - eye)
    gmat = eye + sum(alpha[mu] * rep.proj[mu] for mu in range(lam))
    add("[a, adag] = I + sum alpha_mu P_mu", a @ adag - adag @ a - gmat)
    add(
        "adag P_mu = P_{mu+1} adag",
        [adag @ rep.proj[mu] - rep.proj[cyc(mu + 1, lam)] @ adag for mu in range(lam)],
    )
    add(
        "P_mu P_nu = delta_{mu,nu} P_mu",
        [
            rep.proj[mu] @ rep.proj[nu] - (rep.proj[mu] if mu == nu else 0.0)
            for mu in range(lam)
            for nu in range(lam)
        ],
    )
    add("adag a = F(N)", adag @ a - np.diag(fvals[:dim]).astype(complex))
    add("a adag = F(N+1)", a @ adag - np.diag(fvals[1:]).astype(complex))

    tpow = np.linalg.matrix_power(tmat, lam)
    add("T^lam = I", tpow - eye)
    w = np.exp(-2j * np.pi / lam)
    add("adag T = exp(-2i pi/lam) T adag", adag @ tmat - w * (tmat @ adag))
    add("a T = exp(2i pi/lam) T a", a @ tmat - np.conj(w) * (tmat @ a))

    return RelationReport(entries=tuple(entries), headroom=h, tol=tol)


def klein_reduction_check(rep: TruncatedRep, tol: float = 1e-12) -> RelationReport:
    """Verify the order-2 reduction: T = (-1)^N and [a, adag] = I + kappa (-1)^N."""
    if rep.params.lam != 2:
        raise DomainError(f"reduction requires order 2, got {rep.params.lam}")
    dim = rep.dim
    kappa = float(rep.params.alpha[0])
    klein = np.diag((-1.0 + 0j) ** np.arange(dim))
    entries = []

    resid_t = float(np.abs(rep.tmat - klein).max())
    entries.append(RelationEntry("T = (-1)^N", resid_t, resid_t <= tol))

    comm = rep.a @ rep.adag - rep.adag @ rep.a
    target = np.eye(dim, dtype=complex) + kappa * klein
    resid_c = block_max(comm - target, DEGREE2_HEADROOM)
    entries.append(
        RelationEntry("[a, adag] = I + kappa (-1)^N", resid_c, resid_c <= tol)
    )
    return RelationReport(entries=tuple(entries), headroom=DEGREE2_HEADROOM, tol=tol)


def _matrix_to_pairs(m: np.ndarray) -> list:
    """Row-major nested list of [re, im] pairs."""
    mc = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mc]


def rep_to_dict(rep: TruncatedRep) -> dict:
    """JSON-ready dump of all generator matrices for cross-checking."""
    matrices = {
        "a": _matrix_to_pairs(rep.a),
        "adag": _matrix_to_pairs(rep.adag),
        "n": _matrix_to_pairs(rep.nmat),
        "t": _matrix_to_pairs(rep.tmat),
    }
    for mu, p in enumerate(rep.proj):
        matrices[f"p{mu}"] = _matrix_to_pairs(p)
    return {
        "lambda": rep.params.lam,
        "alpha": [float(x) for x in rep.params.alpha],
        "dim": rep.dim,
        "matrices": matrices,
    }
