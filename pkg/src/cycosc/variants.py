"""Charge/Hamiltonian pairs for the supersymmetry variants and their checks.

Each builder realizes one representative solution family over a truncated
representation: order-p parasupersymmetry (lam = p + 1), the two
pseudosupersymmetry families (lam = 3), and order-2 orthosupersymmetry
(lam = 3).  Every Hamiltonian is diagonal in the number basis.

Numerical care: square roots of differences are evaluated in factored form,
such as (sqrt(2) - xi) * (sqrt(2) + xi), so the special points eta = sqrt(2)|c|
and xi = sqrt(2) produce exact zeros instead of rounding dust.  The diagonal
shift shared by the order-2 parasupersymmetric and family-1 pseudosupersymmetric
Hamiltonians goes through one helper so the two coincide bitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraParams,
    DomainError,
    InvalidParamsError,
    cyc,
    derived_constants,
    validate_fock,
)
from .fock import RelationEntry, RelationReport, build_rep, headroom_block

KIND_PSSQM = "pssqm"
KIND_PSEUDO1 = "pseudo-family1"
KIND_PSEUDO2 = "pseudo-family2"
KIND_OSSQM = "ossqm"


@dataclass(frozen=True)
class VariantSolution:
    """A charge/Hamiltonian pair (plus a second charge for orthosupersymmetry)."""

    kind: str
    mu: int
    free_params: dict
    r_values: dict
    Q: np.ndarray
    H: np.ndarray
    params: AlgebraParams
    dim: int
    Q2: np.ndarray | None = None

    def __post_init__(self):
        self.Q.setflags(write=False)
        self.H.setflags(write=False)
        if self.Q2 is not None:
            self.Q2.setflags(write=False)


@dataclass(frozen=True)
class GroundState:
    """Lowest diagonal entry of H, its multiplicity, and the broken flag."""

    energy: float
    multiplicity: int
    broken: bool


def _h_diagonal(lam: int, dim: int, shift: float, grade_weights: np.ndarray) -> np.ndarray:
    """Real diagonal matrix n + shift + w_{n mod lam}, shared by all builders."""
    n = np.arange(dim, dtype=float)
    diag = n + shift + np.asarray(grade_weights, dtype=float)[np.arange(dim) % lam]
    return np.diag(diag)


def _order2_shift(gamma_m2: float, r_m2: float, p: int) -> float:
    """Common constant (2 gamma + r - 2p + 3) / 2 of the variant Hamiltonians.

    Evaluated identically for every caller so that Hamiltonians the algebra
    says coincide come out bitwise equal.
    """
    return 0.5 * (2.0 * gamma_m2 + r_m2 - (2.0 * p - 3.0))


def _check_lam(params: AlgebraParams, lam: int, what: str):
    if params.lam != lam:
        raise DomainError(f"{what} requires order {lam}, got {params.lam}")


def _require_valid(params: AlgebraParams):
    check = validate_fock(params)
    if not check.ok:
        raise InvalidParamsError(check.violations)


def pssqm_r_constant(params: AlgebraParams, mu: int) -> float:
    """The r constant of the order-p parasupersymmetric solution family.

    r_{mu+2} = [(p-2) alpha_{mu+2} + 2 sum_{nu=3..p} (p-nu+1) alpha_{mu+nu}
    + p(p-2)] / p with p = lam - 1.  Identically zero at p = 2.
    """
    lam = params.lam
    p = lam - 1
    alpha = params.alpha
    m2 = cyc(mu + 2, lam)
    tail = 2.0 * sum(
        (p - nu + 1) * alpha[cyc(mu + nu, lam)] for nu in range(3, p + 1)
    )
    return ((p - 2) * alpha[m2] + tail + p * (p - 2)) / p


def pssqm_build(params: AlgebraParams, mu: int, dim: int = 60) -> VariantSolution:
    """Order-p parasupercharge Q = sqrt(2) sum_{nu=1..p} adag P_{mu+nu} and its H."""
    lam = params.lam
    p = lam - 1
    if not 0 <= mu <= p:
        raise DomainError(f"family index must satisfy 0 <= mu <= {p}, got {mu}")
    _require_valid(params)
    rep = build_rep(params, dim)
    gamma = derived_constants(params).gamma
    m2 = cyc(mu + 2, lam)

    mask = sum(rep.proj[cyc(mu + nu, lam)] for nu in range(1, p + 1))
    Q = math.sqrt(2.0) * (rep.adag @ mask)

    r = pssqm_r_constant(params, mu)
    weights = np.zeros(lam)
    for nu in range(1, p + 1):
        weights[cyc(mu + nu, lam)] = p + 1 - nu
    H = _h_diagonal(lam, dim, _order2_shift(float(gamma[m2]), r, p), weights)
    return VariantSolution(
        kind=KIND_PSSQM,
        mu=mu,
        free_params={},
        r_values={f"r_{m2}": r},
        Q=Q,
        H=H,
        params=params,
        dim=dim,
    )


def pssqm_check(sol: VariantSolution, p: int, tol: float = 1e-10) -> RelationReport:
    """Verify nilpotency at order p + 1 and the order-p multilinear relation."""
    if sol.kind != KIND_PSSQM:
        raise DomainError(f"expected a {KIND_PSSQM} solution, got {sol.kind}")
    if p != sol.params.lam - 1:
        raise DomainError(f"solution has order {sol.params.lam - 1}, got p = {p}")
    h = p + 2
    b = headroom_block(sol.dim, h)
    Q = sol.Q
    Qd = Q.conj().T
    H = sol.H.astype(complex)

    powers = [np.eye(sol.dim, dtype=complex)]
    for _ in range(p + 1):
        powers.append(powers[-1] @ Q)

    entries = []

    def add(name: str, m: np.ndarray, nonzero: bool = False):
        resid = float(np.abs(m[b, b]).max())
        passed = resid > tol if nonzero else resid <= tol
        entries.append(RelationEntry(name, resid, passed, nonzero=nonzero))

    add(f"Q^{p + 1} = 0", powers[p + 1])
    add(f"Q^{p} != 0", powers[p], nonzero=True)
    add("[H, Q] = 0", H @ Q - Q @ H)
    multilinear = sum(powers[p - j] @ Qd @ powers[j] for j in range(p + 1))
    add(
        "sum_j Q^{p-j} Qdag Q^j = 2p Q^{p-1} H",
        multilinear - 2.0 * p * (powers[p - 1] @ H),
    )
    return RelationReport(entries=tuple(entries), headroom=h, tol=tol)


def pssqm_cubic_check(sol: VariantSolution, tol: float = 1e-10) -> RelationReport:
    """Residual of the alternative cubic relation [Q, [Qdag, Q]] = 2QH at p = 2.

    Whether it passes depends on the algebra parameters: the locus where both
    this and the multilinear relation hold is empirical data, not an assertion.
    A vanishing charge satisfies the relation trivially, so the report also
    carries a nonzero-charge entry flagging that degenerate case.
    """
    if sol.kind != KIND_PSSQM:
        raise DomainError(f"expected a {KIND_PSSQM} solution, got {sol.kind}")
    if sol.params.lam != 3:
        raise DomainError(f"cubic relation applies at order 3, got {sol.params.lam}")
    h = 4
    b = headroom_block(sol.dim, h)
    Q = sol.Q
    Qd = Q.conj().T
    H = sol.H.astype(complex)
    inner = Qd @ Q - Q @ Qd
    lhs = Q @ inner - inner @ Q
    resid = float(np.abs((lhs - 2.0 * (Q @ H))[b, b]).max())
    qmax = float(np.abs(Q[b, b]).max())
    entries = (
        RelationEntry("[Q, [Qdag, Q]] = 2 Q H", resid, resid <= tol),
        RelationEntry("Q != 0", qmax, qmax > tol, nonzero=True),
    )
    return RelationReport(entries=entries, headroom=h, tol=tol)


def pseudo_family1_build(
    params: AlgebraParams,
    mu: int,
    c: float,
    eta: float,
    phi: float,
    dim: int = 60,
) -> VariantSolution:
    """Two-parameter pseudosupercharge (eta adag + e^{i phi} sqrt(4c^2 - eta^2) a) P_{mu+2}.

    At eta = sqrt(2)|c|, phi = 0 the r constant vanishes and the Hamiltonian
    coincides bitwise with the order-2 parasupersymmetric one.
    """
    _check_lam(params, 3, "family-1 pseudosupersymmetry")
    if not 0 <= mu < 3:
        raise DomainError(f"family index must satisfy 0 <= mu < 3, got {mu}")
    if c == 0.0:
        raise DomainError("c must be nonzero")
    if not 0.0 < eta < 2.0 * abs(c):
        raise DomainError(f"eta must lie in (0, 2|c|) = (0, {2.0 * abs(c)}), got {eta}")
    if not 0.0 <= phi < 2.0 * math.pi:
        raise DomainError(f"phi must lie in [0, 2 pi), got {phi}")
    _require_valid(params)
    rep = build_rep(params, dim)
    alpha = params.alpha
    gamma = derived_constants(params).gamma
    m1, m2 = cyc(mu + 1, 3), cyc(mu + 2, 3)

    # Factored forms: exact zeros at eta = sqrt(2)|c| and at the 2|c| boundary.
    xi = complex(math.cos(phi), math.sin(phi)) * math.sqrt(
        (2.0 * abs(c) - eta) * (2.0 * abs(c) + eta)
    )
    root2c = math.sqrt(2.0) * abs(c)
    r = (1.0 + alpha[m2]) * ((eta - root2c) * (eta + root2c)) / (2.0 * c * c)

    Q = (eta * rep.adag + xi * rep.a) @ rep.proj[m2]
    weights = np.zeros(3)
    weights[m1] = 2.0
    weights[m2] = 1.0
    H = _h_diagonal(3, dim, _order2_shift(float(gamma[m2]), r, 2), weights)
    return VariantSolution(
        kind=KIND_PSEUDO1,
        mu=mu,
        free_params={"c": c, "eta": eta, "phi": phi},
        r_values={f"r_{m2}": float(r)},
        Q=Q,
        H=H,
        params=params,
        dim=dim,
    )


def pseudo_family2_build(
    params: AlgebraParams,
    mu: int,
    c: float,
    r_mu: float,
    dim: int = 60,
) -> VariantSolution:
    """One-parameter pseudosupercharge 2|c| a P_{mu+2} with spectrum knob r_mu."""
    _check_lam(params, 3, "family-2 pseudosupersymmetry")
    if not 0 <= mu < 3:
        raise DomainError(f"family index must satisfy 0 <= mu < 3, got {mu}")
    if c == 0.0:
        raise DomainError("c must be nonzero")
    _require_valid(params)
    rep = build_rep(params, dim)
    alpha = params.alpha
    gamma = derived_constants(params).gamma
    m1, m2 = cyc(mu + 1, 3), cyc(mu + 2, 3)

    Q = 2.0 * abs(c) * (rep.a @ rep.proj[m2])
    weights = np.zeros(3)
    weights[mu] = 0.5 * (1.0 - alpha[m1] + alpha[m2] + r_mu)
    weights[m1] = 1.0
    shift = 0.5 * (2.0 * gamma[m2] - alpha[m2])
    H = _h_diagonal(3, dim, float(shift), weights)
    return VariantSolution(
        kind=KIND_PSEUDO2,
        mu=mu,
        free_params={"c": c, "r_mu": r_mu},
        r_values={f"r_{mu}": r_mu},
        Q=Q,
        H=H,
        params=params,
        dim=dim,
    )


def equal_spacing_r(params: AlgebraParams, mu: int, cycles: int = 0) -> float:
    """The r_mu value giving an equally spaced family-2 spectrum.

    (alpha_{mu+1} - alpha_{mu+2} + 3) mod 6, as the representative in [0, 6);
    cycles shifts to another representative, r + 6 * cycles, for experimentation.
    """
    _check_lam(params, 3, "family-2 pseudosupersymmetry")
    alpha = params.alpha
    m1, m2 = cyc(mu + 1, 3), cyc(mu + 2, 3)
    return float((alpha[m1] - alpha[m2] + 3.0) % 6.0) + 6.0 * cycles


def pseudo_check(sol: VariantSolution, c: float, tol: float = 1e-10) -> RelationReport:
    """Verify Q^2 = 0, [H, Q] = 0, and Q Qdag Q = 4 c^2 Q H."""
    if sol.kind not in (KIND_PSEUDO1, KIND_PSEUDO2):
        raise DomainError(f"expected a pseudosupersymmetric solution, got {sol.kind}")
    h = 4
    b = headroom_block(sol.dim, h)
    Q = sol.Q
    Qd = Q.conj().T
    H = sol.H.astype(complex)
    entries = []

    def add(name: str, m: np.ndarray):
        resid = float(np.abs(m[b, b]).max())
        entries.append(RelationEntry(name, resid, resid <= tol))

    add("Q^2 = 0", Q @ Q)
    add("[H, Q] = 0", H @ Q - Q @ H)
    add("Q Qdag Q = 4 c^2 Q H", Q @ Qd @ Q - 4.0 * c * c * (Q @ H))
    return RelationReport(entries=tuple(entries), headroom=h, tol=tol)


def ossqm_build(
    params: AlgebraParams,
    mu: int,
    xi: float,
    phi: float,
    dim: int = 60,
) -> VariantSolution:
    """Order-2 orthosupercharges over an algebra with alpha_{mu+1} = -1.

    Only mu = 0 and mu = 1 exist: mu = 2 would force alpha_0 = -1, which kills
    the Fock representation (F(1) = 0).
    """
    _check_lam(params, 3, "order-2 orthosupersymmetry")
    if mu == 2:
        raise DomainError(
            "no mu = 2 family: it needs alpha_0 = -1, incompatible with F(1) > 0"
        )
    if mu not in (0, 1):
        raise DomainError(f"family index must be 0 or 1, got {mu}")
    root2 = math.sqrt(2.0)
    if not 0.0 < xi <= root2:
        raise DomainError(f"xi must lie in (0, sqrt(2)], got {xi}")
    if not 0.0 <= phi < 2.0 * math.pi:
        raise DomainError(f"phi must lie in [0, 2 pi), got {phi}")
    alpha = params.alpha
    m1, m2 = cyc(mu + 1, 3), cyc(mu + 2, 3)
    if abs(alpha[m1] + 1.0) > 1e-12:
        raise DomainError(
            f"alpha_{m1} must equal -1 for the mu = {mu} family, got {alpha[m1]}"
        )
    _require_valid(params)
    rep = build_rep(params, dim)
    gamma = derived_constants(params).gamma

    # Factored so xi = sqrt(2) yields an exact zero partner coefficient.
    w = math.sqrt((root2 - xi) * (root2 + xi))
    phase = complex(math.cos(phi), math.sin(phi))
    Q1 = xi * (rep.a @ rep.proj[m2]) + (phase * w) * (rep.adag @ rep.proj[mu])
    Q2 = (-np.conj(phase) * w) * (rep.a @ rep.proj[m2]) + xi * (rep.adag @ rep.proj[mu])

    weights = np.zeros(3)
    weights[mu] = 2.0
    weights[m1] = 1.0
    H = _h_diagonal(3, dim, _order2_shift(float(gamma[m1]), 0.0, 2), weights)
    return VariantSolution(
        kind=KIND_OSSQM,
        mu=mu,
        free_params={"xi": xi, "phi": phi},
        r_values={},
        Q=Q1,
        H=H,
        params=params,
        dim=dim,
        Q2=Q2,
    )


def ossqm_check(sol: VariantSolution, tol: float = 1e-10) -> RelationReport:
    """Verify all nine orthosupersymmetry relation instances.

    Q_r Q_s = 0 for the four (r, s) pairs, [H, Q_r] = 0 for both charges, and
    Q_r Q_s^dag + delta_{rs} sum_t Q_t^dag Q_t = 2 delta_{rs} H for the three
    independent (r, s) cases, plus the expanded rs = 11 corollary.
    """
    if sol.kind != KIND_OSSQM:
        raise DomainError(f"expected an {KIND_OSSQM} solution, got {sol.kind}")
    h = 3
    b = headroom_block(sol.dim, h)
    charges = (sol.Q, sol.Q2)
    H = sol.H.astype(complex)
    qdagq = sum(q.conj().T @ q for q in charges)
    entries = []

    def add(name: str, m: np.ndarray):
        resid = float(np.abs(m[b, b]).max())
        entries.append(RelationEntry(name, resid, resid <= tol))

    for r in (0, 1):
        for s in (0, 1):
            add(f"Q{r + 1} Q{s + 1} = 0", charges[r] @ charges[s])
    for r in (0, 1):
        add(f"[H, Q{r + 1}] = 0", H @ charges[r] - charges[r] @ H)
    for r, s in ((0, 0), (0, 1), (1, 1)):
        lhs = charges[r] @ charges[s].conj().T
        if r == s:
            add(f"Q{r + 1} Qdag{s + 1} + sum_t Qdag_t Q_t = 2 H", lhs + qdagq - 2.0 * H)
        else:
            add(f"Q{r + 1} Qdag{s + 1} = 0", lhs)
    q1, q2 = charges
    add(
        "corollary: Q1 Qdag1 + Qdag1 Q1 + Qdag2 Q2 = 2 H",
        q1 @ q1.conj().T + q1.conj().T @ q1 + q2.conj().T @ q2 - 2.0 * H,
    )
    return RelationReport(entries=tuple(entries), headroom=h, tol=tol)


def ground_state_analysis(sol: VariantSolution, tol: float = 1e-9) -> GroundState:
    """Lowest level of H, its cluster multiplicity, and broken flag (energy > tol)."""
    diag = np.diag(sol.H)
    lowest = float(diag.min())
    multiplicity = int(np.sum(np.abs(diag - lowest) <= tol))
    return GroundState(
        energy=lowest, multiplicity=multiplicity, broken=lowest > tol
    )


def variant_to_dict(
    sol: VariantSolution, report: RelationReport, n_levels: int | None = None
) -> dict:
    """JSON-ready summary: parameters, spectrum, ground state, relation residuals."""
    diag = np.diag(sol.H)
    if n_levels is not None:
        diag = diag[:n_levels]
    ground = ground_state_analysis(sol)
    return {
        "kind": sol.kind,
        "mu": sol.mu,
        "free_params": {k: float(v) for k, v in sol.free_params.items()},
        "r_values": {k: float(v) for k, v in sol.r_values.items()},
        "spectrum": [float(e) for e in diag],
        "ground_state": {
            "energy": ground.energy,
            "multiplicity": ground.multiplicity,
            "broken": ground.broken,
        },
        "relations": [
            {"name": e.name, "residual": e.residual, "pass": e.passed}
            for e in report.entries
        ],
    }
