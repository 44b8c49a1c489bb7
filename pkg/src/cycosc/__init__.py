"""Cyclic-group extended oscillator algebras on truncated Fock representations.

The package builds the deformed ladder operators, number operator, and sector
projectors as dense matrices, computes and classifies oscillator spectra, and
constructs the supersymmetric, parasupersymmetric, pseudosupersymmetric, and
orthosupersymmetric charge operators together with checks of their defining
relations.
"""

from .algebra import (
    AlgebraParams,
    DerivedConstants,
    DomainError,
    FockValidation,
    InvalidParamsError,
    KappaParams,
    SymmetryError,
    alpha_from_kappa,
    cyclic_shift,
    derived_constants,
    kappa_from_alpha,
    new_params,
    params_from_dict,
    params_to_dict,
    structure_function,
    structure_values,
    validate_fock,
)
from .fock import (
    RelationEntry,
    RelationReport,
    TruncatedRep,
    block_max,
    build_rep,
    check_relations,
    headroom_block,
    klein_reduction_check,
    rep_to_dict,
)
from .shape_invariance import (
    BlockPair,
    Hierarchy,
    block_pair,
    build_hierarchy,
    partner_check,
    sqm2_check,
    window_violations,
)
from .spectrum import (
    Cluster,
    DegeneracyReport,
    SpectrumLine,
    SweepRecord,
    analytic_spectrum,
    classify_degeneracy,
    h0,
    sweep,
)
from .variants import (
    GroundState,
    VariantSolution,
    equal_spacing_r,
    ground_state_analysis,
    ossqm_build,
    ossqm_check,
    pseudo_check,
    pseudo_family1_build,
    pseudo_family2_build,
    pssqm_build,
    pssqm_check,
    pssqm_cubic_check,
    pssqm_r_constant,
    variant_to_dict,
)

__all__ = [
    "AlgebraParams",
    "BlockPair",
    "Cluster",
    "DegeneracyReport",
    "DerivedConstants",
    "DomainError",
    "FockValidation",
    "GroundState",
    "Hierarchy",
    "InvalidParamsError",
    "KappaParams",
    "RelationEntry",
    "RelationReport",
    "SpectrumLine",
    "SweepRecord",
    "SymmetryError",
    "TruncatedRep",
    "VariantSolution",
    "alpha_from_kappa",
    "analytic_spectrum",
    "block_max",
    "block_pair",
    "build_hierarchy",
    "build_rep",
    "check_relations",
    "classify_degeneracy",
    "cyclic_shift",
    "derived_constants",
    "equal_spacing_r",
    "ground_state_analysis",
    "h0",
    "headroom_block",
    "kappa_from_alpha",
    "klein_reduction_check",
    "new_params",
    "ossqm_build",
    "ossqm_check",
    "params_from_dict",
    "params_to_dict",
    "partner_check",
    "pseudo_check",
    "pseudo_family1_build",
    "pseudo_family2_build",
    "pssqm_build",
    "pssqm_check",
    "pssqm_cubic_check",
    "pssqm_r_constant",
    "rep_to_dict",
    "sqm2_check",
    "structure_function",
    "structure_values",
    "sweep",
    "validate_fock",
    "variant_to_dict",
    "window_violations",
]

__version__ = "0.1.0"
