"""Exact few-photon linear optics on two and three modes.

Sparse Fock states, beam-splitter and tritter lifts to photon-number
sectors, the mode-algebra multiplet machinery behind them, and the
post-selected 0/1/2-photon teleportation protocol.
"""

from .errors import ConvergenceError, SchemaError, ValidationError
from .fock import (
    NORM_TOL,
    PRUNE_TOL,
    PureState,
    annihilate,
    create,
    inner_product,
    occupations,
    total_photon_sectors,
    vacuum,
)
from .lift import ModeUnitary, apply_mode_unitary, lift_matrix
from .scissors import (
    BalancedSolution,
    EprResource,
    OutcomeDecomposition,
    OutcomeRecord,
    ScissorsInput,
    build_epr,
    build_input,
    decompose_outcomes,
    fidelity,
    run_scissors,
    solve_balanced,
)
from .su2 import (
    PAULI,
    MultipletLabel2,
    Su2GeneratorSet,
    casimir_eigenvalue,
    multiplet_label,
    schwinger_generators,
    su2_adjoint,
)
from .su3 import (
    GELL_MANN,
    GellMannBasis,
    MultipletLabel3,
    Su3GeneratorSet,
    enumerate_multiplet,
    gell_mann_basis,
    structure_constants,
    su3_adjoint,
    su3_euler,
    su3_generators,
    t3_y_label,
)

__all__ = [
    "ConvergenceError",
    "SchemaError",
    "ValidationError",
    "NORM_TOL",
    "PRUNE_TOL",
    "PureState",
    "annihilate",
    "create",
    "inner_product",
    "occupations",
    "total_photon_sectors",
    "vacuum",
    "ModeUnitary",
    "apply_mode_unitary",
    "lift_matrix",
    "BalancedSolution",
    "EprResource",
    "OutcomeDecomposition",
    "OutcomeRecord",
    "ScissorsInput",
    "build_epr",
    "build_input",
    "decompose_outcomes",
    "fidelity",
    "run_scissors",
    "solve_balanced",
    "PAULI",
    "MultipletLabel2",
    "Su2GeneratorSet",
    "casimir_eigenvalue",
    "multiplet_label",
    "schwinger_generators",
    "su2_adjoint",
    "GELL_MANN",
    "GellMannBasis",
    "MultipletLabel3",
    "Su3GeneratorSet",
    "enumerate_multiplet",
    "gell_mann_basis",
    "structure_constants",
    "su3_adjoint",
    "su3_euler",
    "su3_generators",
    "t3_y_label",
]

__version__ = "0.1.0"
