"""Joint measurement statistics and crosstalk analysis for pairs of
single-qubit observables measured on the two halves of a Bell state.

The package computes the distribution of simultaneous outcomes by three
independent routes, quantifies the information flow (crosstalk) between the
two measurements, and solves the angle conditions under which they are
informationally independent.
"""

from .bipartite import (
    INDEX_ORDER,
    BellLabel,
    InternalConsistencyError,
    JointDistribution,
    ObservablePair,
    OutcomeFrame,
    bell_state,
    commutator_norm,
    has_equal_marginals,
    is_klein_symmetric,
    joint_distribution_amplitude,
    joint_distribution_bruteforce,
    joint_distribution_closed,
    lift_first,
    lift_second,
    marginals,
    outcome_frame,
)
from .independence import (
    ConditionKind,
    IndependenceRoot,
    PlaneCondition,
    check_consistency,
    condition_x_plane,
    condition_y_plane,
    condition_z_plane,
    partner_angles,
    plane_condition,
    solve_independence,
)
from .information import (
    CrosstalkReport,
    crosstalk_report,
    degree_of_dependence,
    entropy_theta,
    is_informationally_independent,
    mutual_information,
    report_from_distribution,
    shannon_entropy,
)
from .observables import (
    HADAMARD,
    IDENTITY2,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    BlochDirection,
    NamedGate,
    Observable,
    Plane,
    PlaneClass,
    classify_plane,
    direction,
    eigenvalue,
    eigenvector,
    matrix,
    named_gate,
)
from .sampler import SampleCounts, cell_z_scores, empirical_distribution, empirical_report, sample

__version__ = "0.1.0"

__all__ = [
    "BellLabel",
    "BlochDirection",
    "ConditionKind",
    "CrosstalkReport",
    "HADAMARD",
    "IDENTITY2",
    "INDEX_ORDER",
    "IndependenceRoot",
    "InternalConsistencyError",
    "JointDistribution",
    "NamedGate",
    "Observable",
    "ObservablePair",
    "OutcomeFrame",
    "Plane",
    "PlaneClass",
    "PlaneCondition",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "SampleCounts",
    "bell_state",
    "cell_z_scores",
    "check_consistency",
    "classify_plane",
    "commutator_norm",
    "condition_x_plane",
    "condition_y_plane",
    "condition_z_plane",
    "crosstalk_report",
    "degree_of_dependence",
    "direction",
    "eigenvalue",
    "eigenvector",
    "empirical_distribution",
    "empirical_report",
    "entropy_theta",
    "has_equal_marginals",
    "is_informationally_independent",
    "is_klein_symmetric",
    "joint_distribution_amplitude",
    "joint_distribution_bruteforce",
    "joint_distribution_closed",
    "lift_first",
    "lift_second",
    "marginals",
    "matrix",
    "mutual_information",
    "named_gate",
    "outcome_frame",
    "partner_angles",
    "plane_condition",
    "report_from_distribution",
    "sample",
    "shannon_entropy",
    "solve_independence",
]
