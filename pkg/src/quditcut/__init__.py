"""Mixed-dimensional qudit statevector simulation and gate cutting.

A two-qudit interaction between qudits of dimensions d1 and d2 is expanded
into weighted tensor products of local operators, either over the generalized
Gell-Mann bases or by an operator-Schmidt (SVD) decomposition.  The circuit
fragments on each side of a cut are then simulated independently and their
outputs recombined linearly into the exact joint distribution.
"""

from .bench import (
    BenchRecord,
    MemoryEstimate,
    SpeedupReport,
    dummy_circuit,
    estimate_memory,
    speedup_report,
    truncation_sweep,
)
from .cutting import (
    CutPlan,
    FragmentPair,
    StitchedResult,
    execute_cut,
    generate_fragments,
    plan_cut,
    reconstruct_probabilities,
    stitch,
    tvd,
)
from .decompose import (
    DecompositionTerm,
    GateDecomposition,
    decompose_csum,
    expand_in_basis,
    truncate,
)
from .gates import (
    GateSpec,
    csum,
    hadamard_qudit,
    projector,
    rotation_qudit,
    shift_x,
)
from .gellmann import GellMannBasis, full_basis, full_basis_labels, gellmann_basis
from .linalg import (
    MixedRadixSpec,
    StateVector,
    kron,
    kron_vec,
    mixed_radix_decode,
    mixed_radix_encode,
    permute_digits,
    svd,
)
from .schmidt import SchmidtDecomposition, operator_schmidt, schmidt_rank
from .simulator import Circuit, apply_single, apply_two, probabilities, run

__version__ = "0.1.0"
