"""
tn2alg: exact verification engine for the centerless topological N=2
superconformal algebra, its tensor modules, the coboundary Yang-Baxter
machinery, and window-truncated derivation cohomology.
"""

from .algebra import (
    ALGEBRAS,
    EVEN,
    ODD,
    TOPOLOGICAL_N2,
    WITT,
    AlgebraSpec,
    Element,
    G,
    Generator,
    H,
    L,
    Q,
    bracket,
    jacobi_defect,
    linear_combine,
    skew_defect,
)
from .derivations import (
    ClosureError,
    CohomologyReport,
    DerivationSystem,
    DerivationTable,
    SupportOverflowError,
    WindowConfig,
    WitnessError,
    assemble_system,
    compare_der_vs_inn,
    inner_derivation,
    invariant_kernel,
    recover_inner_witness,
    skew_invariance_probe,
    skew_witness,
    solve_nullspace,
)
from .tensors import (
    Tensor2,
    Tensor3,
    act2,
    act3,
    cyclic,
    is_skew,
    skew_project,
    tensor2,
    tensor3,
    twist,
    wedge,
)
from .yangbaxter import (
    RMatrix,
    co_jacobi_defect,
    co_skew_check,
    cobracket,
    cocycle_defect,
    cybe_defect,
    mybe_check,
    run_r_checks,
)

__version__ = "1.0.0"
