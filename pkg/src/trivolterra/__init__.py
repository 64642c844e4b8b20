"""Triangular logarithmic-kernel operators: kernels, discretizations, symbols and probes."""

__version__ = "0.1.0"

from .errors import (
    BranchError,
    BudgetExhaustedError,
    DomainError,
    GammaPoleError,
    GridMismatchError,
    ResolutionError,
    SingularDiagonalError,
    TrivolterraError,
)
from .specfun import (
    DEFAULT_BUDGET,
    EULER_GAMMA,
    KernelParams,
    QuadratureBudget,
    asymptotic_E,
    eval_E,
    eval_E0,
    eval_E_moment_primitive,
    eval_E_primitive,
    gamma,
    norm_bound_m,
    reciprocal_gamma,
)
from .discretize import (
    Family,
    Grid,
    GridFn,
    KernelSpec,
    TriOp,
    adjoint,
    apply,
    build_J,
    build_Q,
    build_R,
    build_S,
    build_T,
    build_V,
    compose,
    identity,
    invert_triangular,
)
from .symbols import (
    SymbolQuery,
    symbol,
    symbol_asymptotics,
    symbol_contour,
    symbol_direct,
    symbol_fractional,
    symbol_plain,
    symbol_weighted,
)
from .verify import (
    ConvergenceRecord,
    check_left_inverse_R,
    check_semigroup_J,
    check_semigroup_V,
    check_strong_identity_limit,
)
from .friedrichs import (
    FriedrichsOp,
    build_A,
    build_A_two_param,
    build_B,
    compose_two_param,
    conjugate_A,
    conjugate_B,
)
from .spectral import (
    SpectralReport,
    hs_trace_probe,
    invariant_subspace_check,
    krylov_completeness_probe,
    singular_values,
    unit_circle_probe,
)
from .waveops import (
    WaveConfig,
    WaveRunReport,
    intertwining_check,
    matrix_exponential,
    w0,
    w0_check,
    wave_limit_run,
)
