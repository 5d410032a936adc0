"""Decision-procedure workbench for finite soft generalized topological spaces."""

from .errors import (
    CertificationError,
    PreconditionError,
    SoftGTError,
    StructuralError,
    ThresholdExceeded,
)
from .soft_core import (
    ParameterSet,
    SoftSet,
    Universe,
    is_soft_point,
    is_soft_subset,
    soft_complement_absolute,
    soft_difference,
    soft_intersection,
    soft_subsets,
    soft_union,
)
from .gt_space import GTS, generate_gt, gt_closure, gt_interior, gt_is_regular_open
from .sgt_space import (
    SGTS,
    enumerate_regular_open,
    generate_sgt,
    is_clopen,
    is_closed,
    is_open,
    is_regular_closed,
    is_regular_open,
    project,
    soft_closure,
    soft_interior,
    subspace,
)
from .cover_engine import (
    SoftCover,
    fip_nonempty_intersection_check,
    is_soft_n_mu_compact_finite,
    minimal_near_subcover,
    minimal_subcover,
    validate_cover,
)
from .witness_families import growth_certificate

__version__ = "0.1.0"
