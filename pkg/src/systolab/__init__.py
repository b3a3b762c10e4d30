"""systolab: a numerical laboratory for systolic inequality chains.

Closed-form evaluators for the entropy/systole inequality chains and their
genus thresholds, derivative-free searches that rediscover the published
constants, triangulated-surface measurements (systole, area, loop growth),
and a verification harness replaying every printed numeric claim.
"""

from .bounds import (
    LOEWNER_BOUND,
    BoundParams,
    CrokeDisk,
    DiskAreaModel,
    EntropyBoundResult,
    EuclideanDisk,
    HeightDisk,
    SurfaceSummary,
    betti_genus_bound,
    disk_area_lower,
    entropy_upper_bound,
    entropy_upper_from_inj,
    genus_bound_general,
    genus_bound_half_inj,
    genus_cap,
    gromov_ratio_bound,
    inj_from_sys_nonpositive,
    is_loewner,
    katok_lower_bound,
    loewner_ratio,
    nonpositive_center_count,
)
from .claims import run_all_claims
from .errors import (
    ConstraintError,
    DegenerateBoundError,
    DomainError,
    MeshError,
    ResourceLimitError,
    SearchError,
    SystolabError,
)
from .growth import (
    EntropyEstimate,
    LoopGrowthSample,
    check_surface_against_bounds,
    count_loops,
    estimate_entropy,
    loop_growth_sample,
)
from .homology import CycleWitness, homological_systole
from .mesh import (
    TriMesh,
    build_flat_torus,
    build_octahedron,
    build_pillow,
    load_mesh,
    mesh_area,
    mesh_from_dict,
    mesh_genus,
    mesh_to_dict,
    save_mesh,
)
from .optimize import (
    FeasibleRegion,
    OptimizationResult,
    general_chain_region,
    half_inj_region,
    optimize_general_bound,
    optimize_half_inj_bound,
)
from .report import ClaimReport
from .words import BACKEND as WORD_BACKEND
from .words import PolygonComplex, count_polygon_classes

__version__ = "0.1.0"

__all__ = [
    "LOEWNER_BOUND",
    "BoundParams",
    "ClaimReport",
    "ConstraintError",
    "CrokeDisk",
    "CycleWitness",
    "DegenerateBoundError",
    "DiskAreaModel",
    "DomainError",
    "EntropyBoundResult",
    "EntropyEstimate",
    "EuclideanDisk",
    "FeasibleRegion",
    "HeightDisk",
    "LoopGrowthSample",
    "MeshError",
    "OptimizationResult",
    "PolygonComplex",
    "ResourceLimitError",
    "SearchError",
    "SurfaceSummary",
    "SystolabError",
    "TriMesh",
    "WORD_BACKEND",
    "betti_genus_bound",
    "build_flat_torus",
    "build_octahedron",
    "build_pillow",
    "check_surface_against_bounds",
    "count_loops",
    "count_polygon_classes",
    "disk_area_lower",
    "entropy_upper_bound",
    "entropy_upper_from_inj",
    "estimate_entropy",
    "general_chain_region",
    "genus_bound_general",
    "genus_bound_half_inj",
    "genus_cap",
    "gromov_ratio_bound",
    "half_inj_region",
    "homological_systole",
    "inj_from_sys_nonpositive",
    "is_loewner",
    "katok_lower_bound",
    "load_mesh",
    "loewner_ratio",
    "loop_growth_sample",
    "mesh_area",
    "mesh_from_dict",
    "mesh_genus",
    "mesh_to_dict",
    "nonpositive_center_count",
    "optimize_general_bound",
    "optimize_half_inj_bound",
    "run_all_claims",
    "save_mesh",
]
