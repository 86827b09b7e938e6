"""Surface descriptors, classifiers, type B conditions and the degree 4/5 catalogs."""
from .catalog import CatalogRow, catalog_rows, check_surface, verify_catalog, veronese2
from .classify import (
    BoundaryCurve,
    BoundaryGerm,
    CoarseType,
    Contribution,
    GluedSurface,
    Gluing,
    PairType,
    PairTypeData,
    coarse_type,
    pair_type,
    single,
    slt_constraint,
    type_b_surface,
)
from .geometry import (
    WPS2,
    Component,
    Declared,
    WPSHypersurface,
    elliptic_cone_degree9,
    hyp_k_squared,
    k_squared,
    wps_singularities,
)
from .io import surface_from_json, surface_to_json
from .typeb import (
    delta_squares,
    glued_k_squared,
    noether_check,
    noether_sum,
    t1_degree,
    type_b_smoothable,
)
