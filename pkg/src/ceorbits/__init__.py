"""Exact classification of orbits, modality, smoothness and minimal ambient
modules of canonical affine embeddings of G/Ru(P)."""

from .rootsys import (
    RootSystem,
    Weight,
    build_root_system,
    degree_labels,
    is_dominant,
    pairing,
    weyl_orbit,
)
from .dynkin import boundary, components, extreme_nodes, rays, singularity
from .repcalc import (
    IsotypicSummand,
    is_L_generated,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)
from .conegeom import (
    Cone,
    Face,
    FaceSpans,
    cone_hull,
    dominant_part,
    face_meets_dominant_interior,
    face_spans,
    faces,
)
from .orbits import (
    OrbitDatum,
    closure_contains,
    dim_group,
    enumerate_canonical_orbits,
    enumerate_general_orbits,
    face_pi_y,
    has_finitely_many_orbits,
    is_smooth_canonical,
    modality_canonical,
    weight_cone,
)
from .tangent import (
    SummandReport,
    dim_CE,
    removal_set,
    removal_set_oracle,
    tangent_report,
)

__version__ = "0.1.0"

__all__ = [
    "RootSystem",
    "Weight",
    "build_root_system",
    "degree_labels",
    "is_dominant",
    "pairing",
    "weyl_orbit",
    "boundary",
    "components",
    "extreme_nodes",
    "rays",
    "singularity",
    "IsotypicSummand",
    "is_L_generated",
    "tensor_decompose",
    "weight_multiplicities",
    "weyl_dim",
    "Cone",
    "Face",
    "FaceSpans",
    "cone_hull",
    "dominant_part",
    "face_meets_dominant_interior",
    "face_spans",
    "faces",
    "OrbitDatum",
    "closure_contains",
    "dim_group",
    "enumerate_canonical_orbits",
    "enumerate_general_orbits",
    "face_pi_y",
    "has_finitely_many_orbits",
    "is_smooth_canonical",
    "modality_canonical",
    "weight_cone",
    "SummandReport",
    "dim_CE",
    "removal_set",
    "removal_set_oracle",
    "tangent_report",
]
