from .paths import (
    FormPath,
    constant_path,
    zero_path,
    linear_path,
    restrict_path,
    concatenate,
    direct_sum,
    add_paths,
    conjugate,
)
from .flow import SfCertificate, spectral_flow, spectral_flow_oracle, eigenvalue_tracks
from .theorem1 import EndpointTerms, endpoint_terms, theorem1_sides, theorem1_nondegenerate_sides

__all__ = [
    "FormPath",
    "constant_path",
    "zero_path",
    "linear_path",
    "restrict_path",
    "concatenate",
    "direct_sum",
    "add_paths",
    "conjugate",
    "SfCertificate",
    "spectral_flow",
    "spectral_flow_oracle",
    "eigenvalue_tracks",
    "EndpointTerms",
    "endpoint_terms",
    "theorem1_sides",
    "theorem1_nondegenerate_sides",
]
