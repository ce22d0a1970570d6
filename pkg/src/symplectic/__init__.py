from .space import (
    SymplecticSpace,
    Lagrangian,
    standard_space,
    is_isotropic,
    is_lagrangian,
    isotropy_residual,
    symplectic_image,
    horizontal,
    vertical,
)
from .lagrangian import lagrangian_complement
from .charts import chart, unchart, transversality_margin
from .paths import LagrangianPath, constant_lagrangian_path, DEFAULT_MAX_STEP
from .maslov import ChartSegment, ChartCover, MaslovResult, chart_cover, maslov_cover, maslov_index, maslov_oracle

__all__ = [
    "SymplecticSpace",
    "Lagrangian",
    "standard_space",
    "is_isotropic",
    "is_lagrangian",
    "isotropy_residual",
    "symplectic_image",
    "horizontal",
    "vertical",
    "lagrangian_complement",
    "chart",
    "unchart",
    "transversality_margin",
    "LagrangianPath",
    "constant_lagrangian_path",
    "DEFAULT_MAX_STEP",
    "ChartSegment",
    "ChartCover",
    "MaslovResult",
    "chart_cover",
    "maslov_cover",
    "maslov_index",
    "maslov_oracle",
]
