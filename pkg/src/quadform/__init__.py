from .forms import (
    BilinForm,
    Symmetry,
    IndexReport,
    AlgebraicLemmaSides,
    restrict,
    index_nullity,
    perp,
    radical,
    is_nondegenerate_on,
    congruent,
    eq1_sides,
    algebraic_lemma_sides,
)

__all__ = [
    "BilinForm",
    "Symmetry",
    "IndexReport",
    "AlgebraicLemmaSides",
    "restrict",
    "index_nullity",
    "perp",
    "radical",
    "is_nondegenerate_on",
    "congruent",
    "eq1_sides",
    "algebraic_lemma_sides",
]
