from leapers.core.construct import (
    Construction,
    PhiEmbedding,
    derived_free_leaper,
    free_construction,
    halffree_construction,
    phi,
    phi_embed,
)
from leapers.core.embedding import (
    GridEmbedding,
    VerificationReport,
    check_pair,
    factor,
    product,
    verify_embedding,
)
from leapers.core.leaper import Leaper, LeaperClass, classify, reduce
from leapers.core.paths import Box, LeaperPath, difference_set, path_from_moves, rotate90

__all__ = [
    "Box", "Construction", "GridEmbedding", "Leaper", "LeaperClass", "LeaperPath",
    "PhiEmbedding", "VerificationReport", "check_pair", "classify", "derived_free_leaper",
    "difference_set", "factor", "free_construction", "halffree_construction",
    "path_from_moves", "phi", "phi_embed", "product", "reduce", "rotate90",
    "verify_embedding",
]
