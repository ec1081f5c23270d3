"""Exact symbolic braid group representations: evaluation, relation
verification, and kernel-witness search."""

from braidrep._core import (
    BraidWord,
    KernelWitness,
    LaurentPolynomial,
    PolyMatrix,
    RelationReport,
    RepSpec,
    SearchResult,
    check_relations,
    classify_case,
    compose,
    cubic_residual,
    evaluate,
    format_word,
    free_reduce,
    generator_image,
    inverse,
    make_spec,
    parse_word,
    path_matrix,
    permutation,
    search_kernel,
    verify_kernel_witness,
)

__all__ = [
    "BraidWord",
    "KernelWitness",
    "LaurentPolynomial",
    "PolyMatrix",
    "RelationReport",
    "RepSpec",
    "SearchResult",
    "check_relations",
    "classify_case",
    "compose",
    "cubic_residual",
    "evaluate",
    "format_word",
    "free_reduce",
    "generator_image",
    "inverse",
    "make_spec",
    "parse_word",
    "path_matrix",
    "permutation",
    "search_kernel",
    "verify_kernel_witness",
]
