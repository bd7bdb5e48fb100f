"""Weight systems, F_eps specializations and interlace polynomials in exact arithmetic."""

from ._wsys import (
    DomainError,
    ParseError,
    dmat_of_graph,
    faces,
    feps,
    feps_direct,
    interlace_dmat,
    interlace_graph,
    interlace_perm,
    pivot,
    primitive_feps,
    refined_skew_char,
    run_cli,
    series,
    skew_char,
    suite_names,
    verify,
    wgl,
)

__all__ = [
    "DomainError",
    "ParseError",
    "dmat_of_graph",
    "faces",
    "feps",
    "feps_direct",
    "interlace_dmat",
    "interlace_graph",
    "interlace_perm",
    "pivot",
    "primitive_feps",
    "refined_skew_char",
    "run_cli",
    "series",
    "skew_char",
    "suite_names",
    "verify",
    "wgl",
]
