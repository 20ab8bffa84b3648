"""Exact computations with partial group actions on quivers and path algebras."""

from ._core import (  # noqa: F401
    EnvelopingQuiverAction,
    FiniteGroup,
    GlobalQuiverAction,
    Quiver,
    QuiverMorphism,
    QuiverPartialAction,
    ValidationReport,
    __version__,
    automorphisms,
    canonical_algebra_isomorphism,
    check_algebra_globalization,
    check_induced_action,
    check_quiver_partial_action,
    envelope,
    enveloping_isomorphism,
    export_dot,
    generated_subalgebra_dimension,
    not_ideal_witness,
    restrict_global_action,
    run_command,
    sum_of_translates_dimension,
    truncated_dimension,
)
