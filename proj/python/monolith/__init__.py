"""Finite-group normal structure, witness and definability toolkit."""

from ._core import (
    Group,
    ToolkitError,
    analyze,
    atom_bound_check,
    atoms,
    build_phi,
    build_psi,
    center,
    chief_factor_sizes,
    defined_set,
    descend,
    direct_power,
    evaluate,
    evaluate_si_semantic,
    from_permutations,
    from_table,
    is_subdirectly_irreducible,
    minimal_witness,
    monolith,
    named_group,
    normal_closure,
    normal_subgroups,
    parse,
    quotient,
    replay,
    sample_variety_members,
    si_sentence,
    subgroup_generated,
    upper_central_series,
    verify_class_identity,
)

__all__ = [
    "Group",
    "ToolkitError",
    "analyze",
    "atom_bound_check",
    "atoms",
    "build_phi",
    "build_psi",
    "center",
    "chief_factor_sizes",
    "defined_set",
    "descend",
    "direct_power",
    "evaluate",
    "evaluate_si_semantic",
    "from_permutations",
    "from_table",
    "is_subdirectly_irreducible",
    "minimal_witness",
    "monolith",
    "named_group",
    "normal_closure",
    "normal_subgroups",
    "parse",
    "quotient",
    "replay",
    "sample_variety_members",
    "si_sentence",
    "subgroup_generated",
    "upper_central_series",
    "verify_class_identity",
]
