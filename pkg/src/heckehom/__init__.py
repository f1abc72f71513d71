"""Exact straightening of tableau homomorphisms for Hecke-algebra modules.

The library writes any tableau map between a Specht module and a
permutation module as an explicit combination of semistandard ones, with
coefficients in exact Laurent polynomials, and verifies every relation it
uses against a brute-force model of the algebra at small degree.
"""

from .errors import OracleCapError, ParseError, TabloidMembershipError
from .qcoeff import (
    LaurentPoly,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
)
from .combinat import (
    Composition,
    Multiset,
    Partition,
    Tableau,
    cross_pairs,
    enumerate_row_standard,
    enumerate_semistandard,
    format_tableau,
    format_tableau_inline,
    inversions,
    is_semistandard,
    iter_compositions,
    iter_fillings,
    iter_multisets,
    iter_partitions,
    length_1A,
    parse_multiset,
    parse_tableau,
    perm_1A,
    perm_inverse,
    perm_mul,
    tableau_from_json,
    tableau_to_json,
    type_composition,
    w_mu,
)
from .garnir import (
    GarnirDatum,
    LinComb,
    Split,
    build_tableau,
    enumerate_splits,
    garnir_relation,
    iter_valid_data,
    split_coefficient,
    split_from_tableau,
    straightening_datum,
    two_row_straighten_step,
)
from .straighten import (
    embed_two_row,
    find_violating_window,
    semistandardize,
    semistandardize_lincomb,
    weight,
)
from .hecke_oracle import (
    HeckeElem,
    PropsReport,
    TabloidVector,
    apply_hom,
    apply_lincomb,
    coset_reps,
    image_h2,
    image_h3,
    image_h4,
    mul,
    mul_right_gen,
    oracle_cap,
    reduced_word,
    specht_check,
    t_from_word,
    t_of_perm,
    tabloid_coords,
    verify_composition_props,
    x_elem,
    y_elem,
    young_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "GarnirDatum",
    "HeckeElem",
    "LaurentPoly",
    "LinComb",
    "Multiset",
    "OracleCapError",
    "ParseError",
    "Partition",
    "PropsReport",
    "Split",
    "Tableau",
    "TabloidMembershipError",
    "TabloidVector",
    "apply_hom",
    "apply_lincomb",
    "build_tableau",
    "coset_reps",
    "cross_pairs",
    "embed_two_row",
    "enumerate_row_standard",
    "enumerate_semistandard",
    "enumerate_splits",
    "find_violating_window",
    "format_tableau",
    "format_tableau_inline",
    "garnir_relation",
    "image_h2",
    "image_h3",
    "image_h4",
    "inversions",
    "is_semistandard",
    "iter_compositions",
    "iter_fillings",
    "iter_multisets",
    "iter_partitions",
    "iter_valid_data",
    "length_1A",
    "mul",
    "mul_right_gen",
    "oracle_cap",
    "parse_multiset",
    "parse_tableau",
    "perm_1A",
    "perm_inverse",
    "perm_mul",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_int",
    "reduced_word",
    "semistandardize",
    "semistandardize_lincomb",
    "specht_check",
    "split_coefficient",
    "split_from_tableau",
    "straightening_datum",
    "t_from_word",
    "t_of_perm",
    "tableau_from_json",
    "tableau_to_json",
    "tabloid_coords",
    "two_row_straighten_step",
    "type_composition",
    "verify_composition_props",
    "w_mu",
    "weight",
    "x_elem",
    "y_elem",
    "young_subgroup",
]
