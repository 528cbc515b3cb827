"""Estrada index and spectral invariants of signed graphs."""

from signed_estrada.core import (
    GraphError,
    SignedGraph,
    adjacency_matrix,
    from_edge_list,
    has_pairing_property,
    is_balanced,
    is_switching_equivalent,
    switch,
    switching_normal_form,
)
from signed_estrada.estrada import (
    J0,
    balance_ratio,
    cycle_ee,
    ee_from_moments,
    estrada_index,
    spectral_moment,
    spectral_moments,
)
from signed_estrada.io import ParseError, load_graph, parse_signed_edge_list
from signed_estrada.spectra import CharPoly, Spectrum, char_poly, char_poly_schwenk, eigenvalues

__all__ = [
    "CharPoly",
    "GraphError",
    "J0",
    "ParseError",
    "SignedGraph",
    "Spectrum",
    "adjacency_matrix",
    "balance_ratio",
    "char_poly",
    "char_poly_schwenk",
    "cycle_ee",
    "ee_from_moments",
    "eigenvalues",
    "estrada_index",
    "from_edge_list",
    "has_pairing_property",
    "is_balanced",
    "is_switching_equivalent",
    "load_graph",
    "parse_signed_edge_list",
    "spectral_moment",
    "spectral_moments",
    "switch",
    "switching_normal_form",
]
