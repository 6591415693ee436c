"""Spectral extremal problems for graphs excluding a family of minors."""

from .constructions import (
    MultipartiteSpec,
    book,
    book_with_matching,
    complete,
    complete_multipartite,
    cycle,
    flower,
    g_down_members,
    g_triangle,
    g_triangle_even,
    path,
    petersen,
    star,
    star_forest,
    subdivided_clique,
    wheel,
)
from .decompose import LinearPathDecomposition, longest_maximal_linear_path, maximal_linear_paths, phi_identity_check
from .graph import Graph, from_graph6, to_graph6
from .invariants import FamilySpec, family_invariants, gamma_family, gamma_union_family, irreducible_family
from .minor import MinorModel, find_model, has_minor, is_family_minor_free, verify_model
from .search import SearchQuery, SearchReport, enumerate_minor_free, ex_search, sat_list, spex_search
from .spectral import BoundReport, SpectralCertificate, book_rho, spectral_radius
from .theorems import verify_theorem

__all__ = [
    "BoundReport",
    "FamilySpec",
    "Graph",
    "LinearPathDecomposition",
    "MinorModel",
    "MultipartiteSpec",
    "SearchQuery",
    "SearchReport",
    "SpectralCertificate",
    "book",
    "book_rho",
    "book_with_matching",
    "complete",
    "complete_multipartite",
    "cycle",
    "enumerate_minor_free",
    "ex_search",
    "family_invariants",
    "find_model",
    "flower",
    "from_graph6",
    "g_down_members",
    "g_triangle",
    "g_triangle_even",
    "gamma_family",
    "gamma_union_family",
    "has_minor",
    "irreducible_family",
    "is_family_minor_free",
    "longest_maximal_linear_path",
    "maximal_linear_paths",
    "path",
    "petersen",
    "phi_identity_check",
    "sat_list",
    "spectral_radius",
    "spex_search",
    "star",
    "star_forest",
    "subdivided_clique",
    "to_graph6",
    "verify_model",
    "verify_theorem",
    "wheel",
]
