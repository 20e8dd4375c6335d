"""Certified clique minors in Cartesian products of graphs."""

from .affine import AffinePlane, FieldContext, affine_plane, field_context, verify_plane
from .coloring import Coloring, chromatic_number, critical_subgraph, extract_w_minor, is_k_colorable
from .construction import (
    BoundReport,
    ConstructionParams,
    double_grid_clique_model,
    equal_chi_clique_model,
    hypercube_lower_bound,
    max_construction_prime,
    power_clique_model,
    product_bound_report,
    product_clique_model,
    upper_bound_kn_km,
    wn_square_clique_model,
)
from .generators import generate
from .graph import Graph, export_dot, parse_graph6, write_graph6
from .minor import MinorModel, compose_models, product_of_models, verify_model
from .product import cartesian_power, cartesian_product, is_prime_graph, prime_factorize
from .search import SearchBudgetExceeded, hadwiger_exact, has_minor

__version__ = "0.1.0"
