"""Exact and desk-scale tools for local Turán numbers of uniform hypergraphs."""

from .constructions import (
    BlowupVector,
    PartitionSpec,
    alpha_of_blowup,
    blowup,
    build_Frp,
    build_Frp_vector,
    build_G_na,
    build_K,
    build_L,
    build_turan_graph,
    catalog,
)
from .density import (
    DensityReport,
    eta_formula,
    optimize_K_parts,
    optimize_L_parts,
    reference,
    rho_formula,
    rho_limit_k1,
    sweep_parts,
)
from .exact import ExactResult, SearchConfig, exact_ex, exact_T, g_family
from .cnf import export_cnf, least_m_by_sat
from .hypergraph import (
    UniformHypergraph,
    VertexSet,
    clique_number,
    complement,
    contains_subhypergraph,
    independence_number,
    induced,
    is_family_free,
    new_hypergraph,
)
from .multigraph import Multigraph, T2_closed_form, bound_check, hypothesis_holds, link_union
from .property import HoleWitness, PropertyVerdict, duality_check, find_hole, has_property, theta0
from .reduce import ReductionTrace, lemma22_check, run_reduction, slack

__version__ = "0.1.0"
