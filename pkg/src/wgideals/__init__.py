"""W-graphs for Hecke algebra modules built from W-graph ideals."""
from .coxeter import CoxeterGroup, Dihedral, TypeA, coxeter_group_from_matrix
from .export import export_dot, export_json, golden_compare, parse_json, render_table
from .ideal import (IdealTable, build_from_elements, induced_ideal, one_dim_ideal, parabolic_ideal,
                    regular_ideal, specht_ideal, validate)
from .laurent import LaurentPoly, RationalFn
from .tableaux import StandardTableau, enumerate_syt
from .verify import (bar_oracle, c_basis_matrices, check_braid, check_quadratic, seminormal_matrices,
                     verify_wgraph)
from .wgraph import (QTable, WGraphData, build_wgraph, cell_decomposition, choice_independence_audit,
                     compute_p_table, compute_q_table, kl_polynomials)

__version__ = "0.1.0"
