//! Connectivity dimension of graphs.
//!
//! A set of landmark vertices resolves a graph when the vectors of local
//! connectivities κ(v, w) to the landmarks tell all vertices apart; the
//! connectivity dimension is the size of a smallest such set. The crate
//! computes κ by max-flow, checks and searches resolving sets, evaluates the
//! closed forms known for several graph families, and builds the gadget
//! graph that encodes 3-SAT as a dimension question.

pub mod blocks;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod resolver;
pub mod sat;
pub mod solver;
pub mod twins;

mod flow;

pub use blocks::{block_count, block_cut_tree, BlockCutTree};
pub use connectivity::{
    kappa_matrix, local_connectivity, uniform_connectivity, uniformly_connected_vertices, KappaMatrix, KappaValue,
};
pub use error::{Error, Result};
pub use families::{
    disjoint_union_cdim, standard_graph, threshold_cdim, threshold_cdim_any, threshold_graph, triangle_chain,
    triangle_chain_cdim, ComponentDim, ThresholdSequence,
};
pub use graph::Graph;
pub use io::{parse_edge_list, parse_graph6, parse_graph_auto, to_edge_list, to_graph6};
pub use resolver::{is_resolving, pair_coverage, representation, PairCoverage, Representation, Verdict};
pub use sat::{
    basis_from_assignment, build_reduction, decide_sat, extract_assignment, parse_dimacs, predicted_kappa,
    verify_gadget_lemmas, CnfFormula, GadgetMap, Label, Literal, Prediction, SatOutcome,
};
pub use solver::{
    cdim_decompose, cdim_exact, cdim_greedy, enumerate_bases, forces_one_representation, lower_bounds, mdim_exact,
    BoundsReport, DimensionResult, Method, SolverConfig,
};
pub use twins::{are_twins, twin_classes, TwinClasses};
