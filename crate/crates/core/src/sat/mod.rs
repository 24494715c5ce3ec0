//! 3-CNF formulas and their gadget graphs.

mod cnf;
mod reduction;

pub use cnf::{parse_dimacs, Clause, CnfFormula, Literal};
pub use reduction::{
    basis_from_assignment, build_reduction, candidate_set, decide_sat, extract_assignment, predicted_kappa,
    verify_gadget_lemmas, GadgetMap, GadgetReport, Label, Prediction, SatOutcome, SatStatus,
};
