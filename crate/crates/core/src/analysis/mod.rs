//! Saturated-graph classifiers and enumeration, score bounds, and the
//! bookkeeping used to check strategy claims on game records.

mod bounds;
mod claims;
mod classify;
mod enumerate;
mod trace;

use thiserror::Error;

pub use bounds::{
    bound, degree_sum_bound, degree_sum_bound_two_sided, degree_sum_minimizer, erdos_gallai_max, f_closed,
    f_sequence, tree_score_formula, tree_score_interval_floored, BoundError, BoundReport, Theorem, TreeScore,
};
pub use claims::{
    check_four_vertex_components, check_new_vertices, check_single_cherry, check_standalone_triangles,
    check_star_min_degree, check_traceable, ClaimViolation,
};
pub use classify::{
    classify_p4_saturated, classify_p5_saturated, literal_p4_reading, literal_p5_reading, Rejection,
    SaturatedClass,
};
pub use enumerate::{all_graphs_up_to_iso, enumerate_free, enumerate_saturated, saturated_graphs};
pub use trace::{isolated_consumption, trace_stats, ThresholdStat, TraceStats};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}
