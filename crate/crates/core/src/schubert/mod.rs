//! Schubert conditions on `Gr(k, m)`: codimension, membership, tangent spaces
//! and transversality certificates, an exact solver for the four-lines
//! problem, padding to zero-dimensional problems, and dimension bookkeeping
//! on two-step flag manifolds.
//!
//! Convention: `Ω_I E_• = {V : dim(V ∩ E_{i_j}) ≥ j}` with
//! `codim = Σ (m − k + j − i_j)`, so `{m−k+1, …, m}` is vacuous.

mod condition;
mod flag_manifold;
mod padding;
mod solver;
mod tangent;

use crate::curves_flags::FlagError;
use crate::exact_linalg::LinalgError;

pub use condition::{
    cell_interior, codim, iota, membership, random_cell_point, GrPoint, SchubertCondition,
};
pub use flag_manifold::{
    expected_dim_report, flag_manifold_dim, perm_codim, Codimension, DimReport, PermCondition,
};
pub use padding::pad_to_zero_dimensional;
pub use solver::small_solver_gr24;
pub use tangent::{
    quotient_complement, tangent_space, transversality_certificate, Certificate, TangentSpace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchubertError {
    #[error("invalid Schubert condition {0}")]
    InvalidCondition(String),
    #[error("invalid permutation condition: {0}")]
    InvalidPermutation(String),
    #[error("a point of Gr(k, m) needs 0 < k < m independent columns")]
    InvalidPoint,
    #[error(
        "dimension mismatch: point in Gr{point:?}, condition on Gr{condition:?}, flag in dimension {flag}"
    )]
    DimensionMismatch {
        point: (usize, usize),
        condition: (usize, usize),
        flag: usize,
    },
    #[error("point does not satisfy the Schubert condition")]
    NotMember,
    #[error("point is not in the open Schubert cell")]
    NotInCellInterior,
    #[error("condition #{index}: {source}")]
    AtCondition {
        index: usize,
        #[source]
        source: Box<SchubertError>,
    },
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("the configuration has infinitely many solutions")]
    InfinitelyMany,
    #[error("total codimension exceeds the dimension (expected dimension {expected})")]
    NegativeExpectedDimension { expected: i64 },
    #[error("need {needed} fresh points, got {given}")]
    NotEnoughFreshPoints { needed: usize, given: usize },
    #[error("fresh point {0} coincides with a point already in use")]
    PointNotFresh(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Flag(#[from] FlagError),
}
