//! Planes of polynomials of degree `< m` as points of `Gr(k, m)`:
//! Wronskians, vanishing orders and ramification at a point.
//!
//! The dictionary with column vectors sends `(t − s)^{m−1}` to the curve
//! point `(1, s, …, s^{m−1})`: the coefficient of `t^{m−1−i}` becomes entry
//! `i`, divided by `(−1)^i·C(m−1, i)`. Under it, `E_i(s)` is the space of
//! polynomials vanishing to order at least `m − i` at `s`.

mod plane;
mod solver;

use crate::exact_linalg::LinalgError;
use crate::schubert::SchubertError;

pub use plane::{
    check_eh_identity, grpoint_to_plane, plane_to_grpoint, ramification_condition, random_plane,
    random_ramified_plane, vanishing_order, vanishing_orders, wronskian, EhReport, PolyPlane,
};
pub use solver::wronski_solver_gr24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WronskiError {
    #[error("invalid polynomial plane: {0}")]
    InvalidPlane(String),
    #[error("the zero polynomial has no order of vanishing")]
    ZeroPolynomial,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
