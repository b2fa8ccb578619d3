//! Exact dense linear algebra over ℚ and quadratic extensions ℚ(√d).
//!
//! Everything here is exact. Matrices are generic over [`Field`], which is
//! implemented for [`Rational`] and [`QuadExt`]; ranks and kernels come from
//! pivoted Gauss-Jordan elimination, and the exponential of a nilpotent
//! matrix is its (finite) power series.

mod field;
mod matrix;
mod poly;
mod quad;

pub use field::{
    factorial, format_rational, int, parse_rational, rat, Field, ParseRationalError, Rational,
};
pub use matrix::{exp_nilpotent, Matrix};
pub use num_traits::{One, Zero};
pub use poly::Poly;
pub use quad::{solve_quadratic, squarefree_decompose, QuadExt};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("equation has no solution")]
    NoSolution,
    #[error("all coefficients are zero")]
    ZeroPolynomial,
}

/// Exact rank of `m`.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

/// Right null space of `m`, one basis vector per column.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.kernel()
}
