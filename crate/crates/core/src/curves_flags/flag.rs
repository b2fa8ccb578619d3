use crate::exact_linalg::{exp_nilpotent, Field, Matrix, Rational};

use super::{principal_nilpotent, FlagError, GroupKind};

/// Complete flag `E₁ ⊂ E₂ ⊂ … ⊂ E_m`, stored as an invertible basis whose
/// first `i` columns span `E_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Flag<F = Rational> {
    basis: Matrix<F>,
}

impl<F: Field> Flag<F> {
    pub fn new(basis: Matrix<F>) -> Result<Self, FlagError> {
        if !basis.is_square() {
            return Err(FlagError::DimensionMismatch {
                expected: basis.rows(),
                found: basis.cols(),
            });
        }
        if basis.rank() != basis.rows() {
            return Err(FlagError::SingularBasis);
        }
        Ok(Self { basis })
    }

    /// The coordinate flag `E_i = span(e₁, …, e_i)`.
    pub fn standard(m: usize) -> Self {
        Self {
            basis: Matrix::identity(m),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Spanning columns of `E_i`.
    pub fn subspace(&self, i: usize) -> Matrix<F> {
        self.basis.columns(0..i)
    }

    /// `g·E_•`.
    pub fn translate(&self, g: &Matrix<F>) -> Result<Self, FlagError> {
        if g.rows() != self.ambient_dim() || !g.is_square() {
            return Err(FlagError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: g.rows(),
            });
        }
        Self::new(g * &self.basis)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Flag<G> {
        Flag {
            basis: self.basis.map(f),
        }
    }
}

impl Flag<Rational> {
    pub fn lift<G: Field>(&self) -> Flag<G> {
        Flag {
            basis: self.basis.lift(),
        }
    }
}

/// True iff every prefix span of `f` equals the corresponding prefix span of `g`.
pub fn flags_equal<F: Field>(f: &Flag<F>, g: &Flag<F>) -> Result<bool, FlagError> {
    let m = f.ambient_dim();
    if g.ambient_dim() != m {
        return Err(FlagError::DimensionMismatch {
            expected: m,
            found: g.ambient_dim(),
        });
    }
    Ok((1..m).all(|i| f.subspace(i).hstack(&g.subspace(i)).rank() == i))
}

/// `exp(t·η)` applied to the coordinate flag, `η` the principal nilpotent of `kind`.
pub fn exp_translate_flag(kind: GroupKind, t: &Rational) -> Result<Flag, FlagError> {
    if !kind.has_curve() {
        return Err(FlagError::Unsupported(kind));
    }
    let eta = principal_nilpotent(kind)?;
    Flag::new(exp_nilpotent(&eta, t)?)
}
