use serde::{Deserialize, Serialize};

use crate::exact_linalg::{int, Field, Matrix, Rational};

use super::{Flag, FlagError, GroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Alternating,
    Symmetric,
}

/// Non-degenerate bilinear form given by its Gram matrix in the standard basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    kind: FormKind,
    gram: Matrix<Rational>,
}

impl BilinearForm {
    /// Checks squareness, invertibility and (anti)symmetry.
    pub fn new(kind: FormKind, gram: Matrix<Rational>) -> Result<Self, FlagError> {
        if !gram.is_square() {
            return Err(FlagError::DimensionMismatch {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        if gram.rank() != gram.rows() {
            return Err(FlagError::SingularBasis);
        }
        let t = gram.transpose();
        let ok = match kind {
            FormKind::Alternating => t == -&gram,
            FormKind::Symmetric => t == gram,
        };
        if !ok {
            return Err(FlagError::InvalidKind(format!(
                "Gram matrix is not {kind:?}"
            )));
        }
        Ok(Self { kind, gram })
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// `⟨u, v⟩` for column vectors.
    pub fn pair<F: Field>(&self, u: &Matrix<F>, v: &Matrix<F>) -> Matrix<F> {
        &(&u.transpose() * &self.gram.lift()) * v
    }
}

/// `[[0, J], [-J, 0]]` for `Sp(2n)`, the anti-diagonal of ones for `SO(2n+1)`.
pub fn gram_matrix(kind: GroupKind) -> Result<BilinearForm, FlagError> {
    kind.validate()?;
    let m = kind.dim();
    let mut g = Matrix::zeros(m, m);
    match kind {
        GroupKind::Sp { n } => {
            for i in 0..m {
                g[(i, m - 1 - i)] = if i < n { int(1) } else { int(-1) };
            }
            BilinearForm::new(FormKind::Alternating, g)
        }
        GroupKind::SoOdd { .. } => {
            for i in 0..m {
                g[(i, m - 1 - i)] = int(1);
            }
            BilinearForm::new(FormKind::Symmetric, g)
        }
        _ => Err(FlagError::Unsupported(kind)),
    }
}

/// True iff `E_{m-i}` pairs to zero with `E_i` for every `0 < i < m`.
pub fn is_isotropic_flag<F: Field>(flag: &Flag<F>, form: &BilinearForm) -> Result<bool, FlagError> {
    let m = flag.ambient_dim();
    if form.dim() != m {
        return Err(FlagError::DimensionMismatch {
            expected: form.dim(),
            found: m,
        });
    }
    let gram = form.gram().lift::<F>();
    let b = flag.basis();
    // One product gives every pairing; E_i ⟂ E_{m-i} is the upper-left
    // i×(m-i) block of bᵀ·G·b.
    let pairings = &(&b.transpose() * &gram) * b;
    Ok((1..m).all(|i| (0..i).all(|r| (0..m - i).all(|c| pairings[(r, c)].is_zero()))))
}

/// `Xᵀ·G + G·X = 0`.
pub fn in_lie_algebra(x: &Matrix<Rational>, form: &BilinearForm) -> bool {
    if x.rows() != form.dim() || !x.is_square() {
        return false;
    }
    let g = form.gram();
    (&(&x.transpose() * g) + &(g * x)).is_zero()
}
