use crate::exact_linalg::{factorial, Matrix, One, Poly, Rational};

use super::{Flag, FlagError, GroupKind};

/// Coordinates of the rational normal curve of `kind` as polynomials in `t`.
///
/// `SL(m)`: `(1, t, …, t^{m-1})`. `Sp(2n)` and `SO(2n+1)`: divided powers
/// `tᵖ/p!`, negated at every other coordinate past the `n`-th, starting with
/// coordinate `n+1`.
pub fn curve_entries(kind: GroupKind) -> Result<Vec<Poly<Rational>>, FlagError> {
    kind.validate()?;
    let m = kind.dim();
    let entries = match kind {
        GroupKind::Sl { .. } => (0..m).map(|p| Poly::monomial(Rational::one(), p)).collect(),
        GroupKind::Sp { n } | GroupKind::SoOdd { n } => (0..m)
            .map(|p| {
                let c = factorial(p).recip();
                let c = if p > n && (p - n) % 2 == 1 { -c } else { c };
                Poly::monomial(c, p)
            })
            .collect(),
        GroupKind::SoEven { .. } => return Err(FlagError::Unsupported(kind)),
    };
    Ok(entries)
}

/// `γ(t)` as an `m×1` column.
pub fn curve_point(kind: GroupKind, t: &Rational) -> Result<Matrix<Rational>, FlagError> {
    let entries = curve_entries(kind)?;
    Ok(Matrix::column_vector(
        entries.iter().map(|p| p.eval(t)).collect(),
    ))
}

/// Flag whose `i`-th basis column is `γ^{(i-1)}(t)`, differentiated exactly.
pub fn osculating_flag(kind: GroupKind, t: &Rational) -> Result<Flag, FlagError> {
    let entries = curve_entries(kind)?;
    let m = entries.len();
    let columns: Vec<Vec<Rational>> = (0..m)
        .map(|j| {
            entries
                .iter()
                .map(|p| p.nth_derivative(j).eval(t))
                .collect()
        })
        .collect();
    Flag::new(Matrix::from_columns(m, &columns))
}
