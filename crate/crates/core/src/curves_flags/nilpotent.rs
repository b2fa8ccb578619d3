use crate::exact_linalg::{int, Field, Matrix, Rational};

use super::{FlagError, GroupKind};

/// Principal nilpotent of the Lie algebra of `kind`, realized in `sl_m`.
///
/// Only the subdiagonal is populated except for `SO(2n)`, which also has
/// `+1` at (row `n+1`, column `n-1`) and `-1` at (row `n+2`, column `n`),
/// 1-indexed.
pub fn principal_nilpotent(kind: GroupKind) -> Result<Matrix<Rational>, FlagError> {
    kind.validate()?;
    let m = kind.dim();
    let mut eta = Matrix::zeros(m, m);
    // subdiagonal entry j sits at (row j+1, col j), 0-indexed
    let sub = |j: usize| -> Rational {
        match kind {
            GroupKind::Sl { .. } => int(j as i64 + 1),
            GroupKind::Sp { n } | GroupKind::SoOdd { n } => {
                if j < n {
                    int(1)
                } else {
                    int(-1)
                }
            }
            GroupKind::SoEven { n } => match (j + 1).cmp(&n) {
                std::cmp::Ordering::Less => int(1),
                std::cmp::Ordering::Equal => int(0),
                std::cmp::Ordering::Greater => int(-1),
            },
        }
    };
    for j in 0..m - 1 {
        eta[(j + 1, j)] = sub(j);
    }
    if let GroupKind::SoEven { n } = kind {
        eta[(n, n - 2)] = int(1);
        eta[(n + 1, n - 1)] = int(-1);
    }
    Ok(eta)
}

/// Smallest `p` with `Nᵖ = 0`.
pub fn nilpotency_index<F: Field>(n: &Matrix<F>) -> Result<usize, FlagError> {
    Ok(n.nilpotency_index()?)
}
