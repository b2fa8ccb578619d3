use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_linalg::{exp_nilpotent, rat, Matrix, One, Rational};

use super::{gram_matrix, in_lie_algebra, Flag, FlagError, GroupKind};

pub type RootFamily = Vec<Matrix<Rational>>;

/// Root elements of the Lie algebra of `kind`: for each matrix unit `E_ab`
/// (`a ≠ b`), the sum of `E_ab` and its image under `X ↦ -G⁻¹XᵀG`.
///
/// Returned as `(upper, lower)` strictly triangular families, one element per
/// dual pair of matrix units.
pub fn root_elements(kind: GroupKind) -> Result<(RootFamily, RootFamily), FlagError> {
    let form = gram_matrix(kind)?;
    let m = form.dim();
    let g = form.gram();
    let g_inv = g.inverse()?.expect("form is non-degenerate");
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            // the dual unit of (a, b) is (m-1-b, m-1-a); keep one per pair
            let dual = (m - 1 - b, m - 1 - a);
            if (a, b) > dual {
                continue;
            }
            let mut unit = Matrix::zeros(m, m);
            unit[(a, b)] = Rational::one();
            let image = -&(&(&g_inv * &unit.transpose()) * g);
            let x = &unit + &image;
            if x.is_zero() {
                continue;
            }
            debug_assert!(in_lie_algebra(&x, &form));
            if a < b {
                upper.push(x);
            } else {
                lower.push(x);
            }
        }
    }
    Ok((upper, lower))
}

/// Seeded pseudo-random isotropic flag for `Sp(2n)` or `SO(2n+1)`.
pub fn random_isotropic_flag(kind: GroupKind, seed: u64) -> Result<Flag, FlagError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_isotropic_flag_with(kind, &mut rng)
}

/// `g·E_•^std`, with `g` a product of root exponentials `exp(c·X)` over the
/// upper then the lower root elements, coefficients `c = p/q` with
/// `p ∈ [-9, 9]`, `q ∈ [1, 9]`.
pub fn random_isotropic_flag_with<R: Rng + ?Sized>(
    kind: GroupKind,
    rng: &mut R,
) -> Result<Flag, FlagError> {
    let (upper, lower) = root_elements(kind)?;
    let m = kind.dim();
    let mut g = Matrix::identity(m);
    for x in upper.iter().chain(&lower) {
        let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        g = &g * &exp_nilpotent(x, &c)?;
    }
    Flag::new(g)
}

#[cfg(test)]
fn preserves_form(g: &Matrix<Rational>, form: &super::BilinearForm) -> bool {
    &(&g.transpose() * form.gram()) * g == *form.gram()
}
