use crate::exact_linalg::{solve_quadratic, Field, Matrix, Poly, QuadExt, Rational};

use super::plane::PolyPlane;
use super::WronskiError;

/// All 2-planes of cubics whose Wronskian is proportional to `∏ (t − t_i)`.
///
/// For `f, g` with Plücker coordinates `p_ab = f_a g_b − f_b g_a`,
/// `W = Σ_{a<b} (b − a) p_ab t^{a+b−1}`. Matching `W = Σ w_e t^e` fixes every
/// coordinate except `x = p₀₃` (with `p₁₂ = w₂ − 3x`), and the Plücker
/// relation becomes `−3x² + w₂x + w₀w₄ − w₁w₃/4 = 0`.
pub fn wronski_solver_gr24(roots: &[Rational; 4]) -> Result<Vec<PolyPlane<QuadExt>>, WronskiError> {
    for a in 0..4 {
        for b in a + 1..4 {
            if roots[a] == roots[b] {
                return Err(WronskiError::DegenerateConfiguration(format!(
                    "repeated root {}",
                    roots[a]
                )));
            }
        }
    }
    let w = roots
        .iter()
        .fold(Poly::constant(Rational::from_int(1)), |acc, r| {
            &acc * &Poly::linear_root(r)
        });
    let c = |e: usize| w.coeff(e);
    let half = Rational::from_int(1).div(&Rational::from_int(2));
    let quarter = half.clone() * half.clone();
    let xs = solve_quadratic(
        &Rational::from_int(-3),
        &c(2),
        &(c(0) * c(4) - quarter * c(1) * c(3)),
    )?;
    if xs[0] == xs[1] {
        return Err(WronskiError::DegenerateConfiguration(
            "double root: discriminant 0".to_string(),
        ));
    }
    let lift = QuadExt::from_rational;
    xs.into_iter()
        .map(|x| {
            let mut p = Matrix::<QuadExt>::zeros(4, 4);
            let entries = [
                ((0, 1), lift(&c(0))),
                ((0, 2), lift(&(half.clone() * c(1)))),
                ((0, 3), x.clone()),
                ((1, 2), lift(&c(2)) - QuadExt::from_int(3) * x.clone()),
                ((1, 3), lift(&(half.clone() * c(3)))),
                ((2, 3), lift(&c(4))),
            ];
            for ((a, b), v) in entries {
                p[(b, a)] = -v.clone();
                p[(a, b)] = v;
            }
            // the columns of p = f gᵀ − g fᵀ span the plane
            let (reduced, pivots) = p.transpose().rref();
            if pivots.len() != 2 {
                return Err(WronskiError::DegenerateConfiguration(
                    "Plücker vector is not decomposable".to_string(),
                ));
            }
            let basis = (0..2).map(|r| Poly::new(reduced.row(r).to_vec())).collect();
            PolyPlane::new(4, basis)
        })
        .collect()
}
