use crate::curves_flags::Flag;
use crate::exact_linalg::{solve_quadratic, Field, Matrix, QuadExt, Rational, Zero};

use super::condition::GrPoint;
use super::SchubertError;

/// Every 2-plane `V ⊂ ℚ⁴` (over ℚ(√d)) meeting `E₂` of each of the four flags,
/// i.e. the solutions of `Ω_ι E¹ ∩ Ω_ι E² ∩ Ω_ι E³ ∩ Ω_ι E⁴` in `Gr(2, 4)`.
///
/// With `A_i = E₂(flag_i)`, choose coordinates in which `A₁ = span(e₁, e₂)`
/// and `A₂ = span(e₃, e₄)`. Then `A₃` and `A₄` are graphs of invertible maps
/// `T₃`, `T₄`, a solution is `span((x, 0), (0, T₃x))`, and `x` ranges over the
/// eigenvectors of `T₄⁻¹T₃`, whose characteristic quadratic is solved exactly.
pub fn small_solver_gr24(flags: &[Flag; 4]) -> Result<Vec<GrPoint<QuadExt>>, SchubertError> {
    for f in flags {
        if f.ambient_dim() != 4 {
            return Err(SchubertError::DimensionMismatch {
                point: (2, 4),
                condition: (2, 4),
                flag: f.ambient_dim(),
            });
        }
    }
    let planes: Vec<Matrix<Rational>> = flags.iter().map(|f| f.subspace(2)).collect();
    for a in 0..4 {
        for b in a + 1..4 {
            if planes[a].hstack(&planes[b]).rank() != 4 {
                return Err(SchubertError::DegenerateConfiguration(format!(
                    "2-planes of flags {} and {} are not transverse",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let frame = planes[0].hstack(&planes[1]);
    let to_frame = frame.inverse()?.expect("A1 + A2 spans");
    let graph_map = |plane: &Matrix<Rational>| -> Matrix<Rational> {
        let local = &to_frame * plane;
        let top = local.rows_range(0..2);
        let bottom = local.rows_range(2..4);
        // transversality to A1 and A2 makes both blocks invertible
        &bottom * &top.inverse().unwrap().expect("plane transverse to A2")
    };
    let t3 = graph_map(&planes[2]);
    let t4 = graph_map(&planes[3]);
    let s = &t4.inverse()?.expect("T4 invertible") * &t3;

    let (s11, s12, s21, s22) = (&s[(0, 0)], &s[(0, 1)], &s[(1, 0)], &s[(1, 1)]);
    if s12.is_zero() && s21.is_zero() && s11 == s22 {
        return Err(SchubertError::InfinitelyMany);
    }
    let trace = s11 + s22;
    let det = s11 * s22 - s12 * s21;
    let roots = solve_quadratic(&Rational::from_int(1), &-trace, &det)?;
    if roots[0] == roots[1] {
        return Err(SchubertError::DegenerateConfiguration(
            "double root: discriminant 0".to_string(),
        ));
    }

    let s_q = s.lift::<QuadExt>();
    let t3_q = t3.lift::<QuadExt>();
    let frame_q = frame.lift::<QuadExt>();
    roots
        .into_iter()
        .map(|lambda| {
            let x = eigenvector(&s_q, &lambda);
            let y = &t3_q * &x;
            let a = &frame_q.columns(0..2) * &x;
            let b = &frame_q.columns(2..4) * &y;
            GrPoint::new(a.hstack(&b))
        })
        .collect()
}

/// Eigenvector of a 2×2 matrix for a simple eigenvalue.
fn eigenvector(s: &Matrix<QuadExt>, lambda: &QuadExt) -> Matrix<QuadExt> {
    let (s11, s12, s21, s22) = (&s[(0, 0)], &s[(0, 1)], &s[(1, 0)], &s[(1, 1)]);
    let entries = if !s12.is_zero() {
        vec![s12.clone(), lambda.clone() - s11.clone()]
    } else if !s21.is_zero() {
        vec![lambda.clone() - s22.clone(), s21.clone()]
    } else if lambda == s11 {
        vec![QuadExt::from_int(1), QuadExt::zero()]
    } else {
        vec![QuadExt::zero(), QuadExt::from_int(1)]
    };
    Matrix::column_vector(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves_flags::{osculating_flag, GroupKind};
    use crate::exact_linalg::int;
    use crate::schubert::{iota, membership};

    fn osc(points: [i64; 4]) -> [Flag; 4] {
        points.map(|t| osculating_flag(GroupKind::Sl { m: 4 }, &int(t)).unwrap())
    }

    #[test]
    fn two_solutions_at_0123() {
        let flags = osc([0, 1, 2, 3]);
        let sols = small_solver_gr24(&flags).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(!sols[0].same_span(&sols[1]));
        let c = iota(2, 4).unwrap();
        for v in &sols {
            for f in &flags {
                assert!(membership(v, &c, &f.lift()).unwrap());
            }
        }
    }

    #[test]
    fn incidence_determinants_vanish() {
        // dim(V ∩ A) ≥ 1 for 2-planes in ℚ⁴ iff det[V | A] = 0
        let flags = osc([0, 1, 2, 3]);
        let sols = small_solver_gr24(&flags).unwrap();
        for v in &sols {
            for f in &flags {
                let m = v.basis().hstack(&f.subspace(2).lift());
                assert!(m.determinant().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn repeated_point_is_degenerate() {
        let flags = osc([0, 1, 2, 2]);
        assert!(matches!(
            small_solver_gr24(&flags),
            Err(SchubertError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn special_configuration_has_infinitely_many() {
        // four planes all graphs of scalar multiples of the same map
        let plane = |a: i64, b: i64| {
            let mut m = Matrix::zeros(4, 4);
            m[(0, 0)] = int(a);
            m[(1, 1)] = int(a);
            m[(2, 0)] = int(b);
            m[(3, 1)] = int(b);
            m[(0, 2)] = int(1);
            m[(3, 3)] = int(1);
            m
        };
        let f1 = Matrix::<Rational>::identity(4);
        let mut f2 = Matrix::<Rational>::zeros(4, 4);
        for (r, c) in [(2, 0), (3, 1), (0, 2), (1, 3)] {
            f2[(r, c)] = int(1);
        }
        let flags = [
            Flag::new(f1).unwrap(),
            Flag::new(f2).unwrap(),
            Flag::new(plane(1, 1)).unwrap(),
            Flag::new(plane(1, 2)).unwrap(),
        ];
        assert_eq!(
            small_solver_gr24(&flags),
            Err(SchubertError::InfinitelyMany)
        );
    }
}
