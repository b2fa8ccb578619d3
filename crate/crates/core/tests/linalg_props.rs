use proptest::prelude::*;
use schubert_core::exact_linalg::{
    exp_nilpotent, int, rat, solve_quadratic, Field, Matrix, One, QuadExt, Rational, Zero,
};

fn small_rational() -> impl Strategy<Value = Rational> + Clone {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn matrix(max: usize, entries: impl Strategy<Value = Rational> + Clone) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(entries.clone(), r * c).prop_map(move |d| Matrix::from_vec(r, c, d))
    })
}

/// Largest `s` with a nonzero `s×s` minor.
fn minor_rank(m: &Matrix<Rational>) -> usize {
    fn subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
        if s == 0 {
            return vec![vec![]];
        }
        (s - 1..n)
            .flat_map(|last| {
                subsets(last, s - 1).into_iter().map(move |mut v| {
                    v.push(last);
                    v
                })
            })
            .collect()
    }
    fn det(a: &[Vec<Rational>]) -> Rational {
        if a.is_empty() {
            return Rational::one();
        }
        (0..a.len())
            .map(|c| {
                let minor: Vec<Vec<Rational>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = a[0][c].clone() * det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Rational::zero(), |x, y| x + y)
    }
    let top = m.rows().min(m.cols());
    (1..=top)
        .rev()
        .find(|&s| {
            subsets(m.rows(), s).into_iter().any(|rows| {
                subsets(m.cols(), s).into_iter().any(|cols| {
                    let sub: Vec<Vec<Rational>> =
                        rows.iter().map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect()).collect();
                    !det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

fn strictly_lower(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(small_rational(), n * n).prop_map(move |d| {
        let mut m = Matrix::from_vec(n, n, d);
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = Rational::zero();
            }
        }
        m
    })
}

fn quad(d: i64) -> impl Strategy<Value = QuadExt> {
    (small_rational(), small_rational()).prop_map(move |(a, b)| QuadExt::new(a, b, d.into()))
}

proptest! {
    #[test]
    fn rank_nullity_and_kernel(m in matrix(5, small_rational())) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rank_matches_minors(m in matrix(4, (-2i64..=2).prop_map(int))) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn exp_one_parameter_subgroup(n in (1usize..6).prop_flat_map(strictly_lower), s in small_rational(), t in small_rational()) {
        let es = exp_nilpotent(&n, &s).unwrap();
        let et = exp_nilpotent(&n, &t).unwrap();
        prop_assert_eq!(&es * &et, exp_nilpotent(&n, &(s.clone() + t)).unwrap());
        prop_assert_eq!(&es * &exp_nilpotent(&n, &-s).unwrap(), Matrix::identity(n.rows()));
    }

    #[test]
    fn quad_ext_is_a_field(x in quad(5), y in quad(5), z in quad(20)) {
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inv().unwrap(), QuadExt::one());
        }
        // (a + b√d)(a − b√d) = a² − d b²
        let n = x.a().clone() * x.a().clone() - rat(5, 1) * x.b().clone() * x.b().clone();
        prop_assert_eq!(x.clone() * x.conjugate(), QuadExt::from_rational(&n));
        // √20 = 2√5 shares the field
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y + x * z);
    }

    #[test]
    fn quadratic_roots_satisfy_the_equation(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let roots = solve_quadratic(&a, &b, &c).unwrap();
        prop_assert_eq!(roots.len(), if a.is_zero() { 1 } else { 2 });
        let lift = QuadExt::from_rational;
        for r in roots {
            let value = lift(&a) * r.clone() * r.clone() + lift(&b) * r + lift(&c);
            prop_assert!(value.is_zero());
        }
    }
}

#[test]
fn inconsistent_quadratic() {
    assert!(solve_quadratic(&int(0), &int(0), &int(3)).is_err());
}
