use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::curves_flags::{
    gram_matrix, is_isotropic_flag, osculating_flag, random_isotropic_flag, Flag, GroupKind,
};
use schubert_core::exact_linalg::{
    int, rat, solve_quadratic, Field, Matrix, QuadExt, Rational, Zero,
};
use schubert_core::schubert::{
    iota, membership, small_solver_gr24, transversality_certificate, GrPoint, SchubertError,
};

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn plucker<F: Field>(b: &Matrix<F>) -> Vec<F> {
    PAIRS
        .iter()
        .map(|&(i, j)| {
            b[(i, 0)].clone() * b[(j, 1)].clone() - b[(j, 0)].clone() * b[(i, 1)].clone()
        })
        .collect()
}

/// `det[V | A]` as a bilinear pairing of Plücker vectors.
fn incidence_row<F: Field>(q: &[F]) -> Vec<F> {
    // p12 q34 − p13 q24 + p14 q23 + p23 q14 − p24 q13 + p34 q12
    vec![
        q[5].clone(),
        -q[4].clone(),
        q[3].clone(),
        q[2].clone(),
        -q[1].clone(),
        q[0].clone(),
    ]
}

fn quadric<F: Field>(p: &[F]) -> F {
    p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone() + p[2].clone() * p[3].clone()
}

/// Solutions as Plücker vectors: the four incidences cut a pencil out of ℙ⁵,
/// which meets the Plücker quadric in the solutions.
fn plucker_oracle(flags: &[Flag; 4]) -> Vec<Vec<QuadExt>> {
    let rows = flags
        .iter()
        .map(|f| incidence_row(&plucker(&f.subspace(2))))
        .collect();
    let pencil = Matrix::<Rational>::from_rows(rows).kernel();
    assert_eq!(pencil.cols(), 2);
    let u = pencil.column(0);
    let w = pencil.column(1);
    let sum: Vec<Rational> = u
        .iter()
        .zip(&w)
        .map(|(a, b)| a.clone() + b.clone())
        .collect();
    let (qu, qw) = (quadric(&u), quadric(&w));
    let cross = quadric(&sum) - qu.clone() - qw.clone();
    let lift = |v: &[Rational]| v.iter().map(QuadExt::from_rational).collect::<Vec<_>>();
    assert!(!qw.is_zero(), "pencil direction lies on the quadric");
    solve_quadratic(&qw, &cross, &qu)
        .unwrap()
        .into_iter()
        .map(|x| {
            lift(&u)
                .into_iter()
                .zip(lift(&w))
                .map(|(a, b)| a + x.clone() * b)
                .collect()
        })
        .collect()
}

fn proportional(a: &[QuadExt], b: &[QuadExt]) -> bool {
    (0..6).all(|i| {
        (0..6).all(|j| (a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone()).is_zero())
    })
}

fn check_against_oracle(flags: &[Flag; 4]) -> Vec<GrPoint<QuadExt>> {
    let sols = small_solver_gr24(flags).unwrap();
    let expected = plucker_oracle(flags);
    assert_eq!(sols.len(), 2);
    assert!(!proportional(&expected[0], &expected[1]));
    for e in &expected {
        assert_eq!(
            sols.iter()
                .filter(|v| proportional(&plucker(v.basis()), e))
                .count(),
            1
        );
    }
    let c = iota(2, 4).unwrap();
    for v in &sols {
        let pairs: Vec<_> = flags
            .iter()
            .map(|f| (c.clone(), f.lift::<QuadExt>()))
            .collect();
        for (c, f) in &pairs {
            assert!(membership(v, c, f).unwrap());
        }
        let cert = transversality_certificate(v, &pairs).unwrap();
        assert!(cert.transverse, "{cert:?}");
        assert_eq!((cert.tangent_codim, cert.codim_sum), (4, 4));
    }
    sols
}

#[test]
fn osculating_0123_matches_chart_elimination() {
    let flags = [0, 1, 2, 3].map(|t| osculating_flag(GroupKind::Sl { m: 4 }, &int(t)).unwrap());
    let sols = check_against_oracle(&flags);
    // in the chart span((1,0,a,b), (0,1,c,d)) elimination leaves 3a² + 11a + 9 = 0,
    // b = −3, c = 3, d = 3a + 11
    for v in &sols {
        let p = plucker(v.basis());
        let a = -p[3].clone().div(&p[0]);
        let b = -p[4].clone().div(&p[0]);
        let c = p[1].clone().div(&p[0]);
        let d = p[2].clone().div(&p[0]);
        let three = QuadExt::from_int(3);
        assert!((three.clone() * a.clone() * a.clone()
            + QuadExt::from_int(11) * a.clone()
            + QuadExt::from_int(9))
        .is_zero());
        assert_eq!(b, QuadExt::from_int(-3));
        assert_eq!(c, three.clone());
        assert_eq!(d, three * a.clone() + QuadExt::from_int(11));
        assert_eq!(a.d(), &13.into());
    }
}

#[test]
fn osculating_at_other_real_points() {
    for pts in [[-2, 0, 1, 5], [-3, -1, 1, 3], [1, 2, 4, 8]] {
        let flags = pts.map(|t| osculating_flag(GroupKind::Sl { m: 4 }, &int(t)).unwrap());
        check_against_oracle(&flags);
    }
    let flags = [rat(-1, 2), rat(1, 3), rat(3, 4), rat(7, 5)]
        .map(|t| osculating_flag(GroupKind::Sl { m: 4 }, &t).unwrap());
    check_against_oracle(&flags);
}

#[test]
fn generic_rational_planes() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut solved = 0;
    for _ in 0..20 {
        let flags: Vec<Flag> = (0..4)
            .map(|_| loop {
                let rows = (0..4)
                    .map(|_| (0..4).map(|_| int(rng.gen_range(-4..=4))).collect())
                    .collect();
                if let Ok(f) = Flag::new(Matrix::from_rows(rows)) {
                    break f;
                }
            })
            .collect();
        let flags: [Flag; 4] = flags.try_into().unwrap();
        match small_solver_gr24(&flags) {
            Ok(_) => {
                check_against_oracle(&flags);
                solved += 1;
            }
            Err(e) => assert!(
                matches!(e, SchubertError::DegenerateConfiguration(_)),
                "{e}"
            ),
        }
    }
    assert!(solved >= 15, "{solved}");
}

#[test]
fn random_isotropic_sp4() {
    let kind = GroupKind::Sp { n: 2 };
    let form = gram_matrix(kind).unwrap();
    for seed in 0..20 {
        let flags = [0, 1, 2, 3].map(|i| {
            let f = random_isotropic_flag(kind, 100 * seed + i).unwrap();
            assert!(is_isotropic_flag(&f, &form).unwrap());
            f
        });
        check_against_oracle(&flags);
    }
}
