use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::curves_flags::{osculating_flag, Flag, GroupKind};
use schubert_core::exact_linalg::{rat, Matrix, Rational};
use schubert_core::schubert::{
    quotient_complement, random_cell_point, tangent_space, transversality_certificate,
    SchubertCondition,
};

fn random_condition(k: usize, m: usize, rng: &mut ChaCha8Rng) -> SchubertCondition {
    let mut idx: Vec<usize> = sample(rng, m, k).into_iter().map(|i| i + 1).collect();
    idx.sort_unstable();
    SchubertCondition::new(k, m, idx).unwrap()
}

fn random_flag(m: usize, rng: &mut ChaCha8Rng) -> Flag {
    if rng.gen_bool(0.5) {
        let t = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        return osculating_flag(GroupKind::Sl { m }, &t).unwrap();
    }
    loop {
        let rows = (0..m)
            .map(|_| (0..m).map(|_| rat(rng.gen_range(-3..=3), 1)).collect())
            .collect();
        if let Ok(f) = Flag::new(Matrix::from_rows(rows)) {
            return f;
        }
    }
}

/// Derivatives of the cell chart used by `random_cell_point`: moving column
/// `j` along `f_l` for `l < i_j`, expressed in `Hom(V, ℂ^m/V)` coordinates.
fn chart_tangents(
    v: &Matrix<Rational>,
    w: &Matrix<Rational>,
    c: &SchubertCondition,
    f: &Flag,
) -> Matrix<Rational> {
    let (k, m) = (c.k(), c.m());
    let q = m - k;
    let to_coords = v.hstack(w).inverse().unwrap().unwrap();
    let mut rows = Vec::new();
    for (j, &i) in c.indices().iter().enumerate() {
        for l in 0..i - 1 {
            let coords = &to_coords * &f.subspace(l + 1).columns(l..l + 1);
            let mut phi = vec![rat(0, 1); q * k];
            for r in 0..q {
                phi[r * k + j] = coords[(k + r, 0)].clone();
            }
            rows.push(phi);
        }
    }
    if rows.is_empty() {
        Matrix::zeros(0, q * k)
    } else {
        Matrix::from_rows(rows)
    }
}

#[test]
fn tangent_rank_equals_codim_on_small_grassmannians() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for m in 2..=10 {
        for k in 1..m {
            if k * (m - k) > 9 {
                continue;
            }
            for _ in 0..100 {
                let c = random_condition(k, m, &mut rng);
                let f = random_flag(m, &mut rng);
                let v = random_cell_point(&c, &f, &mut rng);
                let ts = tangent_space(&v, &c, &f).unwrap();
                assert_eq!(ts.codim(), c.codim(), "{c:?}");

                // the chart derivatives span the kernel of the constraints
                let chart = chart_tangents(v.basis(), &quotient_complement(&v), &c, &f);
                assert_eq!(chart.rank(), k * (m - k) - c.codim());
                if ts.constraints.rows() > 0 && chart.rows() > 0 {
                    assert!((&ts.constraints * &chart.transpose()).is_zero());
                }

                let cert = transversality_certificate(&v, &[(c.clone(), f)]).unwrap();
                assert!(cert.transverse);
            }
        }
    }
}
