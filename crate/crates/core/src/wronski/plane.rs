use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact_linalg::{rat, Field, Matrix, Poly, Rational};
use crate::schubert::{GrPoint, SchubertCondition};

use super::WronskiError;

/// `k`-dimensional space of polynomials of degree `< m`, given by a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyPlane<F = Rational> {
    m: usize,
    basis: Vec<Poly<F>>,
}

impl<F: Field> PolyPlane<F> {
    pub fn new(m: usize, basis: Vec<Poly<F>>) -> Result<Self, WronskiError> {
        let k = basis.len();
        if k == 0 || k >= m {
            return Err(WronskiError::InvalidPlane(format!(
                "need 0 < k < m, got k={k}, m={m}"
            )));
        }
        if let Some(p) = basis.iter().find(|p| p.degree().is_some_and(|d| d >= m)) {
            return Err(WronskiError::InvalidPlane(format!("{p} has degree >= {m}")));
        }
        let plane = Self { m, basis };
        if plane.coefficient_matrix().rank() != k {
            return Err(WronskiError::InvalidPlane(
                "basis is linearly dependent".into(),
            ));
        }
        Ok(plane)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Poly<F>] {
        &self.basis
    }

    /// `k×m` matrix, row `b` holding the coefficients of basis element `b`,
    /// lowest degree first.
    pub fn coefficient_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(
            self.basis
                .iter()
                .map(|p| (0..self.m).map(|j| p.coeff(j)).collect())
                .collect(),
        )
    }

    pub fn same_span(&self, other: &Self) -> bool {
        let a = self.coefficient_matrix();
        self.m == other.m
            && self.k() == other.k()
            && a.vstack(&other.coefficient_matrix()).rank() == self.k()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> PolyPlane<G> {
        PolyPlane {
            m: self.m,
            basis: self.basis.iter().map(|p| p.map(f)).collect(),
        }
    }
}

impl PolyPlane<Rational> {
    pub fn lift<G: Field>(&self) -> PolyPlane<G> {
        self.map(G::from_rational)
    }
}

/// `det(f_b^{(a)})` for `0 ≤ a, b < k`, by cofactor expansion.
pub fn wronskian<F: Field>(plane: &PolyPlane<F>) -> Poly<F> {
    let k = plane.k();
    let table: Vec<Vec<Poly<F>>> = (0..k)
        .map(|a| plane.basis().iter().map(|p| p.nth_derivative(a)).collect())
        .collect();
    let cols: Vec<usize> = (0..k).collect();
    cofactor(&table, 0, &cols)
}

fn cofactor<F: Field>(table: &[Vec<Poly<F>>], row: usize, cols: &[usize]) -> Poly<F> {
    if cols.is_empty() {
        return Poly::constant(F::one());
    }
    let mut total = Poly::zero();
    for (pos, &c) in cols.iter().enumerate() {
        if table[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &table[row][c] * &cofactor(table, row + 1, &rest);
        total = if pos % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// Largest `p` with `(t − t0)^p | f`.
pub fn vanishing_order<F: Field>(f: &Poly<F>, t0: &F) -> Result<usize, WronskiError> {
    if f.is_zero() {
        return Err(WronskiError::ZeroPolynomial);
    }
    let mut order = 0;
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.div_linear(t0);
        if !r.is_zero() {
            return Ok(order);
        }
        order += 1;
        rest = q;
    }
}

/// The `k` distinct orders `a₁ < … < a_k` of vanishing at `t0` attained by
/// elements of the plane: pivot columns of the reduced Taylor-coefficient
/// matrix.
pub fn vanishing_orders<F: Field>(plane: &PolyPlane<F>, t0: &F) -> Vec<usize> {
    let shifted = PolyPlane {
        m: plane.m,
        basis: plane.basis.iter().map(|p| p.taylor_at(t0)).collect(),
    };
    shifted.coefficient_matrix().rref().1
}

/// Condition `I` relative to the osculating flag at `t0` with
/// `i_j = m − a_{k+1−j}`, so `codim I = Σ_l (a_l − (l − 1))`.
pub fn ramification_condition<F: Field>(
    plane: &PolyPlane<F>,
    t0: &F,
) -> Result<SchubertCondition, WronskiError> {
    let a = vanishing_orders(plane, t0);
    let (k, m) = (plane.k(), plane.m());
    let indices = (0..k).map(|j| m - a[k - 1 - j]).collect();
    Ok(SchubertCondition::new(k, m, indices)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhReport {
    pub codim: usize,
    pub wronski_order: usize,
    pub equal: bool,
}

/// Compares `codim` of the ramification at `t0` with `ord_{t0} W`.
pub fn check_eh_identity<F: Field>(plane: &PolyPlane<F>, t0: &F) -> Result<EhReport, WronskiError> {
    let codim = ramification_condition(plane, t0)?.codim();
    let wronski_order = vanishing_order(&wronskian(plane), t0)?;
    Ok(EhReport {
        codim,
        wronski_order,
        equal: codim == wronski_order,
    })
}

fn binomial<F: Field>(n: usize, r: usize) -> F {
    (0..r).fold(F::one(), |acc, i| {
        acc * F::from_int((n - i) as i64).div(&F::from_int((i + 1) as i64))
    })
}

/// Coefficient vectors under the divided-power dictionary.
pub fn plane_to_grpoint<F: Field>(plane: &PolyPlane<F>) -> GrPoint<F> {
    let m = plane.m();
    let columns: Vec<Vec<F>> = plane
        .basis()
        .iter()
        .map(|p| {
            (0..m)
                .map(|i| {
                    let c = p.coeff(m - 1 - i).div(&binomial(m - 1, i));
                    if i % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    GrPoint::new(Matrix::from_columns(m, &columns)).expect("independent basis")
}

/// Inverse of [`plane_to_grpoint`].
pub fn grpoint_to_plane<F: Field>(v: &GrPoint<F>) -> PolyPlane<F> {
    let m = v.ambient_dim();
    let basis = (0..v.k())
        .map(|col| {
            let x = v.basis().column(col);
            Poly::new(
                (0..m)
                    .map(|j| {
                        let i = m - 1 - j;
                        let c = x[i].clone() * binomial(m - 1, i);
                        if i % 2 == 1 {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    PolyPlane { m, basis }
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Plane spanned by `k` polynomials with small random coefficients.
pub fn random_plane<R: Rng + ?Sized>(
    k: usize,
    m: usize,
    rng: &mut R,
) -> Result<PolyPlane, WronskiError> {
    loop {
        let basis = (0..k)
            .map(|_| Poly::new((0..m).map(|_| small_rational(rng)).collect()))
            .collect();
        match PolyPlane::new(m, basis) {
            Err(WronskiError::InvalidPlane(why)) if why.contains("dependent") => continue,
            other => return other,
        }
    }
}

/// Random plane with randomly chosen vanishing orders at `t0`, presented in
/// a randomly mixed basis.
pub fn random_ramified_plane<R: Rng + ?Sized>(
    k: usize,
    m: usize,
    t0: &Rational,
    rng: &mut R,
) -> Result<PolyPlane, WronskiError> {
    if k == 0 || k >= m {
        return Err(WronskiError::InvalidPlane(format!(
            "need 0 < k < m, got k={k}, m={m}"
        )));
    }
    let mut orders: Vec<usize> = sample(rng, m, k).into_vec();
    orders.sort_unstable();
    let shift = Poly::linear_root(t0);
    let echelon: Vec<Poly<Rational>> = orders
        .iter()
        .map(|&a| {
            let mut cofactor: Vec<Rational> = (0..m - a).map(|_| small_rational(rng)).collect();
            if cofactor[0] == rat(0, 1) {
                cofactor[0] = rat(1, 1);
            }
            // expand the cofactor around t0 so every coefficient is generic
            let mut local = Poly::zero();
            for (j, c) in cofactor.into_iter().enumerate() {
                local = &local + &shift.pow(j).scale(&c);
            }
            &shift.pow(a) * &local
        })
        .collect();
    loop {
        let mix = Matrix::from_rows(
            (0..k)
                .map(|_| (0..k).map(|_| small_rational(rng)).collect())
                .collect(),
        );
        if mix.rank() != k {
            continue;
        }
        let basis = (0..k)
            .map(|r| {
                (0..k).fold(Poly::zero(), |acc, b| {
                    &acc + &echelon[b].scale(&mix[(r, b)])
                })
            })
            .collect();
        return PolyPlane::new(m, basis);
    }
}
