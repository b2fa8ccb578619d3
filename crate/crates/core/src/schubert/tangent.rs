//! Tangent spaces to Schubert cells in `Hom(V, ℂ^m/V)` and the stacked-rank
//! transversality test.

use serde::{Deserialize, Serialize};

use crate::curves_flags::Flag;
use crate::exact_linalg::{Field, Matrix};

use super::condition::{cell_interior, GrPoint, SchubertCondition};
use super::SchubertError;

/// Linear constraints cutting the tangent space of `Ω_I E_•` out of
/// `Hom(V, ℂ^m/V)`.
///
/// Unknowns are the entries of an `(m-k)×k` matrix `Φ` in row-major order;
/// `Φ` sends `V`-coordinates (w.r.t. the point's basis) to coordinates of
/// `ℂ^m/V` w.r.t. the complement chosen by [`quotient_complement`].
#[derive(Clone, Debug, PartialEq)]
pub struct TangentSpace<F> {
    pub point: GrPoint<F>,
    pub constraints: Matrix<F>,
}

impl<F: Field> TangentSpace<F> {
    pub fn hom_dim(&self) -> usize {
        let k = self.point.k();
        k * (self.point.ambient_dim() - k)
    }

    pub fn codim(&self) -> usize {
        self.constraints.rank()
    }

    pub fn dim(&self) -> usize {
        self.hom_dim() - self.codim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub transverse: bool,
    pub tangent_codim: usize,
    pub codim_sum: usize,
}

/// Standard basis vectors completing the columns of `v` to a basis of `ℂ^m`,
/// chosen greedily in index order.
pub fn quotient_complement<F: Field>(v: &GrPoint<F>) -> Matrix<F> {
    let m = v.ambient_dim();
    let mut current = v.basis().clone();
    let mut chosen = Vec::new();
    for i in 0..m {
        if chosen.len() == m - v.k() {
            break;
        }
        let mut e = Matrix::zeros(m, 1);
        e[(i, 0)] = F::one();
        let extended = current.hstack(&e);
        if extended.rank() == extended.cols() {
            current = extended;
            chosen.push(e);
        }
    }
    chosen
        .iter()
        .fold(Matrix::zeros(m, 0), |acc, e| acc.hstack(e))
}

/// Tangent constraints at a cell-interior point: `Φ(V ∩ E_{i_j}) ⊆ (E_{i_j} + V)/V`.
pub fn tangent_space<F: Field>(
    v: &GrPoint<F>,
    condition: &SchubertCondition,
    flag: &Flag<F>,
) -> Result<TangentSpace<F>, SchubertError> {
    if !cell_interior(v, condition, flag)? {
        return Err(SchubertError::NotInCellInterior);
    }
    let m = v.ambient_dim();
    let k = v.k();
    let q = m - k;
    let complement = quotient_complement(v);
    let to_coords = v
        .basis()
        .hstack(&complement)
        .inverse()?
        .expect("complement spans the quotient");

    let mut rows: Vec<Vec<F>> = Vec::new();
    for &i in condition.indices() {
        let e = flag.subspace(i);
        // kernel of [V | -E]: pairs (α, β) with Vα = Eβ
        let pairs = v.basis().hstack(&-&e).kernel();
        let source = pairs.rows_range(0..k);
        let target = (&to_coords * &e).rows_range(k..m);
        // ℓ with ℓ·target = 0 cut out the target subspace
        let annihilators = target.transpose().kernel();
        for a in 0..annihilators.cols() {
            for c in 0..source.cols() {
                let mut row = vec![F::zero(); q * k];
                for r in 0..q {
                    let l = &annihilators[(r, a)];
                    if l.is_zero() {
                        continue;
                    }
                    for s in 0..k {
                        row[r * k + s] = l.clone() * source[(s, c)].clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let constraints = if rows.is_empty() {
        Matrix::zeros(0, q * k)
    } else {
        Matrix::from_rows(rows)
    };
    Ok(TangentSpace {
        point: v.clone(),
        constraints,
    })
}

/// Stacks the tangent constraints of every condition at `v`; transverse iff
/// the stacked rank equals the sum of the codimensions.
pub fn transversality_certificate<F: Field>(
    v: &GrPoint<F>,
    conditions: &[(SchubertCondition, Flag<F>)],
) -> Result<Certificate, SchubertError> {
    let hom = v.k() * (v.ambient_dim() - v.k());
    let mut stacked = Matrix::zeros(0, hom);
    let mut codim_sum = 0;
    for (index, (condition, flag)) in conditions.iter().enumerate() {
        let ts = tangent_space(v, condition, flag).map_err(|e| SchubertError::AtCondition {
            index,
            source: Box::new(e),
        })?;
        stacked = stacked.vstack(&ts.constraints);
        codim_sum += condition.codim();
    }
    let tangent_codim = stacked.rank();
    Ok(Certificate {
        transverse: tangent_codim == codim_sum,
        tangent_codim,
        codim_sum,
    })
}
