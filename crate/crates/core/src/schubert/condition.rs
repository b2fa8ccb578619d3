use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::curves_flags::Flag;
use crate::exact_linalg::{rat, Field, Matrix, Rational};

use super::SchubertError;

/// Strictly increasing `k`-subset `i₁ < … < i_k` of `{1, …, m}` (1-indexed),
/// encoding `Ω_I E_• = {V : dim(V ∩ E_{i_j}) ≥ j for all j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCondition")]
pub struct SchubertCondition {
    k: usize,
    m: usize,
    indices: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCondition {
    k: usize,
    m: usize,
    indices: Vec<usize>,
}

impl TryFrom<RawCondition> for SchubertCondition {
    type Error = SchubertError;
    fn try_from(raw: RawCondition) -> Result<Self, SchubertError> {
        SchubertCondition::new(raw.k, raw.m, raw.indices)
    }
}

impl SchubertCondition {
    pub fn new(k: usize, m: usize, indices: Vec<usize>) -> Result<Self, SchubertError> {
        let invalid = |why: &str| {
            SchubertError::InvalidCondition(format!("{indices:?} in Gr({k},{m}): {why}"))
        };
        if indices.len() != k {
            return Err(invalid("needs exactly k indices"));
        }
        if k == 0 || k >= m {
            return Err(invalid("requires 1 <= k < m"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("indices must be strictly increasing"));
        }
        if indices[0] < 1 || indices[k - 1] > m {
            return Err(invalid("indices must lie in 1..=m"));
        }
        Ok(Self { k, m, indices })
    }

    /// `{m-k+1, …, m}`, satisfied by every `V`.
    pub fn vacuous(k: usize, m: usize) -> Result<Self, SchubertError> {
        Self::new(k, m, (m - k + 1..=m).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `Σ_j (m - k + j - i_j)`.
    pub fn codim(&self) -> usize {
        self.indices
            .iter()
            .enumerate()
            .map(|(j, &i)| self.m - self.k + (j + 1) - i)
            .sum()
    }
}

pub fn codim(condition: &SchubertCondition) -> usize {
    condition.codim()
}

/// The codimension-one condition `{m-k, m-k+2, …, m}`.
pub fn iota(k: usize, m: usize) -> Result<SchubertCondition, SchubertError> {
    if k == 0 || k >= m {
        return Err(SchubertError::InvalidCondition(format!(
            "Gr({k},{m}) requires 1 <= k < m"
        )));
    }
    let mut indices = vec![m - k];
    indices.extend(m - k + 2..=m);
    SchubertCondition::new(k, m, indices)
}

/// A point of `Gr(k, m)`: the column span of an `m×k` rank-`k` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GrPoint<F = Rational> {
    basis: Matrix<F>,
}

impl<F: Field> GrPoint<F> {
    pub fn new(basis: Matrix<F>) -> Result<Self, SchubertError> {
        if basis.cols() == 0 || basis.cols() >= basis.rows() || basis.rank() != basis.cols() {
            return Err(SchubertError::InvalidPoint);
        }
        Ok(Self { basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn k(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// `dim(V ∩ E_i) = k + i - rank[V | E_i]`.
    pub fn intersection_dim(&self, flag: &Flag<F>, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.k() + i - self.basis.hstack(&flag.subspace(i)).rank()
    }

    /// Same span as `other`.
    pub fn same_span(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.k() == other.k()
            && self.basis.hstack(&other.basis).rank() == self.k()
    }

    /// The basis in reduced column-echelon form, a canonical representative.
    pub fn normalized(&self) -> Self {
        let (reduced, pivots) = self.basis.transpose().rref();
        GrPoint {
            basis: reduced.rows_range(0..pivots.len()).transpose(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> GrPoint<G> {
        GrPoint {
            basis: self.basis.map(f),
        }
    }
}

impl GrPoint<Rational> {
    pub fn lift<G: Field>(&self) -> GrPoint<G> {
        GrPoint {
            basis: self.basis.lift(),
        }
    }
}

pub(crate) fn check_dims<F: Field>(
    v: &GrPoint<F>,
    condition: &SchubertCondition,
    flag: &Flag<F>,
) -> Result<(), SchubertError> {
    if v.ambient_dim() != condition.m()
        || flag.ambient_dim() != condition.m()
        || v.k() != condition.k()
    {
        return Err(SchubertError::DimensionMismatch {
            point: (v.k(), v.ambient_dim()),
            condition: (condition.k(), condition.m()),
            flag: flag.ambient_dim(),
        });
    }
    Ok(())
}

/// Whether `V ∈ Ω_I E_•`.
pub fn membership<F: Field>(
    v: &GrPoint<F>,
    condition: &SchubertCondition,
    flag: &Flag<F>,
) -> Result<bool, SchubertError> {
    check_dims(v, condition, flag)?;
    Ok(condition
        .indices()
        .iter()
        .enumerate()
        .all(|(j, &i)| v.intersection_dim(flag, i) > j))
}

/// Whether `V` lies in the open Schubert cell: `dim(V ∩ E_{i_j}) = j` and
/// `dim(V ∩ E_{i_j - 1}) = j - 1` for all `j`.
pub fn cell_interior<F: Field>(
    v: &GrPoint<F>,
    condition: &SchubertCondition,
    flag: &Flag<F>,
) -> Result<bool, SchubertError> {
    if !membership(v, condition, flag)? {
        return Err(SchubertError::NotMember);
    }
    Ok(condition.indices().iter().enumerate().all(|(j, &i)| {
        v.intersection_dim(flag, i) == j + 1 && v.intersection_dim(flag, i - 1) == j
    }))
}

/// Random point of the open cell of `condition` relative to `flag`:
/// column `j` is `f_{i_j}` plus random multiples of `f_l` for `l < i_j`.
pub fn random_cell_point<R: Rng + ?Sized>(
    condition: &SchubertCondition,
    flag: &Flag,
    rng: &mut R,
) -> GrPoint {
    let m = condition.m();
    let columns: Vec<Vec<Rational>> = condition
        .indices()
        .iter()
        .map(|&i| {
            let mut col = flag.basis().column(i - 1);
            for l in 0..i - 1 {
                let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
                for (r, x) in flag.basis().column(l).into_iter().enumerate() {
                    col[r] = col[r].clone() + c.clone() * x;
                }
            }
            col
        })
        .collect();
    GrPoint::new(Matrix::from_columns(m, &columns)).expect("echelon columns are independent")
}
