//! Codimension bookkeeping on partial flag manifolds. Only dimensions are
//! computed; membership for permutation conditions is not modelled.

use serde::{Deserialize, Serialize};

use super::condition::SchubertCondition;
use super::SchubertError;

/// Permutation `w` of `{1, …, m}` in one-line notation whose descents lie in
/// `descent_bound`, the dimensions of the partial flag manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPerm")]
pub struct PermCondition {
    m: usize,
    perm: Vec<usize>,
    descent_bound: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPerm {
    perm: Vec<usize>,
    descent_bound: Vec<usize>,
}

impl TryFrom<RawPerm> for PermCondition {
    type Error = SchubertError;
    fn try_from(raw: RawPerm) -> Result<Self, SchubertError> {
        PermCondition::new(raw.perm, raw.descent_bound)
    }
}

impl PermCondition {
    pub fn new(perm: Vec<usize>, descent_bound: Vec<usize>) -> Result<Self, SchubertError> {
        let m = perm.len();
        let mut seen = vec![false; m + 1];
        for &v in &perm {
            if v == 0 || v > m || seen[v] {
                return Err(SchubertError::InvalidPermutation(format!(
                    "{perm:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        if descent_bound.iter().any(|&d| d == 0 || d >= m) {
            return Err(SchubertError::InvalidPermutation(format!(
                "descent positions {descent_bound:?} must lie in 1..{m}"
            )));
        }
        if let Some(d) = descents(&perm)
            .into_iter()
            .find(|d| !descent_bound.contains(d))
        {
            return Err(SchubertError::InvalidPermutation(format!(
                "{perm:?} has a descent at {d}, outside {descent_bound:?}"
            )));
        }
        Ok(Self {
            m,
            perm,
            descent_bound,
        })
    }

    /// Parses compact one-line notation such as `"32514"` (single digits).
    pub fn from_one_line(word: &str, descent_bound: Vec<usize>) -> Result<Self, SchubertError> {
        let perm = word
            .chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                    SchubertError::InvalidPermutation(format!("bad digit in {word:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(perm, descent_bound)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn descent_bound(&self) -> &[usize] {
        &self.descent_bound
    }
}

/// 1-based positions `a` with `w(a) > w(a+1)`.
fn descents(perm: &[usize]) -> Vec<usize> {
    (1..perm.len()).filter(|&a| perm[a - 1] > perm[a]).collect()
}

/// Number of inversions of `w`.
pub fn perm_codim(w: &PermCondition) -> usize {
    let p = &w.perm;
    (0..p.len())
        .map(|a| (a + 1..p.len()).filter(|&b| p[a] > p[b]).count())
        .sum()
}

/// `dim Fl(d₁, …, d_r; m) = Σ_{a<b} g_a g_b` over the gaps
/// `d₁, d₂ − d₁, …, m − d_r`.
pub fn flag_manifold_dim(dims: &[usize], m: usize) -> Result<usize, SchubertError> {
    if dims.is_empty()
        || dims.windows(2).any(|w| w[0] >= w[1])
        || dims[0] == 0
        || dims[dims.len() - 1] >= m
    {
        return Err(SchubertError::InvalidPermutation(format!(
            "flag dimensions {dims:?} must be strictly increasing in 1..{m}"
        )));
    }
    let mut gaps = Vec::with_capacity(dims.len() + 1);
    let mut prev = 0;
    for &d in dims.iter().chain(std::iter::once(&m)) {
        gaps.push(d - prev);
        prev = d;
    }
    Ok((0..gaps.len())
        .map(|a| {
            (a + 1..gaps.len())
                .map(|b| gaps[a] * gaps[b])
                .sum::<usize>()
        })
        .sum())
}

pub trait Codimension {
    fn codimension(&self) -> usize;
}

impl Codimension for SchubertCondition {
    fn codimension(&self) -> usize {
        self.codim()
    }
}

impl Codimension for PermCondition {
    fn codimension(&self) -> usize {
        perm_codim(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub expected: i64,
    pub empty_for_general: bool,
}

pub fn expected_dim_report<C: Codimension>(conditions: &[C], ambient_dim: usize) -> DimReport {
    let total: usize = conditions.iter().map(Codimension::codimension).sum();
    let expected = ambient_dim as i64 - total as i64;
    DimReport {
        expected,
        empty_for_general: expected < 0,
    }
}
