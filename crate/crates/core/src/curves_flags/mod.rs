//! Rational normal curves, osculating flags, invariant forms and principal
//! nilpotents for `SL(m)`, `Sp(2n)`, `SO(2n+1)` and (partially) `SO(2n)`.
//!
//! Vectors are columns. The curves use divided powers `tᵏ/k!` with a sign
//! change after the middle coordinate for the symplectic and odd orthogonal
//! cases, so that `exp(t·η)` applied to the coordinate flag is the
//! osculating flag of the curve at `t`.

mod curve;
mod flag;
mod forms;
mod nilpotent;
mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_linalg::LinalgError;

pub use curve::{curve_entries, curve_point, osculating_flag};
pub use flag::{exp_translate_flag, flags_equal, Flag};
pub use forms::{gram_matrix, in_lie_algebra, is_isotropic_flag, BilinearForm, FormKind};
pub use nilpotent::{nilpotency_index, principal_nilpotent};
pub use random::{random_isotropic_flag, random_isotropic_flag_with, root_elements, RootFamily};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("{0} is not supported by this operation")]
    Unsupported(GroupKind),
    #[error("invalid group parameters: {0}")]
    InvalidKind(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("flag basis must be an invertible square matrix")]
    SingularBasis,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Classical group together with its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", try_from = "RawGroupKind")]
pub enum GroupKind {
    /// `SL(m)`, `m ≥ 2`.
    #[serde(rename = "SL")]
    Sl { m: usize },
    /// `Sp(2n)`, `n ≥ 1`.
    #[serde(rename = "Sp")]
    Sp { n: usize },
    /// `SO(2n+1)`, `n ≥ 1`.
    #[serde(rename = "SO_odd")]
    SoOdd { n: usize },
    /// `SO(2n)`, `n ≥ 2`. Only the nilpotent is available.
    #[serde(rename = "SO_even")]
    SoEven { n: usize },
}

#[derive(Deserialize)]
#[serde(tag = "type")]
enum RawGroupKind {
    #[serde(rename = "SL")]
    Sl { m: usize },
    #[serde(rename = "Sp")]
    Sp { n: usize },
    #[serde(rename = "SO_odd")]
    SoOdd { n: usize },
    #[serde(rename = "SO_even")]
    SoEven { n: usize },
}

impl TryFrom<RawGroupKind> for GroupKind {
    type Error = FlagError;
    fn try_from(raw: RawGroupKind) -> Result<Self, FlagError> {
        let kind = match raw {
            RawGroupKind::Sl { m } => GroupKind::Sl { m },
            RawGroupKind::Sp { n } => GroupKind::Sp { n },
            RawGroupKind::SoOdd { n } => GroupKind::SoOdd { n },
            RawGroupKind::SoEven { n } => GroupKind::SoEven { n },
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl GroupKind {
    pub fn validate(&self) -> Result<(), FlagError> {
        let ok = match *self {
            GroupKind::Sl { m } => m >= 2,
            GroupKind::Sp { n } | GroupKind::SoOdd { n } => n >= 1,
            GroupKind::SoEven { n } => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(FlagError::InvalidKind(format!("{self} is too small")))
        }
    }

    /// Dimension of the defining representation.
    pub fn dim(&self) -> usize {
        match *self {
            GroupKind::Sl { m } => m,
            GroupKind::Sp { n } | GroupKind::SoEven { n } => 2 * n,
            GroupKind::SoOdd { n } => 2 * n + 1,
        }
    }

    /// Kinds with a rational normal curve (and so an osculating flag).
    pub fn has_curve(&self) -> bool {
        !matches!(self, GroupKind::SoEven { .. })
    }

    pub fn has_form(&self) -> bool {
        matches!(self, GroupKind::Sp { .. } | GroupKind::SoOdd { .. })
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupKind::Sl { m } => write!(f, "SL({m})"),
            GroupKind::Sp { n } => write!(f, "Sp({})", 2 * n),
            GroupKind::SoOdd { n } => write!(f, "SO({})", 2 * n + 1),
            GroupKind::SoEven { n } => write!(f, "SO({})", 2 * n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serde_shape() {
        let json = serde_json::to_string(&GroupKind::Sp { n: 2 }).unwrap();
        assert_eq!(json, r#"{"type":"Sp","n":2}"#);
        let back: GroupKind = serde_json::from_str(r#"{"type":"SO_odd","n":3}"#).unwrap();
        assert_eq!(back, GroupKind::SoOdd { n: 3 });
        assert!(serde_json::from_str::<GroupKind>(r#"{"type":"SL","m":1}"#).is_err());
        assert!(serde_json::from_str::<GroupKind>(r#"{"type":"SO_even","n":1}"#).is_err());
    }

    #[test]
    fn dims() {
        assert_eq!(GroupKind::Sl { m: 5 }.dim(), 5);
        assert_eq!(GroupKind::Sp { n: 3 }.dim(), 6);
        assert_eq!(GroupKind::SoOdd { n: 2 }.dim(), 5);
        assert_eq!(GroupKind::SoEven { n: 2 }.dim(), 4);
        assert_eq!(GroupKind::SoOdd { n: 2 }.to_string(), "SO(5)");
    }
}
