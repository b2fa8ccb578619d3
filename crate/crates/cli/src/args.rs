use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::curves_flags::GroupKind;
use schubert_core::exact_linalg::{parse_rational, Rational};
use schubert_core::schubert::SchubertCondition;

#[derive(Parser, Debug)]
#[command(
    name = "schubert",
    version,
    about = "Exact osculating flags and Schubert certificates"
)]
pub struct Cli {
    /// Output format; SCHUBERT_OUTPUT=json|plain takes precedence.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The curve point γ(t).
    Curve {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        t: Rational,
    },
    /// Basis of the osculating flag at t.
    OsculatingFlag {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        t: Rational,
    },
    /// Check that osculating flags are isotropic for the invariant form.
    VerifyIsotropy {
        #[command(flatten)]
        kind: KindArgs,
        /// Comma-separated rationals; may be empty.
        #[arg(long, allow_hyphen_values = true, value_parser = points, default_value = "")]
        t: Points,
    },
    /// The principal nilpotent and its index of nilpotency.
    Nilpotent {
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Check that exp(tη) moves the coordinate flag to the osculating flag.
    PetersonCheck {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = points, default_value = "0,1,-1,2,-2,1/2,-3/5")]
        t: Points,
    },
    /// 2-planes in ℂ⁴ meeting the 2-planes of four flags, with certificates.
    SolveFourLines {
        /// Osculating flags at the given points.
        #[arg(long, conflicts_with = "isotropic_sp4", requires = "points")]
        osculating: bool,
        #[arg(long, allow_hyphen_values = true, value_parser = points)]
        points: Option<Points>,
        /// Curve for --osculating: sl (SL(4)) or sp (Sp(4)).
        #[arg(long, value_enum, default_value_t = CurveKind::Sl)]
        kind: CurveKind,
        /// Four random isotropic flags for Sp(4).
        #[arg(long, requires = "seed")]
        isotropic_sp4: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Codimension of ramification against the Wronskian's order of vanishing.
    EhCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = points)]
        points: Points,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Expected dimension of an intersection described in a JSON file.
    DimReport { file: PathBuf },
    /// Pad conditions with ι at fresh points to expected dimension 0.
    Pad {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// INDICES@T, e.g. 2,4@0; repeatable.
        #[arg(long = "condition", allow_hyphen_values = true)]
        conditions: Vec<String>,
        #[arg(long, allow_hyphen_values = true, value_parser = points, default_value = "")]
        fresh: Points,
        /// Solve and certify the padded problem (Gr(2,4), all conditions ι).
        #[arg(long)]
        solve: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindName {
    Sl,
    Sp,
    SoOdd,
    SoEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    Sl,
    Sp,
}

#[derive(Args, Debug)]
pub struct KindArgs {
    #[arg(long, value_enum)]
    pub kind: KindName,
    /// Size for sl.
    #[arg(long)]
    pub m: Option<usize>,
    /// Rank for sp, so-odd and so-even.
    #[arg(long)]
    pub n: Option<usize>,
}

impl KindArgs {
    pub fn group(&self) -> Result<GroupKind, String> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| format!("--kind {:?} needs {flag}", self.kind))
        };
        let kind = match self.kind {
            KindName::Sl => GroupKind::Sl {
                m: need(self.m, "--m")?,
            },
            KindName::Sp => GroupKind::Sp {
                n: need(self.n, "--n")?,
            },
            KindName::SoOdd => GroupKind::SoOdd {
                n: need(self.n, "--n")?,
            },
            KindName::SoEven => GroupKind::SoEven {
                n: need(self.n, "--n")?,
            },
        };
        kind.validate().map_err(|e| e.to_string())?;
        Ok(kind)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Points(pub Vec<Rational>);

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn points(s: &str) -> Result<Points, String> {
    if s.trim().is_empty() {
        return Ok(Points(Vec::new()));
    }
    s.split(',')
        .map(rational)
        .collect::<Result<_, _>>()
        .map(Points)
}

/// `"2,4@0"` ↦ (`{2, 4}`, 0).
pub fn condition_at(k: usize, m: usize, s: &str) -> Result<(SchubertCondition, Rational), String> {
    let (idx, t) = s
        .split_once('@')
        .ok_or_else(|| format!("condition {s:?} must look like INDICES@T"))?;
    let indices = idx
        .split(',')
        .map(|i| {
            i.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index in {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let c = SchubertCondition::new(k, m, indices).map_err(|e| e.to_string())?;
    Ok((c, rational(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use schubert_core::exact_linalg::rat;

    #[test]
    fn point_lists() {
        assert_eq!(
            points("0,1,-1,1/2").unwrap().0,
            vec![rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2)]
        );
        assert!(points("").unwrap().0.is_empty());
        assert!(points("1,,2").is_err());
        assert!(points("1/0").is_err());
    }

    #[test]
    fn conditions() {
        let (c, t) = condition_at(2, 4, "2,4@-1/2").unwrap();
        assert_eq!(c.indices(), &[2, 4]);
        assert_eq!(t, rat(-1, 2));
        assert!(condition_at(2, 4, "2,4").is_err());
        assert!(condition_at(2, 4, "4,2@0").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
