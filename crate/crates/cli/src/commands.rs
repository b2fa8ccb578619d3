use std::fs;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubert_core::curves_flags::{
    curve_point, exp_translate_flag, flags_equal, gram_matrix, in_lie_algebra, is_isotropic_flag,
    nilpotency_index, osculating_flag, principal_nilpotent, random_isotropic_flag_with, Flag,
    FlagError, GroupKind,
};
use schubert_core::exact_linalg::{format_rational, QuadExt, Rational};
use schubert_core::json::{vector_json, ToJson};
use schubert_core::schubert::{
    expected_dim_report, flag_manifold_dim, iota, pad_to_zero_dimensional, small_solver_gr24,
    transversality_certificate, Codimension, GrPoint, PermCondition, SchubertCondition,
    SchubertError,
};
use schubert_core::wronski::{
    check_eh_identity, plane_to_grpoint, random_plane, random_ramified_plane, wronski_solver_gr24,
    WronskiError,
};
use serde_json::{json, Value};

use crate::args::{condition_at, CurveKind, KindArgs, Points};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Unsupported(String),
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Degenerate(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(s) | CliError::Unsupported(s) | CliError::Degenerate(s) => s,
        }
    }
}

/// Argument validation failures.
impl From<String> for CliError {
    fn from(e: String) -> Self {
        CliError::Parse(e)
    }
}

impl From<FlagError> for CliError {
    fn from(e: FlagError) -> Self {
        match e {
            FlagError::Unsupported(_) => CliError::Unsupported(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<SchubertError> for CliError {
    fn from(e: SchubertError) -> Self {
        match e {
            SchubertError::DegenerateConfiguration(_) | SchubertError::InfinitelyMany => {
                CliError::Degenerate(e.to_string())
            }
            SchubertError::Flag(f) => f.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<WronskiError> for CliError {
    fn from(e: WronskiError) -> Self {
        match e {
            WronskiError::DegenerateConfiguration(_) => CliError::Degenerate(e.to_string()),
            WronskiError::Schubert(s) => s.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

/// A command's report and whether the claims it checks held.
pub struct Outcome {
    pub value: Value,
    pub claims_hold: bool,
}

impl Outcome {
    fn report(value: Value) -> Self {
        Self {
            value,
            claims_hold: true,
        }
    }
}

fn t_json(t: &Rational) -> Value {
    json!(format_rational(t))
}

pub fn curve(kind: &KindArgs, t: &Rational) -> Result<Outcome, CliError> {
    let v = curve_point(kind.group()?, t)?;
    Ok(Outcome::report(vector_json(&v)))
}

pub fn osculating(kind: &KindArgs, t: &Rational) -> Result<Outcome, CliError> {
    Ok(Outcome::report(
        osculating_flag(kind.group()?, t)?.to_json(),
    ))
}

pub fn verify_isotropy(kind: &KindArgs, ts: &Points) -> Result<Outcome, CliError> {
    let group = kind.group()?;
    let form = gram_matrix(group)?;
    let mut all = true;
    let mut results = Vec::new();
    for t in &ts.0 {
        let ok = is_isotropic_flag(&osculating_flag(group, t)?, &form)?;
        all &= ok;
        results.push(json!({"t": t_json(t), "isotropic": ok}));
    }
    Ok(Outcome {
        value: json!({"kind": group.to_string(), "results": results, "all_isotropic": all}),
        claims_hold: all,
    })
}

pub fn nilpotent(kind: &KindArgs) -> Result<Outcome, CliError> {
    let group = kind.group()?;
    let eta = principal_nilpotent(group)?;
    let index = nilpotency_index(&eta)?;
    let dim = group.dim();
    let principal = index == dim;
    let in_algebra = gram_matrix(group)
        .ok()
        .map(|form| in_lie_algebra(&eta, &form));
    let expected = match group {
        GroupKind::SoEven { n } => index < 2 * n,
        _ => principal,
    };
    Ok(Outcome {
        value: json!({
            "kind": group.to_string(),
            "dim": dim,
            "matrix": eta.to_json(),
            "index": index,
            "principal_in_sl": principal,
            "in_lie_algebra": in_algebra,
        }),
        claims_hold: expected && in_algebra != Some(false),
    })
}

pub fn peterson(kind: &KindArgs, ts: &Points) -> Result<Outcome, CliError> {
    let group = kind.group()?;
    let mut all = true;
    let mut results = Vec::new();
    for t in &ts.0 {
        let ok = flags_equal(&exp_translate_flag(group, t)?, &osculating_flag(group, t)?)?;
        all &= ok;
        results.push(json!({"t": t_json(t), "equal": ok}));
    }
    Ok(Outcome {
        value: json!({"kind": group.to_string(), "results": results, "all_equal": all}),
        claims_hold: all,
    })
}

struct Solved {
    reports: Vec<Value>,
    all_transverse: bool,
    points: Vec<GrPoint<QuadExt>>,
}

fn solve_and_certify(flags: &[Flag; 4]) -> Result<Solved, CliError> {
    let sols = small_solver_gr24(flags)?;
    let c = iota(2, 4)?;
    let pairs: Vec<_> = flags
        .iter()
        .map(|f| (c.clone(), f.lift::<QuadExt>()))
        .collect();
    let mut all = sols.len() == 2;
    let mut out = Vec::new();
    for v in &sols {
        let cert = transversality_certificate(v, &pairs)?;
        all &= cert.transverse;
        out.push(json!({
            "basis": v.normalized().basis().to_json(),
            "certificate": {
                "transverse": cert.transverse,
                "tangent_codim": cert.tangent_codim,
                "codim_sum": cert.codim_sum,
            },
        }));
    }
    Ok(Solved {
        reports: out,
        all_transverse: all,
        points: sols,
    })
}

pub fn solve_four_lines(
    osculating: bool,
    points: Option<&Points>,
    kind: CurveKind,
    seed: Option<u64>,
) -> Result<Outcome, CliError> {
    if osculating {
        let pts = &points.expect("clap requires --points").0;
        let pts: [Rational; 4] = pts.clone().try_into().map_err(|p: Vec<Rational>| {
            CliError::Parse(format!("need exactly 4 points, got {}", p.len()))
        })?;
        let group = match kind {
            CurveKind::Sl => GroupKind::Sl { m: 4 },
            CurveKind::Sp => GroupKind::Sp { n: 2 },
        };
        let flags = pts
            .clone()
            .map(|t| osculating_flag(group, &t))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        let flags: [Flag; 4] = flags.try_into().expect("four flags");
        let Solved {
            reports: solutions,
            all_transverse: all,
            points: sols,
        } = solve_and_certify(&flags)?;
        let mut value = json!({
            "mode": "osculating",
            "kind": group.to_string(),
            "points": pts.iter().map(t_json).collect::<Vec<_>>(),
            "count": solutions.len(),
            "solutions": solutions,
            "all_transverse": all,
        });
        let mut claims = all;
        if kind == CurveKind::Sl {
            let planes = wronski_solver_gr24(&pts)?;
            let agree = planes.len() == sols.len()
                && planes.iter().all(|p| {
                    sols.iter()
                        .filter(|v| v.same_span(&plane_to_grpoint(p)))
                        .count()
                        == 1
                });
            value["wronski_agreement"] = json!(agree);
            claims &= agree;
        }
        Ok(Outcome {
            value,
            claims_hold: claims,
        })
    } else {
        let seed = seed.ok_or_else(|| CliError::Parse("--isotropic-sp4 needs --seed".into()))?;
        let group = GroupKind::Sp { n: 2 };
        let form = gram_matrix(group)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let flags = (0..4)
            .map(|_| random_isotropic_flag_with(group, &mut rng))
            .collect::<Result<Vec<_>, _>>()?;
        let mut isotropic = true;
        for f in &flags {
            isotropic &= is_isotropic_flag(f, &form)?;
        }
        let flags: [Flag; 4] = flags.try_into().expect("four flags");
        let Solved {
            reports: solutions,
            all_transverse: all,
            ..
        } = solve_and_certify(&flags)?;
        Ok(Outcome {
            value: json!({
                "mode": "isotropic-sp4",
                "seed": seed.to_string(),
                "flags_isotropic": isotropic,
                "count": solutions.len(),
                "solutions": solutions,
                "all_transverse": all,
            }),
            claims_hold: all && isotropic,
        })
    }
}

pub fn eh_check(
    k: usize,
    m: usize,
    samples: usize,
    points: &Points,
    seed: u64,
) -> Result<Outcome, CliError> {
    if k == 0 || k >= m || m > 8 {
        return Err(CliError::Parse(format!(
            "need 0 < k < m <= 8, got k={k}, m={m}"
        )));
    }
    let pts = &points.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0;
    for s in 0..samples {
        // ramify at the points in turn so the identity is exercised off the generic case
        let plane = match pts.get(s % pts.len().max(1)) {
            Some(centre) => random_ramified_plane(k, m, centre, &mut rng)?,
            None => random_plane(k, m, &mut rng)?,
        };
        for t in pts {
            let r = check_eh_identity(&plane, t)?;
            checks += 1;
            if !r.equal {
                failures.push(json!({
                    "sample": s,
                    "t": t_json(t),
                    "codim": r.codim,
                    "wronski_order": r.wronski_order,
                }));
            }
        }
    }
    let ok = failures.is_empty();
    Ok(Outcome {
        value: json!({
            "k": k,
            "m": m,
            "samples": samples,
            "seed": seed.to_string(),
            "points": pts.iter().map(t_json).collect::<Vec<_>>(),
            "checks": checks,
            "failure_count": failures.len(),
            "failures": failures,
        }),
        claims_hold: ok,
    })
}

fn usize_field(v: &Value, key: &str) -> Result<usize, CliError> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| CliError::Parse(format!("missing integer field {key:?} in {v}")))
}

fn usize_array(v: &Value) -> Result<Vec<usize>, CliError> {
    v.as_array()
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|x| x as usize)).collect())
        .ok_or_else(|| CliError::Parse(format!("expected an array of integers, found {v}")))
}

pub fn dim_report(path: &Path) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let ambient = doc
        .get("ambient")
        .ok_or_else(|| CliError::Parse("missing \"ambient\"".into()))?;
    let empty = Vec::new();
    let conditions = match doc.get("conditions") {
        None => &empty,
        Some(c) => c
            .as_array()
            .ok_or_else(|| CliError::Parse("\"conditions\" must be an array".into()))?,
    };
    let kind = ambient.get("type").and_then(Value::as_str).unwrap_or("");
    let (codims, report, dim): (Vec<usize>, _, usize) = match kind {
        "grassmannian" => {
            let (k, m) = (usize_field(ambient, "k")?, usize_field(ambient, "m")?);
            if k == 0 || k >= m {
                return Err(CliError::Parse(format!("Gr({k},{m}) needs 0 < k < m")));
            }
            let conds = conditions
                .iter()
                .map(|c| {
                    let cond = if c.is_object() {
                        serde_json::from_value::<SchubertCondition>(c.clone())
                            .map_err(|e| CliError::Parse(e.to_string()))?
                    } else {
                        SchubertCondition::new(k, m, usize_array(c)?)?
                    };
                    if (cond.k(), cond.m()) != (k, m) {
                        return Err(CliError::Parse(format!(
                            "condition {c} is not on Gr({k},{m})"
                        )));
                    }
                    Ok(cond)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let codims = conds.iter().map(Codimension::codimension).collect();
            (
                codims,
                expected_dim_report(&conds, k * (m - k)),
                k * (m - k),
            )
        }
        "flag" => {
            let dims = usize_array(ambient.get("dims").unwrap_or(&Value::Null))?;
            let m = usize_field(ambient, "m")?;
            let dim = flag_manifold_dim(&dims, m)?;
            let conds = conditions
                .iter()
                .map(|c| {
                    let perm = PermCondition::new(usize_array(c)?, dims.clone())?;
                    if perm.m() != m {
                        return Err(CliError::Parse(format!(
                            "permutation {c} is not on {m} letters"
                        )));
                    }
                    Ok(perm)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let codims = conds.iter().map(Codimension::codimension).collect();
            (codims, expected_dim_report(&conds, dim), dim)
        }
        other => {
            return Err(CliError::Parse(format!(
                "ambient type must be \"grassmannian\" or \"flag\", found {other:?}"
            )))
        }
    };
    Ok(Outcome::report(json!({
        "dim": dim,
        "codims": codims,
        "expected": report.expected,
        "empty_for_general": report.empty_for_general,
    })))
}

pub fn pad(
    k: usize,
    m: usize,
    conditions: &[String],
    fresh: &Points,
    solve: bool,
) -> Result<Outcome, CliError> {
    if k == 0 || k >= m {
        return Err(CliError::Parse(format!("need 0 < k < m, got k={k}, m={m}")));
    }
    let parsed = conditions
        .iter()
        .map(|s| condition_at(k, m, s).map_err(CliError::Parse))
        .collect::<Result<Vec<_>, _>>()?;
    let padded = pad_to_zero_dimensional(k, m, &parsed, &fresh.0)?;
    let total: usize = padded.iter().map(|(c, _)| c.codim()).sum();
    let mut value = json!({
        "k": k,
        "m": m,
        "added": padded.len() - parsed.len(),
        "conditions": padded
            .iter()
            .map(|(c, t)| json!({"indices": c.indices(), "t": t_json(t)}))
            .collect::<Vec<_>>(),
        "expected_dim": (k * (m - k)) as i64 - total as i64,
    });
    let mut claims = true;
    if solve {
        let iota = iota(k, m)?;
        if (k, m) != (2, 4) || padded.len() != 4 || padded.iter().any(|(c, _)| c != &iota) {
            return Err(CliError::Unsupported(
                "--solve handles four ι conditions on Gr(2,4) only".into(),
            ));
        }
        let flags = padded
            .iter()
            .map(|(_, t)| osculating_flag(GroupKind::Sl { m: 4 }, t))
            .collect::<Result<Vec<_>, _>>()?;
        let flags: [Flag; 4] = flags.try_into().expect("four flags");
        let Solved {
            reports: solutions,
            all_transverse: all,
            ..
        } = solve_and_certify(&flags)?;
        value["solutions"] = json!(solutions);
        value["all_transverse"] = json!(all);
        claims = all;
    }
    Ok(Outcome {
        value,
        claims_hold: claims,
    })
}
