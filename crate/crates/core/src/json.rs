//! Exact JSON encodings. Scalars are strings (`"p/q"`, denominator omitted
//! when 1), never JSON numbers; `ℚ(√d)` elements are `{"a", "b", "d"}`;
//! matrices are arrays of rows; polynomials are coefficient arrays, lowest
//! degree first.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::curves_flags::Flag;
use crate::exact_linalg::{
    format_rational, parse_rational, Field, Matrix, Poly, QuadExt, Rational,
};
use crate::schubert::GrPoint;
use crate::wronski::PolyPlane;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed JSON: {0}")]
pub struct JsonError(pub String);

fn malformed(what: &str, v: &Value) -> JsonError {
    JsonError(format!("expected {what}, found {v}"))
}

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self, JsonError>;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
}

impl FromJson for Rational {
    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let s = v
            .as_str()
            .ok_or_else(|| malformed("a rational string", v))?;
        parse_rational(s).map_err(|e| JsonError(e.to_string()))
    }
}

impl ToJson for QuadExt {
    fn to_json(&self) -> Value {
        let d = match i64::try_from(self.d()) {
            Ok(d) => json!(d),
            Err(_) => json!(self.d().to_string()),
        };
        json!({"a": self.a().to_json(), "b": self.b().to_json(), "d": d})
    }
}

impl FromJson for QuadExt {
    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let field = |k: &str| {
            v.get(k)
                .ok_or_else(|| malformed(&format!("field {k:?}"), v))
        };
        let a = Rational::from_json(field("a")?)?;
        let b = Rational::from_json(field("b")?)?;
        let d = match field("d")? {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => s.parse::<BigInt>().ok(),
            _ => None,
        }
        .ok_or_else(|| malformed("an integer radicand", v))?;
        Ok(QuadExt::new(a, b, d))
    }
}

impl<F: Field + ToJson> ToJson for Matrix<F> {
    fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows())
                .map(|r| Value::Array(self.row(r).iter().map(ToJson::to_json).collect()))
                .collect(),
        )
    }
}

impl<F: Field + FromJson> FromJson for Matrix<F> {
    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let rows = v
            .as_array()
            .ok_or_else(|| malformed("an array of rows", v))?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| malformed("a row array", r))?
                    .iter()
                    .map(F::from_json)
                    .collect::<Result<Vec<F>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.is_empty() {
            return Err(malformed("at least one row", v));
        }
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(malformed("rows of equal length", v));
        }
        Ok(Matrix::from_rows(rows))
    }
}

impl<F: Field + ToJson> ToJson for Flag<F> {
    fn to_json(&self) -> Value {
        json!({"ambient_dim": self.ambient_dim(), "basis": self.basis().to_json()})
    }
}

impl<F: Field + FromJson> FromJson for Flag<F> {
    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let basis = Matrix::from_json(
            v.get("basis")
                .ok_or_else(|| malformed("field \"basis\"", v))?,
        )?;
        if let Some(m) = v.get("ambient_dim") {
            if m.as_u64() != Some(basis.rows() as u64) {
                return Err(malformed("ambient_dim matching the basis", v));
            }
        }
        Flag::new(basis).map_err(|e| JsonError(e.to_string()))
    }
}

impl<F: Field + ToJson> ToJson for Poly<F> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(ToJson::to_json).collect())
    }
}

impl<F: Field + FromJson> FromJson for Poly<F> {
    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let cs = v
            .as_array()
            .ok_or_else(|| malformed("a coefficient array", v))?;
        Ok(Poly::new(
            cs.iter().map(F::from_json).collect::<Result<_, _>>()?,
        ))
    }
}

impl<F: Field + ToJson> ToJson for GrPoint<F> {
    fn to_json(&self) -> Value {
        json!({"k": self.k(), "ambient_dim": self.ambient_dim(), "basis": self.basis().to_json()})
    }
}

impl<F: Field + ToJson> ToJson for PolyPlane<F> {
    fn to_json(&self) -> Value {
        json!({
            "k": self.k(),
            "m": self.m(),
            "basis": self.basis().iter().map(ToJson::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Column vector as a flat array.
pub fn vector_json<F: Field + ToJson>(v: &Matrix<F>) -> Value {
    Value::Array(v.entries().iter().map(ToJson::to_json).collect())
}
