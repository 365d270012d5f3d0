//! JSON encoding of matrices, representations and reports.
//!
//! Matrices are `{"rows","cols","domain","entries"}` with `entries` a list of
//! rows. Rational entries are `"p/q"` strings, Laurent entries use the text
//! form of [`LaurentPoly`], complex entries are `[re, im]` pairs. Inputs may
//! also give `entries` as one flat row-major list, and plain JSON numbers
//! where they are unambiguous.

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::laurent::LaurentPoly;
use crate::linalg::Mat;
use crate::rep::{Rep, RepError};
use crate::scalar::{Complex, Domain, Rational, Scalar, DEFAULT_TOL};

/// Version tag carried by every report.
pub const SCHEMA_VERSION: &str = "braidrep/1";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IoError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error(transparent)]
    Rep(#[from] RepError),
}

impl IoError {
    pub fn name(&self) -> &'static str {
        match self {
            IoError::Schema(_) => "SchemaError",
            IoError::Json(_) => "JsonError",
            IoError::Read { .. } => "ReadError",
            IoError::Rep(e) => e.name(),
        }
    }
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, IoError>;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(format!("{}/{}", self.numer(), self.denom()))
    }

    fn from_json(v: &Value) -> Result<Self, IoError> {
        match v {
            Value::String(s) => s.trim().parse().map_err(|_| schema(format!("bad rational `{s}`"))),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked").into())),
            _ => Err(schema(format!("rational entries are \"p/q\" strings, got {v}"))),
        }
    }
}

impl JsonScalar for LaurentPoly {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self, IoError> {
        match v {
            Value::String(s) => s.parse().map_err(|e: crate::laurent::LaurentError| schema(e.to_string())),
            Value::Number(n) if n.is_i64() => Ok(LaurentPoly::from_integer(n.as_i64().expect("checked"))),
            _ => Err(schema(format!("laurent entries are strings, got {v}"))),
        }
    }
}

impl JsonScalar for Complex {
    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }

    fn from_json(v: &Value) -> Result<Self, IoError> {
        match v {
            Value::Array(a) if a.len() == 2 => match (a[0].as_f64(), a[1].as_f64()) {
                (Some(re), Some(im)) => Ok(Complex::new(re, im)),
                _ => Err(schema(format!("complex entries are [re, im] numbers, got {v}"))),
            },
            Value::Number(n) => Ok(Complex::new(n.as_f64().expect("finite number"), 0.0)),
            _ => Err(schema(format!("complex entries are [re, im] pairs, got {v}"))),
        }
    }
}

pub fn mat_to_json<T: JsonScalar>(m: &Mat<T>) -> Value {
    let entries: Vec<Value> = (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(JsonScalar::to_json).collect())).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "domain": T::DOMAIN, "entries": entries})
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize, IoError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| schema(format!("missing or invalid `{key}`")))
}

pub fn domain_of(v: &Value) -> Result<Domain, IoError> {
    let d = v.get("domain").ok_or_else(|| schema("missing `domain`"))?;
    serde_json::from_value(d.clone()).map_err(|_| schema(format!("unknown domain {d}")))
}

pub fn mat_from_json<T: JsonScalar>(v: &Value) -> Result<Mat<T>, IoError> {
    let obj = v.as_object().ok_or_else(|| schema("matrix must be an object"))?;
    let (rows, cols) = (get_usize(obj, "rows")?, get_usize(obj, "cols")?);
    if let Some(d) = obj.get("domain") {
        if domain_of(v)? != T::DOMAIN {
            return Err(schema(format!("matrix domain {d} where {} was expected", T::DOMAIN)));
        }
    }
    let entries = obj.get("entries").and_then(Value::as_array).ok_or_else(|| schema("missing `entries` list"))?;
    let is_row = |r: &Value| match r {
        Value::Array(a) => T::DOMAIN != Domain::Complex || a.iter().all(Value::is_array),
        _ => false,
    };
    let nested = !entries.is_empty() && entries.iter().all(is_row);
    let flat: Vec<&Value> = if nested {
        entries.iter().flat_map(|r| r.as_array().expect("checked").iter()).collect()
    } else {
        entries.iter().collect()
    };
    if flat.len() != rows * cols {
        return Err(schema(format!("{rows}x{cols} matrix with {} entries", flat.len())));
    }
    let data = flat.into_iter().map(T::from_json).collect::<Result<Vec<_>, _>>()?;
    Mat::from_vec(rows, cols, data).map_err(|e| schema(e.to_string()))
}

impl<T: JsonScalar> Serialize for Mat<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        mat_to_json(self).serialize(s)
    }
}

pub fn rep_to_json<T: JsonScalar>(rho: &Rep<T>) -> Value {
    json!({
        "strands": rho.strands(),
        "degree": rho.degree(),
        "domain": T::DOMAIN,
        "label": rho.label(),
        "generators": rho.gens().iter().map(mat_to_json).collect::<Vec<_>>(),
    })
}

/// Parses a representation, checking shapes and square generators. With
/// `check` the braid relations and invertibility are verified at `tol`.
pub fn rep_from_json<T: JsonScalar>(v: &Value, check: bool, tol: f64) -> Result<Rep<T>, IoError> {
    let obj = v.as_object().ok_or_else(|| schema("representation must be an object"))?;
    let strands = get_usize(obj, "strands")?;
    let degree = get_usize(obj, "degree")?;
    if domain_of(v)? != T::DOMAIN {
        return Err(schema(format!("representation domain is not {}", T::DOMAIN)));
    }
    let label = obj.get("label").and_then(Value::as_str).unwrap_or("").to_string();
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("missing `generators` list"))?
        .iter()
        .map(mat_from_json::<T>)
        .collect::<Result<Vec<_>, _>>()?;
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != degree || g.cols() != degree {
            return Err(schema(format!("generator s{} is {}x{}, degree is {degree}", i + 1, g.rows(), g.cols())));
        }
    }
    let rep = if check { Rep::new(strands, gens, label, tol) } else { Rep::new_unchecked(strands, gens, label) };
    rep.map_err(|e| match e {
        RepError::GeneratorCount { .. } | RepError::Shape { .. } | RepError::TooFewStrands(_) => schema(e.to_string()),
        other => IoError::Rep(other),
    })
}

/// A representation over whichever domain its file declares.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyRep {
    Rational(Rep<Rational>),
    Laurent(Rep<LaurentPoly>),
    Complex(Rep<Complex>),
}

impl AnyRep {
    pub fn from_json(v: &Value, check: bool, tol: f64) -> Result<Self, IoError> {
        Ok(match domain_of(v)? {
            Domain::Rational => AnyRep::Rational(rep_from_json(v, check, tol)?),
            Domain::Laurent => AnyRep::Laurent(rep_from_json(v, check, tol)?),
            Domain::Complex => AnyRep::Complex(rep_from_json(v, check, tol)?),
        })
    }

    pub fn from_str(text: &str, check: bool, tol: f64) -> Result<Self, IoError> {
        let v: Value = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
        Self::from_json(&v, check, tol)
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyRep::Rational(r) => rep_to_json(r),
            AnyRep::Laurent(r) => rep_to_json(r),
            AnyRep::Complex(r) => rep_to_json(r),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            AnyRep::Rational(_) => Domain::Rational,
            AnyRep::Laurent(_) => Domain::Laurent,
            AnyRep::Complex(_) => Domain::Complex,
        }
    }

    pub fn strands(&self) -> usize {
        match self {
            AnyRep::Rational(r) => r.strands(),
            AnyRep::Laurent(r) => r.strands(),
            AnyRep::Complex(r) => r.strands(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            AnyRep::Rational(r) => r.degree(),
            AnyRep::Laurent(r) => r.degree(),
            AnyRep::Complex(r) => r.degree(),
        }
    }
}

/// Wraps a report body with the schema tag and report kind.
pub fn report(kind: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), Value::String(SCHEMA_VERSION.into()));
    out.insert("report".into(), Value::String(kind.into()));
    match body {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("result".into(), other);
        }
    }
    Value::Object(out)
}

/// Error report carrying the module error name.
pub fn error_report(kind: &str, name: &str, message: &str) -> Value {
    report(kind, json!({"ok": false, "error": name, "message": message}))
}

/// Default tolerance: `BRAIDREP_TOL` when set to a positive number.
pub fn default_tol() -> f64 {
    std::env::var("BRAIDREP_TOL")
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|t| *t > 0.0 && t.is_finite())
        .unwrap_or(DEFAULT_TOL)
}
