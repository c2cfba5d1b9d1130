use crate::algebra::{AlgebraElement, Generator, PbwMonomial};
use crate::linalg::rational::{self, Rational};
use crate::linalg::{inverse, LinalgError, Matrix};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("schema error at {field}: {message}")]
    Schema { field: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("not suitably graded: {0}")]
    NotSuitablyGraded(String),
    #[error("zero module")]
    ZeroModule,
    #[error("contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> ModuleError {
    ModuleError::Schema { field: field.into(), message: message.into() }
}

/// Where a module came from: constructor name, its parameters, and the
/// modules it was derived from (for dual, tensor, quotients, ...).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub kind: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sources: Vec<Provenance>,
}

impl Provenance {
    pub fn leaf(kind: &str, params: &[(&str, String)]) -> Self {
        Provenance {
            kind: kind.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            sources: Vec::new(),
        }
    }

    pub fn derived(kind: &str, sources: Vec<Provenance>) -> Self {
        Provenance { kind: kind.into(), params: BTreeMap::new(), sources }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind)?;
        let inner: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .chain(self.sources.iter().map(ToString::to_string))
            .collect();
        if !inner.is_empty() {
            write!(f, "({})", inner.join(", "))?;
        }
        Ok(())
    }
}

/// Marks a finite window of an infinite-dimensional module: `levels[k]` is
/// the level `i+j` of basis vector `k`; x and y push level `depth` out of
/// the window, so relations involving them only hold below `depth − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub depth: usize,
    pub levels: Vec<usize>,
}

/// A finite-dimensional module given by the matrices of the six generators
/// (column `j` is the image of basis vector `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdModule {
    dim: usize,
    labels: Vec<String>,
    mats: [Matrix; 6],
    provenance: Provenance,
    truncation: Option<Truncation>,
}

impl FdModule {
    /// Matrices in the order x, y, g, ξ, u, v.
    pub fn new(labels: Vec<String>, mats: [Matrix; 6], provenance: Provenance) -> Self {
        let dim = labels.len();
        for m in &mats {
            assert!(m.rows() == dim && m.cols() == dim, "generator matrix must be {dim}x{dim}");
        }
        FdModule { dim, labels, mats, provenance, truncation: None }
    }

    pub fn with_truncation(mut self, truncation: Truncation) -> Self {
        assert_eq!(truncation.levels.len(), self.dim);
        self.truncation = Some(truncation);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn set_provenance(&mut self, p: Provenance) {
        self.provenance = p;
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    fn index(t: Generator) -> usize {
        match t {
            Generator::X => 0,
            Generator::Y => 1,
            Generator::G => 2,
            Generator::Xi => 3,
            Generator::U => 4,
            Generator::V => 5,
            Generator::GInv => panic!("g⁻¹ is not stored; use FdModule::act"),
        }
    }

    /// Matrix of one of the six stored generators.
    pub fn mat(&self, t: Generator) -> &Matrix {
        &self.mats[FdModule::index(t)]
    }

    pub fn mats(&self) -> &[Matrix; 6] {
        &self.mats
    }

    pub fn g_inverse(&self) -> Result<Matrix, LinalgError> {
        inverse(self.mat(Generator::G))
    }

    /// Matrix of any generator, including `g⁻¹` (by inversion).
    pub fn act(&self, t: Generator) -> Result<Matrix, LinalgError> {
        match t {
            Generator::GInv => self.g_inverse(),
            _ => Ok(self.mat(t).clone()),
        }
    }

    /// Matrix of a word `t₁t₂…` acting as `ρ(t₁)ρ(t₂)…`.
    pub fn word_matrix(&self, word: &[Generator]) -> Result<Matrix, LinalgError> {
        let mut acc = Matrix::identity(self.dim);
        for &t in word {
            acc = &acc * &self.act(t)?;
        }
        Ok(acc)
    }

    fn monomial_matrix(&self, m: &PbwMonomial, g_inv: &Option<Matrix>) -> Matrix {
        let mut acc = Matrix::identity(self.dim);
        let g_pow = if m.g >= 0 {
            self.mat(Generator::G).pow(m.g as u32)
        } else {
            g_inv.as_ref().expect("g⁻¹ precomputed").pow(m.g.unsigned_abs() as u32)
        };
        let pieces = [
            self.mat(Generator::X).pow(m.x),
            self.mat(Generator::Y).pow(m.y),
            g_pow,
            self.mat(Generator::Xi).pow(m.xi),
            self.mat(Generator::U).pow(m.u),
            self.mat(Generator::V).pow(m.v),
        ];
        for p in &pieces {
            acc = &acc * p;
        }
        acc
    }

    /// Matrix by which an algebra element acts.
    pub fn evaluate(&self, a: &AlgebraElement) -> Result<Matrix, LinalgError> {
        let g_inv = if a.terms().any(|(m, _)| m.g < 0) { Some(self.g_inverse()?) } else { None };
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (m, c) in a.terms() {
            acc = &acc + &self.monomial_matrix(m, &g_inv).scale(c);
        }
        Ok(acc)
    }

    /// Same module in a new basis: the columns of `p` are the new basis
    /// vectors in old coordinates, `p_inv` its inverse.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix, labels: Vec<String>) -> FdModule {
        let mats = self.mats.clone().map(|m| &(p_inv * &m) * p);
        FdModule::new(labels, mats, self.provenance.clone())
    }

    pub fn to_json(&self) -> Value {
        let mut gens = Map::new();
        for t in Generator::MODULE_GENERATORS {
            gens.insert(t.name().into(), json!(self.mat(t).to_text_rows()));
        }
        let mut obj = json!({
            "dim": self.dim,
            "labels": self.labels,
            "generators": gens,
            "provenance": self.provenance,
        });
        if let Some(t) = &self.truncation {
            obj["truncation"] = json!(t);
        }
        obj
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("module serializes")
    }

    pub fn from_json_str(text: &str) -> Result<FdModule, ModuleError> {
        let v: Value = serde_json::from_str(text)?;
        FdModule::from_json(&v)
    }

    /// Parses and validates the interchange format; errors name the offending
    /// field, e.g. `generators.xi[1][2]`.
    pub fn from_json(v: &Value) -> Result<FdModule, ModuleError> {
        let obj = v.as_object().ok_or_else(|| schema("$", "expected an object"))?;
        let dim = obj
            .get("dim")
            .ok_or_else(|| schema("dim", "missing"))?
            .as_u64()
            .ok_or_else(|| schema("dim", "expected a nonnegative integer"))? as usize;
        let labels = match obj.get("labels") {
            None => (0..dim).map(|i| format!("e{i}")).collect(),
            Some(l) => {
                let arr = l.as_array().ok_or_else(|| schema("labels", "expected an array"))?;
                if arr.len() != dim {
                    return Err(schema("labels", format!("expected {dim} labels, got {}", arr.len())));
                }
                arr.iter()
                    .enumerate()
                    .map(|(i, s)| {
                        s.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| schema(format!("labels[{i}]"), "expected a string"))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        let gens = obj
            .get("generators")
            .ok_or_else(|| schema("generators", "missing"))?
            .as_object()
            .ok_or_else(|| schema("generators", "expected an object"))?;
        for key in gens.keys() {
            if Generator::from_name(key).is_none_or(|t| t == Generator::GInv) {
                return Err(schema(format!("generators.{key}"), "unknown generator"));
            }
        }
        let mut mats = Vec::with_capacity(6);
        for t in Generator::MODULE_GENERATORS {
            let field = format!("generators.{}", t.name());
            let m = gens.get(t.name()).ok_or_else(|| schema(&field, "missing"))?;
            mats.push(parse_matrix(m, dim, &field)?);
        }
        let provenance = match obj.get("provenance") {
            None | Some(Value::Null) => Provenance::leaf("file", &[]),
            Some(Value::String(s)) => Provenance::leaf(s, &[]),
            Some(p) => serde_json::from_value(p.clone())
                .map_err(|e| schema("provenance", e.to_string()))?,
        };
        let mats: [Matrix; 6] = mats.try_into().expect("six matrices");
        let mut module = FdModule::new(labels, mats, provenance);
        if let Some(t) = obj.get("truncation").filter(|t| !t.is_null()) {
            let t: Truncation = serde_json::from_value(t.clone())
                .map_err(|e| schema("truncation", e.to_string()))?;
            if t.levels.len() != dim {
                return Err(schema("truncation.levels", format!("expected {dim} entries")));
            }
            module = module.with_truncation(t);
        }
        Ok(module)
    }
}

fn parse_matrix(v: &Value, dim: usize, field: &str) -> Result<Matrix, ModuleError> {
    let rows = v.as_array().ok_or_else(|| schema(field, "expected an array of rows"))?;
    if rows.len() != dim {
        return Err(schema(field, format!("expected {dim} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let f = format!("{field}[{i}]");
        let row = row.as_array().ok_or_else(|| schema(&f, "expected an array"))?;
        if row.len() != dim {
            return Err(schema(&f, format!("expected {dim} entries, got {}", row.len())));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, e)| parse_entry(e).ok_or_else(|| schema(format!("{f}[{j}]"), "expected a rational like \"p/q\"")))
            .collect::<Result<Vec<Rational>, _>>()?;
        out.push(parsed);
    }
    if dim == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Ok(Matrix::from_rows(out))
}

fn parse_entry(e: &Value) -> Option<Rational> {
    match e {
        Value::String(s) => rational::parse(s),
        Value::Number(n) => n.as_i64().map(rational::int),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn tiny() -> FdModule {
        let z = Matrix::zeros(1, 1);
        let mats = [z.clone(), z.clone(), Matrix::identity(1), z.clone(), z.clone(), z];
        FdModule::new(vec!["z(0)".into()], mats, Provenance::leaf("L", &[("n", "0".into())]))
    }

    #[test]
    fn json_round_trip() {
        let m = tiny();
        let back = FdModule::from_json_str(&m.to_json_string()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn schema_errors_name_the_field() {
        let mut v = tiny().to_json();
        v["generators"]["xi"][0][0] = json!("1/0");
        let err = FdModule::from_json(&v).unwrap_err().to_string();
        assert!(err.contains("generators.xi[0][0]"), "{err}");
        let mut v = tiny().to_json();
        v["generators"].as_object_mut().unwrap().remove("v");
        let err = FdModule::from_json(&v).unwrap_err().to_string();
        assert!(err.contains("generators.v"), "{err}");
        let mut v = tiny().to_json();
        v["dim"] = json!(2);
        assert!(FdModule::from_json(&v).is_err());
    }

    #[test]
    fn evaluate_group_likes() {
        let m = tiny();
        let e = AlgebraElement::monomial(PbwMonomial::new(0, 0, -3, 0, 0, 0));
        assert_eq!(m.evaluate(&e).unwrap(), Matrix::scalar(1, &int(1)));
    }
}
