//! JSON forms of elements, specializations and decompositions. All numbers
//! are exact strings; terms are listed in descending canonical order.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::exactalg::{Monomial, Poly, Scalar, Var};
use crate::root_data::{DynkinDiagram, PBWMonomial, Root};
use crate::shuffle::{Flavor, ShuffleElement, ShuffleError};
use crate::specialization::{Decomposition, SpecializationResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub parities: String,
    /// `"rational"` (default) or `"trig"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub degree: Vec<usize>,
    pub numerator: Vec<TermJson>,
}

pub fn poly_to_terms(p: &Poly) -> Vec<TermJson> {
    let mut terms: Vec<TermJson> = p
        .terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exps: m.iter().map(|(v, e)| (v.to_string(), Value::from(e))).collect(),
        })
        .collect();
    terms.reverse();
    terms
}

pub fn poly_from_terms(terms: &[TermJson]) -> Result<Poly, IoError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c: Scalar = t.coeff.parse().map_err(|_| IoError::Schema(format!("bad coefficient {:?}", t.coeff)))?;
        let mut pairs = Vec::with_capacity(t.exps.len());
        for (name, e) in &t.exps {
            let v: Var = name.parse().map_err(|_| IoError::Schema(format!("unknown variable {name:?}")))?;
            let e = e
                .as_i64()
                .and_then(|e| i32::try_from(e).ok())
                .ok_or_else(|| IoError::Schema(format!("exponent of {name} must be an integer")))?;
            pairs.push((v, e));
        }
        out.push((Monomial::from_pairs(pairs), c));
    }
    Ok(Poly::from_terms(out))
}

fn flavor_name(f: Flavor) -> &'static str {
    match f {
        Flavor::Rational => "rational",
        Flavor::Trig => "trig",
    }
}

pub fn parse_flavor(s: &str) -> Result<Flavor, IoError> {
    match s {
        "rational" => Ok(Flavor::Rational),
        "trig" => Ok(Flavor::Trig),
        other => Err(IoError::Schema(format!("unknown case {other:?}"))),
    }
}

pub fn element_to_json(f: &ShuffleElement) -> ElementJson {
    ElementJson {
        parities: f.diagram().to_string(),
        case: (f.flavor() == Flavor::Trig).then(|| flavor_name(f.flavor()).to_string()),
        degree: f.degree().to_vec(),
        numerator: poly_to_terms(f.numerator()),
    }
}

/// A missing `case` means rational unless the numerator mentions `v`.
/// Numerators that are not supersymmetric are rejected.
pub fn element_from_json(j: &ElementJson) -> Result<ShuffleElement, IoError> {
    let diagram: DynkinDiagram = j.parities.parse().map_err(|e| IoError::Schema(format!("{e}")))?;
    let numerator = poly_from_terms(&j.numerator)?;
    let flavor = match &j.case {
        Some(c) => parse_flavor(c)?,
        None if numerator.vars().contains(&Var::V) => Flavor::Trig,
        None => Flavor::Rational,
    };
    let f = ShuffleElement::new(diagram, j.degree.clone(), numerator, flavor)?;
    if !f.is_supersymmetric() {
        return Err(IoError::Schema("numerator is not supersymmetric".into()));
    }
    Ok(f)
}

pub fn element_to_string(f: &ShuffleElement) -> String {
    serde_json::to_string_pretty(&element_to_json(f)).expect("element JSON serializes")
}

pub fn element_from_str(s: &str) -> Result<ShuffleElement, IoError> {
    let j: ElementJson = serde_json::from_str(s)?;
    element_from_json(&j)
}

pub fn specialization_to_json(diagram: &DynkinDiagram, s: &SpecializationResult) -> Value {
    let d: Vec<Value> = s.d.iter().map(|(b, c)| Value::from(vec![Value::from(b.to_string()), Value::from(c)])).collect();
    serde_json::json!({
        "parities": diagram.to_string(),
        "d": d,
        "poly": poly_to_terms(&s.poly),
    })
}

pub fn monomial_to_json(h: &PBWMonomial) -> Value {
    Value::from(
        h.factors()
            .into_iter()
            .map(|(b, r)| Value::from(vec![Value::from(b.to_string()), Value::from(r)]))
            .collect::<Vec<_>>(),
    )
}

/// `[["a1..2", 0], ["a1..1", 3]]`.
pub fn monomial_from_json(v: &Value) -> Result<PBWMonomial, IoError> {
    let bad = || IoError::Schema(format!("PBW monomial must be a list of [root, mode] pairs, got {v}"));
    let list = v.as_array().ok_or_else(bad)?;
    let mut factors = Vec::with_capacity(list.len());
    for f in list {
        let pair = f.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
        let root: Root = pair[0].as_str().ok_or_else(bad)?.parse().map_err(|e| IoError::Schema(format!("{e}")))?;
        let mode = pair[1].as_u64().and_then(|r| u32::try_from(r).ok()).ok_or_else(bad)?;
        factors.push((root, mode));
    }
    Ok(PBWMonomial::from_factors(factors))
}

pub fn decomposition_to_json(dec: &Decomposition) -> Value {
    let coeffs: Vec<Value> = dec
        .coefficients
        .iter()
        .map(|(h, c)| serde_json::json!({"monomial": monomial_to_json(h), "coeff": c.to_string()}))
        .collect();
    serde_json::json!({"coefficients": coeffs, "residual": dec.residual.to_string()})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let d: DynkinDiagram = "010".parse().unwrap();
        let p: Poly = "-3/2*h*x1_1^2 + 3/2*h*x1_2^2 + x1_1*x2_1 - x1_2*x2_1".parse().unwrap();
        let f = ShuffleElement::new(d, vec![2, 1], p, Flavor::Rational).unwrap();
        let s = element_to_string(&f);
        assert!(s.contains("\"coeff\": \"-3/2\""));
        assert!(!s.contains("case"));
        assert_eq!(element_from_str(&s).unwrap(), f);
    }

    #[test]
    fn trig_case_is_inferred_or_explicit() {
        let f = element_from_str(r#"{"parities":"01","degree":[1],"numerator":[{"coeff":"1","exps":{"v":-1,"x1_1":2}}]}"#).unwrap();
        assert_eq!(f.flavor(), Flavor::Trig);
        let g = element_from_str(r#"{"parities":"01","case":"trig","degree":[1],"numerator":[{"coeff":"1","exps":{"x1_1":-1}}]}"#).unwrap();
        assert_eq!(g.flavor(), Flavor::Trig);
        assert_eq!(element_from_str(&element_to_string(&g)).unwrap(), g);
    }

    #[test]
    fn schema_violations() {
        assert!(matches!(element_from_str("{"), Err(IoError::Json(_))));
        assert!(matches!(
            element_from_str(r#"{"parities":"0x","degree":[1],"numerator":[]}"#),
            Err(IoError::Schema(_))
        ));
        assert!(matches!(
            element_from_str(r#"{"parities":"01","degree":[1],"numerator":[{"coeff":"1","exps":{"x2_1":1}}]}"#),
            Err(IoError::Shuffle(_))
        ));
        assert!(matches!(
            element_from_str(r#"{"parities":"01","degree":[2],"numerator":[{"coeff":"1","exps":{"x1_1":1}}]}"#),
            Err(IoError::Schema(_))
        ));
        assert!(element_from_str(r#"{"parities":"01","degree":[1],"numerator":[],"extra":1}"#).is_err());
    }

    #[test]
    fn monomial_json() {
        let v: Value = serde_json::from_str(r#"[["a1..2", 0], ["a1..1", 3]]"#).unwrap();
        let h = monomial_from_json(&v).unwrap();
        let sorted: Value = serde_json::from_str(r#"[["a1..1", 3], ["a1..2", 0]]"#).unwrap();
        assert_eq!(monomial_to_json(&h), sorted);
        assert_eq!(monomial_from_json(&sorted).unwrap(), h);
    }
}
