//! JSON reading and writing of matroids, and structured error objects.
//!
//! Accepted matroid documents:
//!
//! ```text
//! {"d": 6, "circuits": [[1,2,3], ...]}
//! {"d": 6, "n": 3, "hyperplanes": [[1,2,3], ...]}
//! {"d": 6, "n": 4, "edges": [{"set": [1,2,3,6], "rank": 3}, ...]}
//! {"n": 3, "vectors": [[1, 0, "1/2"], ...]}
//! ```
//!
//! Vector entries are integers or strings `"p/q"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matroid::{BackendKind, Matroid, VectorConfig};
use crate::set::ElementSet;
use crate::split::{SplitEdge, SplitHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitsDoc {
    pub d: usize,
    pub circuits: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PavingDoc {
    pub d: usize,
    pub n: usize,
    pub hyperplanes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub set: Vec<usize>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDoc {
    pub d: usize,
    pub n: usize,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorsDoc {
    pub n: usize,
    pub vectors: Vec<Vec<Value>>,
}

/// A parsed matroid document, before matroid construction.
#[derive(Debug, Clone, PartialEq)]
pub enum MatroidDoc {
    Circuits(CircuitsDoc),
    Paving(PavingDoc),
    Split(SplitDoc),
    Vectors(VectorsDoc),
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses `text` as `T`, reporting line and column on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(syntax)
}

impl MatroidDoc {
    pub fn parse(text: &str) -> Result<MatroidDoc> {
        let value: Value = parse_json(text)?;
        let Some(obj) = value.as_object() else {
            return Err(Error::Parse("matroid document must be a JSON object".into()));
        };
        if obj.contains_key("edges") {
            parse_json(text).map(MatroidDoc::Split)
        } else if obj.contains_key("hyperplanes") {
            parse_json(text).map(MatroidDoc::Paving)
        } else if obj.contains_key("circuits") {
            parse_json(text).map(MatroidDoc::Circuits)
        } else if obj.contains_key("vectors") {
            parse_json(text).map(MatroidDoc::Vectors)
        } else {
            Err(Error::Parse(
                "matroid document needs one of \"circuits\", \"hyperplanes\", \"edges\" or \"vectors\"".into(),
            ))
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        match self {
            MatroidDoc::Circuits(doc) => {
                Matroid::from_circuits(doc.d, &sets(doc.d, &doc.circuits)?)
            }
            MatroidDoc::Paving(doc) => {
                Matroid::paving(doc.d, doc.n, &sets(doc.d, &doc.hyperplanes)?)
            }
            MatroidDoc::Split(doc) => Matroid::from_split(&doc.to_hypergraph()?),
            MatroidDoc::Vectors(doc) => {
                let vectors = doc
                    .vectors
                    .iter()
                    .map(|v| v.iter().map(rational).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_vectors(VectorConfig { n: doc.n, vectors })
            }
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            MatroidDoc::Circuits(doc) => json!(doc),
            MatroidDoc::Paving(doc) => json!(doc),
            MatroidDoc::Split(doc) => json!(doc),
            MatroidDoc::Vectors(doc) => json!(doc),
        }
    }
}

impl SplitDoc {
    /// Hypergraph without validation, so that reports can name violations.
    pub fn to_hypergraph(&self) -> Result<SplitHypergraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(SplitEdge {
                    elements: set_in(self.d, &e.set)?,
                    rank: e.rank,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SplitHypergraph {
            d: self.d,
            n: self.n,
            edges,
        })
    }
}

fn set_in(d: usize, elements: &[usize]) -> Result<ElementSet> {
    if let Some(&e) = elements.iter().find(|&&e| e == 0 || e > d) {
        return Err(Error::OutOfRange { element: e });
    }
    ElementSet::try_from_elements(elements.iter().copied())
        .map_err(|element| Error::OutOfRange { element })
}

fn sets(d: usize, lists: &[Vec<usize>]) -> Result<Vec<ElementSet>> {
    lists.iter().map(|l| set_in(d, l)).collect()
}

fn rational(v: &Value) -> Result<BigRational> {
    let bad = || Error::InvalidVectors(format!("entry {v} is not an integer or \"p/q\" string"));
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(bad),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(bad()),
    }
}

fn rational_value(x: &BigRational) -> Value {
    if x.is_integer() {
        x.to_integer().to_i64().map_or_else(|| json!(x.to_string()), |i| json!(i))
    } else {
        json!(x.to_string())
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    MatroidDoc::parse(text)?.to_matroid()
}

/// Document for `m`: edges for split matroids, vectors for vector
/// configurations, otherwise the complete circuit list.
pub fn matroid_doc(m: &Matroid) -> MatroidDoc {
    if let Some(h) = m.split_hypergraph() {
        return MatroidDoc::Split(SplitDoc {
            d: h.d,
            n: h.n,
            edges: h
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    set: e.elements.to_vec(),
                    rank: e.rank,
                })
                .collect(),
        });
    }
    if let (BackendKind::VectorConfig, Some(v)) = (m.backend_kind(), m.vector_config()) {
        return MatroidDoc::Vectors(VectorsDoc {
            n: v.n,
            vectors: v
                .vectors
                .iter()
                .map(|col| col.iter().map(rational_value).collect())
                .collect(),
        });
    }
    MatroidDoc::Circuits(CircuitsDoc {
        d: m.size(),
        circuits: m.circuits().iter().map(|c| c.to_vec()).collect(),
    })
}

/// `{"error": kind, "message": text, ...details}` for a domain error.
pub fn error_json(e: &Error) -> Value {
    let mut out = json!({ "error": e.kind(), "message": e.to_string() });
    let extra = match e {
        Error::AxiomViolation { axiom, witnesses } => json!({ "axiom": axiom, "witnesses": witnesses }),
        Error::InvalidHypergraph(report) => json!({ "violations": report.violations }),
        Error::OutOfRange { element } => json!({ "element": element }),
        Error::DegreeTooHigh {
            point,
            position,
            degree,
        } => json!({ "point": point, "position": position, "degree": degree }),
        Error::SymbolicDegeneracy { point } => json!({ "point": point }),
        Error::Syntax { line, column, .. } => json!({ "line": line, "column": column }),
        _ => Value::Null,
    };
    if let (Some(o), Value::Object(x)) = (out.as_object_mut(), extra) {
        o.extend(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn reads_each_schema() {
        let qs = parse_matroid(r#"{"d": 6, "n": 3, "hyperplanes": [[1,2,3],[1,5,6],[3,4,5],[2,4,6]]}"#).unwrap();
        assert!(qs.same_as(&catalog::quadrilateral()));
        let c = parse_matroid(r#"{"d": 3, "circuits": [[1,2]]}"#).unwrap();
        assert_eq!(c.rank(), 2);
        let s = parse_matroid(r#"{"d": 6, "n": 4, "edges": [{"set": [1,2,3,6], "rank": 3}, {"set": [4,5,6], "rank": 2}]}"#).unwrap();
        assert!(s.same_as(&catalog::rank4_six()));
        let v = parse_matroid(r#"{"n": 2, "vectors": [[1, 0], [0, "1/2"], ["3", "-2/4"]]}"#).unwrap();
        assert_eq!(v.rank(), 2);
        assert!(v.circuits().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn documents_round_trip() {
        for m in [catalog::quadrilateral(), catalog::rank6_twelve(), catalog::plane_in_four()] {
            let text = matroid_doc(&m).to_value().to_string();
            let back = parse_matroid(&text).unwrap();
            assert!(back.same_as(&m));
            assert_eq!(matroid_doc(&back).to_value().to_string(), text);
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_matroid("{\n  \"d\": 3,\n  \"circuits\": [[1,2]\n}").unwrap_err();
        match &err {
            Error::Syntax { line, column, .. } => assert_eq!((*line, *column), (4, 1)),
            other => panic!("{other:?}"),
        }
        assert_eq!(error_json(&err)["error"], "ParseError");
        assert_eq!(error_json(&err)["line"], 4);
    }

    #[test]
    fn domain_errors() {
        let bad = parse_matroid(r#"{"d": 4, "circuits": [[1,2],[1,2,3]]}"#).unwrap_err();
        assert_eq!(bad.kind(), "AxiomViolation");
        assert_eq!(error_json(&bad)["axiom"], "incomparable");
        let range = parse_matroid(r#"{"d": 3, "circuits": [[1,4]]}"#).unwrap_err();
        assert!(matches!(range, Error::OutOfRange { element: 4 }));
        let unknown = parse_matroid(r#"{"d": 3, "circuits": [], "extra": 1}"#).unwrap_err();
        assert_eq!(unknown.kind(), "ParseError");
        let split = parse_matroid(r#"{"d": 4, "n": 3, "edges": [{"set": [1,2], "rank": 2}]}"#).unwrap_err();
        assert_eq!(error_json(&split)["violations"][0]["condition"], "edge_size");
    }
}
