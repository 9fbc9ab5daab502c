//! JSON form of presentations.
//!
//! ```json
//! {
//!   "name": "dend",
//!   "generators": ["≺", "≻"],
//!   "star": {"≺": "1", "≻": "1"},
//!   "relations": [
//!     {"left": [{"a": "≺", "b": "≺", "c": "1"}],
//!      "right": [{"a": "≺", "b": "≺", "c": "1"}, {"a": "≺", "b": "≻", "c": "1"}]}
//!   ]
//! }
//! ```
//!
//! `a` and `b` are the first and second tensor factors and `c` the
//! coefficient. Star labels that are omitted mean zero. Unknown keys are
//! rejected. Dual documents carry one extra key, `associative_candidates`.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{OperadPresentation, Presentation, RelPair};
use crate::error::Error;
use crate::exactlin::{Matrix, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub a: String,
    pub b: String,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub left: Vec<Term>,
    pub right: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperadDocument {
    pub name: String,
    pub generators: Vec<String>,
    pub star: IndexMap<String, Scalar>,
    pub relations: Vec<RelationDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualDocument {
    pub name: String,
    pub generators: Vec<String>,
    pub star: IndexMap<String, Scalar>,
    pub relations: Vec<RelationDocument>,
    pub associative_candidates: Vec<Vector>,
}

/// Either document kind, as read from disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Operad(OperadDocument),
    Dual(DualDocument),
}

/// A parsed presentation together with loader warnings.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub presentation: OperadPresentation,
    pub warnings: Vec<String>,
}

fn terms(gens: &[String], m: &Matrix) -> Vec<Term> {
    let n = gens.len();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let c = &m[(s, t)];
            if !c.is_zero() {
                out.push(Term { a: gens[s].clone(), b: gens[t].clone(), c: c.clone() });
            }
        }
    }
    out
}

fn relation_documents<P: Presentation + ?Sized>(p: &P) -> Vec<RelationDocument> {
    let gens = p.generators();
    p.relations()
        .iter()
        .map(|r| RelationDocument { left: terms(gens, &r.left), right: terms(gens, &r.right) })
        .collect()
}

fn star_map(gens: &[String], star: &Vector) -> IndexMap<String, Scalar> {
    gens.iter().zip(star.iter()).filter(|(_, c)| !c.is_zero()).map(|(g, c)| (g.clone(), c.clone())).collect()
}

pub fn to_document(p: &OperadPresentation) -> OperadDocument {
    OperadDocument {
        name: p.name().to_string(),
        generators: p.generators().to_vec(),
        star: star_map(p.generators(), p.star()),
        relations: relation_documents(p),
    }
}

/// A star-less presentation with its associative candidates.
pub fn to_dual_document<P: Presentation + ?Sized>(p: &P, candidates: &[Vector]) -> DualDocument {
    DualDocument {
        name: p.name().to_string(),
        generators: p.generators().to_vec(),
        star: IndexMap::new(),
        relations: relation_documents(p),
        associative_candidates: candidates.to_vec(),
    }
}

pub fn to_json(p: &OperadPresentation) -> String {
    serde_json::to_string_pretty(&to_document(p)).expect("documents serialize")
}

pub fn parse_document(text: &str) -> Result<Document, Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let is_dual = value.as_object().is_some_and(|o| o.contains_key("associative_candidates"));
    if is_dual {
        Ok(Document::Dual(serde_json::from_value(value)?))
    } else {
        Ok(Document::Operad(serde_json::from_value(value)?))
    }
}

fn index(gens: &[String], label: &str) -> Result<usize, Error> {
    gens.iter().position(|g| g == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

fn matrix(gens: &[String], ts: &[Term]) -> Result<Matrix, Error> {
    let n = gens.len();
    let mut m = Matrix::zeros(n, n);
    for t in ts {
        m[(index(gens, &t.a)?, index(gens, &t.b)?)] += &t.c;
    }
    Ok(m)
}

fn star_vector(gens: &[String], star: &IndexMap<String, Scalar>) -> Result<Vector, Error> {
    let mut v = Vector::zeros(gens.len());
    for (label, c) in star {
        v[index(gens, label)?] = c.clone();
    }
    Ok(v)
}

fn assemble(name: &str, gens: &[String], relations: &[RelationDocument], star: Vector) -> Result<Loaded, Error> {
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = gens.iter().find(|g| !seen.insert(*g)) {
        return Err(Error::Parse(format!("duplicate generator label {dup:?}")));
    }
    let rels = relations
        .iter()
        .map(|r| Ok(RelPair { left: matrix(gens, &r.left)?, right: matrix(gens, &r.right)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    let (presentation, dropped) = OperadPresentation::with_reduced_relations(name, gens.to_vec(), rels, star)?;
    let mut warnings = Vec::new();
    if dropped > 0 {
        let msg = format!("{name}: dropped {dropped} linearly dependent relation(s)");
        log::warn!("{msg}");
        warnings.push(msg);
    }
    Ok(Loaded { presentation, warnings })
}

/// Builds a presentation from a document. `star` overrides the document's
/// distinguished operation; for dual documents without one, the first
/// associative candidate is used. The result is validated.
pub fn load_document(doc: &Document, star: Option<&Vector>) -> Result<Loaded, Error> {
    let (name, gens, relations, doc_star, candidates) = match doc {
        Document::Operad(d) => (&d.name, &d.generators, &d.relations, &d.star, &[][..]),
        Document::Dual(d) => (&d.name, &d.generators, &d.relations, &d.star, &d.associative_candidates[..]),
    };
    let mut notes = Vec::new();
    let star = match star {
        Some(s) => s.clone(),
        None => {
            let s = star_vector(gens, doc_star)?;
            if s.is_zero() && !candidates.is_empty() {
                let c = candidates[0].clone();
                let msg = format!("{name}: no star given, using associative candidate {c}");
                log::warn!("{msg}");
                notes.push(msg);
                c
            } else {
                s
            }
        }
    };
    let mut loaded = assemble(name, gens, relations, star)?;
    loaded.presentation.ensure_valid()?;
    notes.append(&mut loaded.warnings);
    loaded.warnings = notes;
    Ok(loaded)
}

pub fn from_json(text: &str) -> Result<Loaded, Error> {
    load_document(&parse_document(text)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{catalog, catalog_names};

    #[test]
    fn catalog_round_trips() {
        for name in catalog_names() {
            let p = catalog(name).unwrap();
            let back = from_json(&to_json(&p)).unwrap();
            assert_eq!(back.presentation, p, "{name}");
            assert!(back.warnings.is_empty());
        }
    }

    #[test]
    fn dendriform_document_shape() {
        let doc = to_document(&catalog("dend").unwrap());
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["generators"], serde_json::json!(["≺", "≻"]));
        assert_eq!(v["star"], serde_json::json!({"≺": "1", "≻": "1"}));
        assert_eq!(
            v["relations"][0]["right"],
            serde_json::json!([{"a": "≺", "b": "≺", "c": "1"}, {"a": "≺", "b": "≻", "c": "1"}])
        );
    }

    #[test]
    fn rejects_unknown_keys_and_labels() {
        let bad_key = r#"{"name":"x","generators":["a"],"star":{"a":"1"},"relations":[],"extra":1}"#;
        assert!(from_json(bad_key).is_err());
        let bad_term = r#"{"name":"x","generators":["a"],"star":{"a":"1"},
            "relations":[{"left":[{"a":"a","b":"a","c":"1","d":"0"}],"right":[]}]}"#;
        assert!(from_json(bad_term).is_err());
        let bad_label = r#"{"name":"x","generators":["a"],"star":{"b":"1"},"relations":[]}"#;
        assert!(matches!(from_json(bad_label), Err(Error::UnknownLabel(_))));
        let float = r#"{"name":"x","generators":["a"],"star":{"a":"0.5"},"relations":[]}"#;
        assert!(from_json(float).is_err());
    }

    #[test]
    fn dependent_relations_warn_instead_of_failing() {
        let text = r#"{"name":"a","generators":["m"],"star":{"m":"1"},"relations":[
            {"left":[{"a":"m","b":"m","c":"1"}],"right":[{"a":"m","b":"m","c":"1"}]},
            {"left":[{"a":"m","b":"m","c":"2"}],"right":[{"a":"m","b":"m","c":"2"}]}]}"#;
        let loaded = from_json(text).unwrap();
        assert_eq!(loaded.presentation.relations().len(), 1);
        assert_eq!(loaded.warnings.len(), 1);
    }

    #[test]
    fn invalid_star_is_rejected_after_loading() {
        let text = r#"{"name":"a","generators":["m","n"],"star":{"m":"1"},"relations":[]}"#;
        assert!(matches!(from_json(text), Err(Error::InvalidPresentation(_))));
    }
}
