//! Reading presentations and vectors from catalog names, files, and stdin.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use operadic::operad::json::{load_document, parse_document};
use operadic::{catalog, catalog_names, OperadPresentation, Presentation, Scalar, Vector};
use serde_json::Value;

fn read_text(spec: &str) -> Result<String> {
    if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(spec).with_context(|| format!("reading {spec}"))
    }
}

/// A catalog name, a JSON file, or `-`. `star` replaces the distinguished
/// operation and the result is re-validated.
pub fn presentation(spec: &str, star: Option<&str>) -> Result<OperadPresentation> {
    let star = star.map(|s| Vector::parse_csv(s).with_context(|| format!("--star {s:?}"))).transpose()?;
    if catalog_names().contains(&spec) && !Path::new(spec).exists() {
        let p = catalog(spec)?;
        return Ok(match star {
            Some(s) => {
                let q = p.with_star(s)?;
                q.ensure_valid()?;
                q
            }
            None => p,
        });
    }
    let text = read_text(spec)?;
    let doc = parse_document(&text).with_context(|| format!("parsing {spec}"))?;
    Ok(load_document(&doc, star.as_ref())?.presentation)
}

fn scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from(n.as_i64().unwrap())),
        other => bail!("expected an integer or a rational string, found {other}"),
    }
}

/// Comma-separated rationals, or a JSON file holding an array or an
/// object with a `key` field, such as a serialized unit action.
pub fn vector(spec: &str, key: &str, p: &OperadPresentation) -> Result<Vector> {
    let v = match Vector::parse_csv(spec) {
        Ok(v) => v,
        Err(csv_err) => {
            if spec != "-" && !Path::new(spec).exists() {
                return Err(csv_err).with_context(|| format!("--{key} {spec:?} is neither a vector nor a file"));
            }
            let json: Value = serde_json::from_str(&read_text(spec)?).with_context(|| format!("parsing {spec}"))?;
            let arr = match &json {
                Value::Array(a) => a,
                Value::Object(o) => match o.get(key) {
                    Some(Value::Array(a)) => a,
                    _ => bail!("{spec}: no {key:?} array"),
                },
                _ => bail!("{spec}: expected an array or an object"),
            };
            arr.iter().map(scalar).collect::<Result<Vector>>()?
        }
    };
    if v.dim() != p.arity() {
        bail!("--{key} has {} entries but {} has {} generators", v.dim(), p.name(), p.arity());
    }
    Ok(v)
}
