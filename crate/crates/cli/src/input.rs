//! JSON input and output formats for monoids and M-sets.

use std::sync::Arc;

use burnside_core::catalog::{self, Catalogued};
use burnside_core::generate::{generate_from_matrices, generate_from_transformations, MatrixRing};
use burnside_core::{FiniteMonoid, PartialMSet};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::CliError;

/// What an input file or catalog name resolves to.
#[derive(Clone, Debug)]
pub enum Loaded {
    Monoid(Arc<FiniteMonoid>),
    MSet(PartialMSet),
}

impl Loaded {
    pub fn monoid(&self) -> Arc<FiniteMonoid> {
        match self {
            Loaded::Monoid(m) => m.clone(),
            Loaded::MSet(x) => x.monoid().clone(),
        }
    }

    /// The M-set itself, or the right-regular action of a monoid.
    pub fn mset(&self) -> PartialMSet {
        match self {
            Loaded::Monoid(m) => PartialMSet::right_regular(m.clone()),
            Loaded::MSet(x) => x.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    size: usize,
    identity: usize,
    cayley: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformationsDoc {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldSpec {
    Order(u32),
    Name(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatricesDoc {
    field: FieldSpec,
    dim: usize,
    generators: Vec<Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MSetDoc {
    monoid: Value,
    points: usize,
    action: Vec<Vec<Option<usize>>>,
}

fn parse<T: for<'de> Deserialize<'de>>(doc: &Value, what: &str) -> Result<T, CliError> {
    T::deserialize(doc).map_err(|e| CliError::Input(format!("bad {what}: {e}")))
}

/// A catalog entry by name.
pub fn load_catalog(name: &str) -> Result<Loaded, CliError> {
    let item = catalog::build(name)?;
    Ok(match item.object {
        Catalogued::Monoid(m) => Loaded::Monoid(Arc::new(m)),
        Catalogued::MSet(x) => Loaded::MSet(x),
    })
}

pub fn load_text(text: &str, element_cap: usize) -> Result<Loaded, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    load_value(&doc, element_cap)
}

pub fn load_value(doc: &Value, element_cap: usize) -> Result<Loaded, CliError> {
    let obj = doc.as_object().ok_or_else(|| CliError::Input("expected a JSON object".into()))?;
    if obj.contains_key("action") {
        return load_mset(doc, element_cap).map(Loaded::MSet);
    }
    load_monoid(doc, element_cap).map(Loaded::Monoid)
}

fn load_monoid(doc: &Value, element_cap: usize) -> Result<Arc<FiniteMonoid>, CliError> {
    if let Some(name) = doc.as_str() {
        return Ok(load_catalog(name)?.monoid());
    }
    let obj = doc.as_object().ok_or_else(|| CliError::Input("expected a monoid object or catalog name".into()))?;
    let m = match obj.get("type").map(|t| t.as_str()) {
        None => {
            let t: TableDoc = parse(doc, "monoid table")?;
            if t.cayley.len() != t.size {
                return Err(CliError::Input(format!("size {} but {} table rows", t.size, t.cayley.len())));
            }
            let m = FiniteMonoid::from_cayley(t.cayley, t.labels)?;
            if m.identity() != t.identity {
                return Err(CliError::Input(format!("declared identity {} but the identity is {}", t.identity, m.identity())));
            }
            m
        }
        Some(Some("transformations")) => {
            let mut body = obj.clone();
            body.remove("type");
            let t: TransformationsDoc = parse(&Value::Object(body), "transformations")?;
            generate_from_transformations(t.degree, &t.generators, element_cap)?
        }
        Some(Some("matrices")) => {
            let mut body = obj.clone();
            body.remove("type");
            let t: MatricesDoc = parse(&Value::Object(body), "matrices")?;
            let ring = match t.field {
                FieldSpec::Order(q) => MatrixRing::finite(q)?,
                FieldSpec::Name(z) if z == "Z" => MatrixRing::Integers,
                FieldSpec::Name(other) => return Err(CliError::Input(format!("unknown field `{other}`"))),
            };
            generate_from_matrices(&ring, t.dim, &t.generators, element_cap)?
        }
        Some(other) => return Err(CliError::Input(format!("unknown monoid type {}", other.unwrap_or("(non-string)")))),
    };
    Ok(Arc::new(m))
}

fn load_mset(doc: &Value, element_cap: usize) -> Result<PartialMSet, CliError> {
    let t: MSetDoc = parse(doc, "M-set")?;
    let monoid = load_monoid(&t.monoid, element_cap)?;
    if t.action.len() != t.points {
        return Err(CliError::Input(format!("{} points but {} action rows", t.points, t.action.len())));
    }
    Ok(PartialMSet::new(monoid, t.action)?)
}

pub fn monoid_json(m: &FiniteMonoid) -> Value {
    let labels: Vec<String> = m.elements().map(|x| m.label(x)).collect();
    json!({
        "size": m.size(),
        "identity": m.identity(),
        "cayley": m.cayley(),
        "labels": labels,
    })
}

pub fn mset_json(x: &PartialMSet) -> Value {
    json!({
        "monoid": monoid_json(x.monoid()),
        "points": x.len(),
        "action": x.rows(),
    })
}

pub fn loaded_json(l: &Loaded) -> Value {
    match l {
        Loaded::Monoid(m) => monoid_json(m),
        Loaded::MSet(x) => mset_json(x),
    }
}
