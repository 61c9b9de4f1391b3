//! JSON file formats and TSV rendering for the CLI.
//!
//! Graph: `{"n": 4, "edges": [[1,2],[2,3]]}`.
//! Building set: `{"n": 9, "blocks": [[1],...]}` or
//! `{"n": 9, "generators": [[1,2],[2,3]], "close": true}`; non-contiguous
//! grounds use `"ground": [labels]` instead of `"n"`.
//! Nested set: `{"blocks": [[3],[4],...]}`.
//! Heights: a flat map from block keys to rational strings.
//! Cone: `{"equalities": [...], "inequalities": [{"coeffs": {"[1,4]": 1}}]}`.
//! Polytope: `{"dim": d, "vertices": [{"coords": [...], "nested_set": [...]}]}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::building::{build_from_blocks, BuildingSet};
use crate::error::Error;
use crate::graph::Graph;
use crate::linalg::Rat;
use crate::realize::Polytope;
use crate::typecone::{ConeDescription, HeightVector, Inequality};
use crate::vset::{parse_block_key, Block, VertexSet};

pub fn parse_rational(s: &str) -> Result<Rat, Error> {
    BigRational::from_str(s.trim()).map_err(|_| Error::BadRational(s.to_string()))
}

pub fn rational_string(r: &Rat) -> String {
    r.to_string()
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::BadInput(format!("malformed JSON: {e}"))
}

fn labels_value(b: Block) -> Value {
    Value::Array(b.iter().map(|v| json!(v)).collect())
}

fn labels_from(v: &[u32]) -> Result<VertexSet, Error> {
    if v.is_empty() {
        return Err(Error::EmptySubset);
    }
    VertexSet::from_labels(v.iter().copied())
}

// --- graphs -----------------------------------------------------------------

#[derive(Deserialize)]
struct GraphFile {
    n: u32,
    edges: Vec<(u32, u32)>,
}

pub fn graph_from_json(text: &str) -> Result<Graph, Error> {
    let f: GraphFile = serde_json::from_str(text).map_err(bad_json)?;
    Graph::new(f.n, &f.edges)
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

// --- building sets -----------------------------------------------------------

#[derive(Deserialize)]
struct BuildingFile {
    n: Option<u32>,
    ground: Option<Vec<u32>>,
    blocks: Option<Vec<Vec<u32>>>,
    generators: Option<Vec<Vec<u32>>>,
    #[serde(default)]
    close: Option<bool>,
}

pub fn building_from_json(text: &str) -> Result<BuildingSet, Error> {
    let f: BuildingFile = serde_json::from_str(text).map_err(bad_json)?;
    let ground = match (f.n, &f.ground) {
        (Some(n), None) => {
            if n == 0 {
                return Err(Error::EmptyGround);
            }
            if n > crate::vset::MAX_VERTEX {
                return Err(Error::VertexOutOfRange { vertex: n });
            }
            VertexSet::range(n)
        }
        (None, Some(labels)) => labels_from(labels)?,
        _ => {
            return Err(Error::BadInput(
                "building file needs exactly one of \"n\" or \"ground\"".into(),
            ))
        }
    };
    let (raw, close) = match (&f.blocks, &f.generators) {
        (Some(blocks), None) => (blocks, f.close.unwrap_or(false)),
        (None, Some(generators)) => {
            if f.close == Some(false) {
                return Err(Error::BadInput(
                    "\"generators\" implies closure; \"close\": false contradicts it".into(),
                ));
            }
            (generators, true)
        }
        _ => {
            return Err(Error::BadInput(
                "building file needs exactly one of \"blocks\" or \"generators\"".into(),
            ))
        }
    };
    let blocks: Vec<VertexSet> = raw
        .iter()
        .map(|v| labels_from(v))
        .collect::<Result<_, _>>()?;
    build_from_blocks(ground, &blocks, close)
}

pub fn building_to_json(b: &BuildingSet) -> Value {
    let blocks: Vec<Value> = b.blocks().iter().map(|&c| labels_value(c)).collect();
    let n = b.ground().len();
    if b.ground() == VertexSet::range(n) {
        json!({ "n": n, "blocks": blocks })
    } else {
        json!({
            "ground": b.ground().iter().collect::<Vec<_>>(),
            "blocks": blocks,
        })
    }
}

// --- nested sets --------------------------------------------------------------

#[derive(Deserialize)]
struct NestedFile {
    blocks: Vec<Vec<u32>>,
}

pub fn nested_blocks_from_json(text: &str) -> Result<Vec<Block>, Error> {
    let f: NestedFile = serde_json::from_str(text).map_err(bad_json)?;
    f.blocks.iter().map(|v| labels_from(v)).collect()
}

pub fn nested_set_value(blocks: &[Block]) -> Value {
    Value::Array(blocks.iter().map(|&c| labels_value(c)).collect())
}

// --- heights -------------------------------------------------------------------

pub fn heights_from_json(b: &BuildingSet, text: &str) -> Result<HeightVector, Error> {
    let raw: Map<String, Value> = serde_json::from_str(text).map_err(bad_json)?;
    let mut values: BTreeMap<Block, Rat> = BTreeMap::new();
    for (key, val) in raw {
        let block = parse_block_key(&key)?;
        let r = match &val {
            Value::String(s) => parse_rational(s)?,
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Rat::from_integer(i.into())
                } else {
                    return Err(Error::BadRational(n.to_string()));
                }
            }
            other => return Err(Error::BadRational(other.to_string())),
        };
        values.insert(block, r);
    }
    HeightVector::new(b, values)
}

pub fn heights_to_json(h: &HeightVector) -> Value {
    let mut map = Map::new();
    for (block, value) in h.values() {
        map.insert(block.to_string(), Value::String(rational_string(value)));
    }
    Value::Object(map)
}

// --- kinematic input --------------------------------------------------------

/// Accepts either an array of rationals or a map from facet index to
/// rational.
pub fn kinematic_values_from_json(text: &str, expected: usize) -> Result<Vec<Rat>, Error> {
    let raw: Value = serde_json::from_str(text).map_err(bad_json)?;
    let parse_one = |v: &Value| -> Result<Rat, Error> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n
                .as_i64()
                .map(|i| Rat::from_integer(i.into()))
                .ok_or_else(|| Error::BadRational(n.to_string())),
            other => Err(Error::BadRational(other.to_string())),
        }
    };
    match raw {
        Value::Array(items) => items.iter().map(parse_one).collect(),
        Value::Object(map) => {
            let mut out = vec![None; expected];
            for (k, v) in &map {
                let idx: usize = k
                    .parse()
                    .map_err(|_| Error::BadInput(format!("facet index {k:?} is not a number")))?;
                if idx >= expected {
                    return Err(Error::BadInput(format!(
                        "facet index {idx} out of range (have {expected} facets)"
                    )));
                }
                out[idx] = Some(parse_one(v)?);
            }
            out.into_iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| Error::BadInput(format!("facet index {i} missing")))
                })
                .collect()
        }
        _ => Err(Error::BadInput(
            "kinematic input must be an array or an index map".into(),
        )),
    }
}

// --- cones ---------------------------------------------------------------------

pub fn inequality_value(q: &Inequality) -> Value {
    let mut map = Map::new();
    for (block, c) in q.coeffs() {
        map.insert(block.to_string(), json!(c));
    }
    json!({ "coeffs": Value::Object(map) })
}

pub fn cone_to_json(c: &ConeDescription) -> Value {
    json!({
        "equalities": c.equalities().iter().map(|&b| labels_value(b)).collect::<Vec<_>>(),
        "inequalities": c.inequalities().iter().map(inequality_value).collect::<Vec<_>>(),
    })
}

/// Equalities and raw inequality coefficient maps, as parsed from disk.
pub type ParsedCone = (Vec<Block>, Vec<BTreeMap<Block, i64>>);

/// Parse the cone JSON back into block-keyed data (used for round-trips).
pub fn cone_from_json(text: &str) -> Result<ParsedCone, Error> {
    #[derive(Deserialize)]
    struct ConeFile {
        equalities: Vec<Vec<u32>>,
        inequalities: Vec<IneqFile>,
    }
    #[derive(Deserialize)]
    struct IneqFile {
        coeffs: BTreeMap<String, i64>,
    }
    let f: ConeFile = serde_json::from_str(text).map_err(bad_json)?;
    let eqs: Vec<Block> = f
        .equalities
        .iter()
        .map(|v| labels_from(v))
        .collect::<Result<_, _>>()?;
    let ineqs: Vec<BTreeMap<Block, i64>> = f
        .inequalities
        .iter()
        .map(|q| {
            q.coeffs
                .iter()
                .map(|(k, &c)| parse_block_key(k).map(|b| (b, c)))
                .collect::<Result<BTreeMap<_, _>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Ok((eqs, ineqs))
}

/// Matrix layout: one column per non-component block in canonical order,
/// one row per inequality.
pub fn cone_to_tsv(c: &ConeDescription) -> String {
    let coords = c.ray_blocks();
    let mut out = String::new();
    out.push_str(
        &coords
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join("\t"),
    );
    out.push('\n');
    for q in c.inequalities() {
        let row = q
            .dense_row(&coords)
            .into_iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("\t");
        out.push_str(&row);
        out.push('\n');
    }
    out
}

// --- polytopes -------------------------------------------------------------------

pub fn polytope_to_json(p: &Polytope) -> Value {
    let vertices: Vec<Value> = p
        .vertices
        .iter()
        .map(|v| {
            json!({
                "coords": v.coords.iter().map(|c| Value::String(rational_string(c))).collect::<Vec<_>>(),
                "nested_set": nested_set_value(v.nested_set.blocks()),
            })
        })
        .collect();
    match &p.coord_blocks {
        Some(blocks) => json!({
            "dim": p.dim,
            "coord_blocks": blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "vertices": vertices,
        }),
        None => json!({ "dim": p.dim, "vertices": vertices }),
    }
}
