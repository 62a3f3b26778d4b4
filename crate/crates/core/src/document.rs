//! JSON documents exchanged by the command-line front end.
//!
//! Every document is an object `{"schema": "torfib/1", "kind": <kind>, ...}`.
//! Integers are JSON numbers when their magnitude is below 2^53 and decimal
//! strings otherwise; rationals are strings `"p/q"` (or `"p"`); group words
//! use the syntax of [`GroupPresentation::parse_word`].
//!
//! | kind              | payload                                                           |
//! |-------------------|-------------------------------------------------------------------|
//! | `matrix`          | `rows`                                                            |
//! | `representation`  | `generators`, `relators`, `dim`, `images`                         |
//! | `complex`         | `generators`, `relators`, `ranks`, `boundaries`, `representation`? |
//! | `nerve`           | `vertices`, `edges`, `triangles`, `tetrahedra`, `spanning_tree`, `loops`, `generators`, `relators` |
//! | `transition-data` | `nerve`, `dim`, `labels`                                          |
//! | `cocycle`         | `nerve`, `local` or `twisting`, `values`                          |
//!
//! A boundary entry is a list of `[coefficient, word]` terms. A label is
//! `{"edge": [a, b], "linear": rows, "translation": [..], "drift": [..]?}`;
//! listing an edge against its stored orientation gives the reverse label.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::affine::{AffToral, GlnZ, GroupPresentation, Representation, Word};
use crate::cocycles::{ChernCocycle, CoverNerve, EdgeLabel, LocalSystem, NerveSpec, TransitionData};
use crate::linalg::IntMatrix;
use crate::twisted::{GroupRingElement, TwistedComplex};

pub const SCHEMA: &str = "torfib/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Syntax(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid {kind} document ({error}): {message}")]
    Invalid {
        kind: String,
        error: &'static str,
        message: String,
    },
}

impl DocumentError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Syntax(_) => "Syntax",
            Self::Schema(_) => "Schema",
            Self::Invalid { .. } => "Invalid",
        }
    }
}

type Result<T> = std::result::Result<T, DocumentError>;

fn schema(msg: impl Into<String>) -> DocumentError {
    DocumentError::Schema(msg.into())
}

fn invalid(kind: &str, error: &'static str, message: impl ToString) -> DocumentError {
    DocumentError::Invalid {
        kind: kind.to_string(),
        error,
        message: message.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Matrix(IntMatrix),
    Representation(Representation),
    Complex {
        complex: TwistedComplex,
        representation: Option<Representation>,
    },
    Nerve(CoverNerve),
    TransitionData(TransitionData),
    Cocycle(ChernCocycle),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Matrix(_) => "matrix",
            Self::Representation(_) => "representation",
            Self::Complex { .. } => "complex",
            Self::Nerve(_) => "nerve",
            Self::TransitionData(_) => "transition-data",
            Self::Cocycle(_) => "cocycle",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = object(value, "document")?;
        match obj.get("schema").and_then(Value::as_str) {
            Some(SCHEMA) => {}
            Some(other) => return Err(schema(format!("unsupported schema {other:?}"))),
            None => return Err(schema("missing \"schema\"")),
        }
        let kind = str_field(obj, "kind")?;
        match kind {
            "matrix" => Ok(Self::Matrix(matrix(field(obj, "rows")?)?)),
            "representation" => {
                let pres = presentation(obj, kind)?;
                Ok(Self::Representation(representation_body(obj, pres, kind)?))
            }
            "complex" => {
                let (complex, representation) = complex_body(obj)?;
                Ok(Self::Complex {
                    complex,
                    representation,
                })
            }
            "nerve" => Ok(Self::Nerve(nerve_body(obj)?)),
            "transition-data" => Ok(Self::TransitionData(transition_body(obj)?)),
            "cocycle" => Ok(Self::Cocycle(cocycle_body(obj)?)),
            other => Err(schema(format!("unknown kind {other:?}"))),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut body = match self {
            Self::Matrix(m) => json!({ "rows": matrix_json(m) }),
            Self::Representation(r) => representation_json(r),
            Self::Complex {
                complex,
                representation,
            } => complex_json(complex, representation.as_ref()),
            Self::Nerve(n) => nerve_json(n),
            Self::TransitionData(td) => transition_json(td),
            Self::Cocycle(c) => cocycle_json(c),
        };
        let obj = body.as_object_mut().expect("bodies are objects");
        let mut out = Map::new();
        out.insert("schema".into(), Value::from(SCHEMA));
        out.insert("kind".into(), Value::from(self.kind()));
        out.append(obj);
        Value::Object(out)
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }
}

/// Integers of magnitude below 2^53 are JSON numbers, larger ones strings.
pub fn int_to_json(x: &BigInt) -> Value {
    const LIMIT: i64 = 1 << 53;
    match x.to_i64() {
        Some(v) if v.abs() < LIMIT => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

pub fn rational_to_json(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn rational_from_json(v: &Value) -> Option<BigRational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())),
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p.trim().parse().ok()?;
                    let q: BigInt = q.trim().parse().ok()?;
                    (!q.is_zero()).then(|| BigRational::new(p, q))
                }
                None => s.parse().ok().map(BigRational::from_integer),
            }
        }
        _ => None,
    }
}

/// Serde adapter for `Vec<BigInt>` using the integer encoding above.
pub mod int_list {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(super::int_to_json).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Value>::deserialize(d)?
            .iter()
            .map(|v| super::int_from_json(v).ok_or_else(|| D::Error::custom(format!("not an integer: {v}"))))
            .collect()
    }
}

// ---------------------------------------------------------------- reading

type Obj = Map<String, Value>;

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Obj> {
    v.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn field<'a>(obj: &'a Obj, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing field {key:?}")))
}

fn str_field<'a>(obj: &'a Obj, key: &str) -> Result<&'a str> {
    field(obj, key)?
        .as_str()
        .ok_or_else(|| schema(format!("field {key:?} must be a string")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))
}

fn usize_value(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(format!("{what} must be a non-negative integer")))
}

fn string(v: &Value, what: &str) -> Result<String> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| schema(format!("{what} must be a string")))
}

fn strings(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?.iter().map(|s| string(s, what)).collect()
}

fn names<const N: usize>(v: &Value, what: &str) -> Result<[String; N]> {
    strings(v, what)?
        .try_into()
        .map_err(|_| schema(format!("{what} must list {N} vertices")))
}

fn integers(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    array(v, what)?
        .iter()
        .map(|x| int_from_json(x).ok_or_else(|| schema(format!("{what}: {x} is not an integer"))))
        .collect()
}

fn rationals(v: &Value, what: &str) -> Result<Vec<BigRational>> {
    array(v, what)?
        .iter()
        .map(|x| rational_from_json(x).ok_or_else(|| schema(format!("{what}: {x} is not a rational"))))
        .collect()
}

fn matrix(v: &Value) -> Result<IntMatrix> {
    let rows = array(v, "matrix rows")?
        .iter()
        .map(|r| integers(r, "matrix row"))
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(&rows).map_err(|e| schema(e.to_string()))
}

fn presentation(obj: &Obj, kind: &str) -> Result<GroupPresentation> {
    let gens = match obj.get("generators") {
        Some(v) => strings(v, "generators")?,
        None => Vec::new(),
    };
    let rels = match obj.get("relators") {
        Some(v) => strings(v, "relators")?,
        None => Vec::new(),
    };
    let g: Vec<&str> = gens.iter().map(String::as_str).collect();
    let r: Vec<&str> = rels.iter().map(String::as_str).collect();
    GroupPresentation::parse(&g, &r).map_err(|e| invalid(kind, e.name(), e))
}

fn representation_body(obj: &Obj, pres: GroupPresentation, kind: &str) -> Result<Representation> {
    let dim = usize_value(field(obj, "dim")?, "dim")?;
    let images = array(field(obj, "images")?, "images")?
        .iter()
        .map(matrix)
        .collect::<Result<Vec<_>>>()?;
    Representation::new(pres, dim, images).map_err(|e| invalid(kind, e.name(), e))
}

fn word(pres: &GroupPresentation, v: &Value, kind: &str) -> Result<Word> {
    let text = v.as_str().ok_or_else(|| schema("words must be strings"))?;
    pres.parse_word(text).map_err(|e| invalid(kind, e.name(), e))
}

fn complex_body(obj: &Obj) -> Result<(TwistedComplex, Option<Representation>)> {
    let kind = "complex";
    let pres = presentation(obj, kind)?;
    let ranks = array(field(obj, "ranks")?, "ranks")?
        .iter()
        .map(|r| usize_value(r, "rank"))
        .collect::<Result<Vec<_>>>()?;
    let mut boundaries = Vec::new();
    for b in array(field(obj, "boundaries")?, "boundaries")? {
        let mut rows = Vec::new();
        for row in array(b, "boundary")? {
            let mut entries = Vec::new();
            for entry in array(row, "boundary row")? {
                let mut terms = Vec::new();
                for term in array(entry, "group ring element")? {
                    let pair = array(term, "term")?;
                    let [c, w] = pair.as_slice() else {
                        return Err(schema("a term is [coefficient, word]"));
                    };
                    let c = int_from_json(c).ok_or_else(|| schema("term coefficient must be an integer"))?;
                    terms.push((c, word(&pres, w, kind)?));
                }
                entries.push(GroupRingElement::from_terms(terms));
            }
            rows.push(entries);
        }
        boundaries.push(rows);
    }
    let complex = TwistedComplex::new(pres.clone(), ranks, boundaries).map_err(|e| invalid(kind, e.name(), e))?;
    let representation = match obj.get("representation") {
        Some(v) => Some(representation_body(object(v, "representation")?, pres, kind)?),
        None => None,
    };
    Ok((complex, representation))
}

fn nerve_body(obj: &Obj) -> Result<CoverNerve> {
    let kind = "nerve";
    let list = |key: &str| -> Result<Vec<Value>> {
        match obj.get(key) {
            Some(v) => Ok(array(v, key)?.clone()),
            None => Ok(Vec::new()),
        }
    };
    let mut loops = Vec::new();
    for l in list("loops")? {
        let l = object(&l, "loop")?;
        loops.push((names(field(l, "edge")?, "loop edge")?, string(field(l, "word")?, "loop word")?));
    }
    let spec = NerveSpec {
        vertices: strings(field(obj, "vertices")?, "vertices")?,
        edges: list("edges")?.iter().map(|e| names(e, "edge")).collect::<Result<_>>()?,
        triangles: list("triangles")?.iter().map(|t| names(t, "triangle")).collect::<Result<_>>()?,
        tetrahedra: list("tetrahedra")?.iter().map(|t| names(t, "tetrahedron")).collect::<Result<_>>()?,
        spanning_tree: list("spanning_tree")?
            .iter()
            .map(|e| names(e, "tree edge"))
            .collect::<Result<_>>()?,
        loops,
        presentation: presentation(obj, kind)?,
    };
    CoverNerve::new(spec).map_err(|e| invalid(kind, e.name(), e))
}

fn vertex_ids<const N: usize>(nerve: &CoverNerve, names: &[String; N], kind: &str) -> Result<[usize; N]> {
    let mut out = [0; N];
    for (o, n) in out.iter_mut().zip(names) {
        *o = nerve
            .vertex(n)
            .ok_or_else(|| invalid(kind, "UnknownVertex", format!("unknown vertex {n}")))?;
    }
    Ok(out)
}

fn triangle_id(nerve: &CoverNerve, v: &Value, kind: &str) -> Result<usize> {
    let ids = vertex_ids(nerve, &names::<3>(v, "triangle")?, kind)?;
    nerve
        .triangle(ids)
        .ok_or_else(|| invalid(kind, "UnknownSimplex", format!("no triangle {v}")))
}

fn transition_body(obj: &Obj) -> Result<TransitionData> {
    let kind = "transition-data";
    let nerve = nerve_body(object(field(obj, "nerve")?, "nerve")?)?;
    let dim = usize_value(field(obj, "dim")?, "dim")?;
    let mut forward: Vec<Option<EdgeLabel>> = vec![None; nerve.edges().len()];
    let mut reverse = BTreeMap::new();
    for l in array(field(obj, "labels")?, "labels")? {
        let l = object(l, "label")?;
        let edge_value = field(l, "edge")?;
        let [a, b] = vertex_ids(&nerve, &names::<2>(edge_value, "label edge")?, kind)?;
        let e = nerve
            .edge(a, b)
            .ok_or_else(|| invalid(kind, "UnknownSimplex", format!("no edge {edge_value}")))?;
        let linear = GlnZ::new(matrix(field(l, "linear")?)?).map_err(|err| invalid(kind, err.name(), err))?;
        let translation = rationals(field(l, "translation")?, "translation")?;
        let transition = AffToral::new(linear, translation).map_err(|err| invalid(kind, err.name(), err))?;
        let duplicate = || invalid(kind, "DuplicateLabel", format!("edge {edge_value} labelled twice"));
        if a < b {
            let mut label = EdgeLabel::constant(transition);
            if let Some(d) = l.get("drift") {
                for entry in array(d, "drift")? {
                    let entry = object(entry, "drift entry")?;
                    let t = triangle_id(&nerve, field(entry, "triangle")?, kind)?;
                    label.drift.insert(t, rationals(field(entry, "value")?, "drift value")?);
                }
            }
            if forward[e].replace(label).is_some() {
                return Err(duplicate());
            }
        } else if reverse.insert(e, transition).is_some() {
            return Err(duplicate());
        }
    }
    let labels = forward
        .into_iter()
        .enumerate()
        .map(|(e, l)| {
            l.ok_or_else(|| invalid(kind, "MissingLabel", format!("edge {:?} has no label", nerve.edge_name(e))))
        })
        .collect::<Result<Vec<_>>>()?;
    TransitionData::new(nerve, dim, labels, reverse).map_err(|e| invalid(kind, e.name(), e))
}

fn cocycle_body(obj: &Obj) -> Result<ChernCocycle> {
    let kind = "cocycle";
    let nerve = nerve_body(object(field(obj, "nerve")?, "nerve")?)?;
    let local = match (obj.get("local"), obj.get("twisting")) {
        (Some(l), _) => {
            let mut linear: Vec<Option<GlnZ>> = vec![None; nerve.edges().len()];
            let mut dim = None;
            for entry in array(l, "local")? {
                let entry = object(entry, "local entry")?;
                let edge_value = field(entry, "edge")?;
                let [a, b] = vertex_ids(&nerve, &names::<2>(edge_value, "edge")?, kind)?;
                let e = nerve
                    .edge(a, b)
                    .ok_or_else(|| invalid(kind, "UnknownSimplex", format!("no edge {edge_value}")))?;
                let mut m = GlnZ::new(matrix(field(entry, "linear")?)?).map_err(|err| invalid(kind, err.name(), err))?;
                if a > b {
                    m = m.inverse();
                }
                dim = Some(m.dim());
                linear[e] = Some(m);
            }
            let linear = linear
                .into_iter()
                .enumerate()
                .map(|(e, m)| {
                    m.ok_or_else(|| invalid(kind, "MissingLabel", format!("edge {:?} has no matrix", nerve.edge_name(e))))
                })
                .collect::<Result<Vec<_>>>()?;
            LocalSystem::new(nerve.clone(), dim.unwrap_or(0), linear).map_err(|e| invalid(kind, e.name(), e))?
        }
        (None, Some(t)) => {
            let rep = representation_body(object(t, "twisting")?, nerve.presentation().clone(), kind)?;
            LocalSystem::from_representation(nerve.clone(), &rep).map_err(|e| invalid(kind, e.name(), e))?
        }
        (None, None) => return Err(schema("cocycle needs \"local\" or \"twisting\"")),
    };
    let mut values = vec![vec![BigInt::zero(); local.dim()]; nerve.triangles().len()];
    for entry in array(field(obj, "values")?, "values")? {
        let entry = object(entry, "value entry")?;
        let t = triangle_id(&nerve, field(entry, "triangle")?, kind)?;
        values[t] = integers(field(entry, "value")?, "value")?;
    }
    ChernCocycle::new(local, values).map_err(|e| invalid(kind, e.name(), e))
}

// ---------------------------------------------------------------- writing

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(int_to_json).collect()))
            .collect(),
    )
}

pub fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

fn rationals_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

fn presentation_json(p: &GroupPresentation) -> (Value, Value) {
    (
        json!(p.generators()),
        Value::Array(
            p.relators()
                .iter()
                .map(|r| Value::from(p.display_word(r).to_string()))
                .collect(),
        ),
    )
}

fn images_json(r: &Representation) -> Value {
    Value::Array(r.images().iter().map(|g| matrix_json(g.matrix())).collect())
}

fn representation_json(r: &Representation) -> Value {
    let (g, rel) = presentation_json(r.presentation());
    json!({ "generators": g, "relators": rel, "dim": r.dim(), "images": images_json(r) })
}

fn complex_json(c: &TwistedComplex, rep: Option<&Representation>) -> Value {
    let pres = c.presentation();
    let (g, rel) = presentation_json(pres);
    let boundaries: Vec<Value> = c
        .boundaries()
        .iter()
        .map(|b| {
            json!(b
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            e.terms()
                                .iter()
                                .map(|(k, w)| json!([int_to_json(k), pres.display_word(w).to_string()]))
                                .collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>())
        })
        .collect();
    let mut out = json!({ "generators": g, "relators": rel, "ranks": c.ranks(), "boundaries": boundaries });
    if let Some(r) = rep {
        out["representation"] = json!({ "dim": r.dim(), "images": images_json(r) });
    }
    out
}

pub fn nerve_json(n: &CoverNerve) -> Value {
    let pres = n.presentation();
    let (g, rel) = presentation_json(pres);
    let name = |v: usize| n.vertices()[v].clone();
    json!({
        "vertices": n.vertices(),
        "edges": n.edges().iter().map(|&(a, b)| [name(a), name(b)]).collect::<Vec<_>>(),
        "triangles": (0..n.triangles().len()).map(|t| n.triangle_name(t)).collect::<Vec<_>>(),
        "tetrahedra": n.tetrahedra().iter().map(|q| q.map(name)).collect::<Vec<_>>(),
        "spanning_tree": n.tree().iter().map(|&e| n.edge_name(e)).collect::<Vec<_>>(),
        "loops": n.loops().iter().map(|(&e, w)| json!({
            "edge": n.edge_name(e),
            "word": pres.display_word(w).to_string(),
        })).collect::<Vec<_>>(),
        "generators": g,
        "relators": rel,
    })
}

fn transition_json(td: &TransitionData) -> Value {
    let n = td.nerve();
    let mut labels: Vec<Value> = td
        .labels()
        .iter()
        .enumerate()
        .map(|(e, l)| {
            let mut v = json!({
                "edge": n.edge_name(e),
                "linear": matrix_json(l.transition.linear().matrix()),
                "translation": rationals_json(l.transition.translation()),
            });
            if !l.drift.is_empty() {
                v["drift"] = Value::Array(
                    l.drift
                        .iter()
                        .map(|(&t, d)| json!({ "triangle": n.triangle_name(t), "value": rationals_json(d) }))
                        .collect(),
                );
            }
            v
        })
        .collect();
    for (&e, t) in td.reverse_labels() {
        let [a, b] = n.edge_name(e);
        labels.push(json!({
            "edge": [b, a],
            "linear": matrix_json(t.linear().matrix()),
            "translation": rationals_json(t.translation()),
        }));
    }
    json!({ "nerve": nerve_json(n), "dim": td.dim(), "labels": labels })
}

/// Per-edge 1-cochain keyed by edge names.
pub fn edge_cochain_json(n: &CoverNerve, w: &[Vec<BigInt>]) -> Value {
    Value::Array(
        w.iter()
            .enumerate()
            .map(|(e, v)| json!({ "edge": n.edge_name(e), "value": ints_json(v) }))
            .collect(),
    )
}

/// Per-triangle 2-cochain keyed by triangle names.
pub fn triangle_cochain_json(n: &CoverNerve, z: &[Vec<BigInt>]) -> Value {
    Value::Array(
        z.iter()
            .enumerate()
            .map(|(t, v)| json!({ "triangle": n.triangle_name(t), "value": ints_json(v) }))
            .collect(),
    )
}

fn cocycle_json(c: &ChernCocycle) -> Value {
    let n = c.nerve();
    let local: Vec<Value> = c
        .local_system()
        .linear_parts()
        .iter()
        .enumerate()
        .map(|(e, m)| json!({ "edge": n.edge_name(e), "linear": matrix_json(m.matrix()) }))
        .collect();
    json!({ "nerve": nerve_json(n), "local": local, "values": triangle_cochain_json(n, c.values()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycles::chern_cocycle;
    use crate::datasets;

    fn round_trip(doc: Document) {
        let text = doc.to_pretty_string();
        assert_eq!(Document::parse(&text).unwrap(), doc, "{text}");
    }

    #[test]
    fn integer_encoding() {
        assert_eq!(int_to_json(&BigInt::from(-5)), json!(-5));
        let big = BigInt::from(1u64 << 53);
        assert_eq!(int_to_json(&big), json!("9007199254740992"));
        assert_eq!(int_from_json(&json!("9007199254740992")), Some(big));
        assert_eq!(rational_from_json(&json!("-3/6")), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(rational_from_json(&json!("1/0")), None);
        assert_eq!(rational_from_json(&json!(4)), Some(BigRational::from_integer(4.into())));
    }

    #[test]
    fn builtins_round_trip() {
        let (complex, rep) = datasets::rp2_twisted();
        round_trip(Document::Complex {
            complex,
            representation: Some(rep.clone()),
        });
        round_trip(Document::Representation(rep));
        round_trip(Document::Matrix(IntMatrix::from_rows(&[[2, 4], [6, 8]]).unwrap()));
        for td in [datasets::rp2_bundle(), datasets::s2_tetra(), datasets::circle_loop()] {
            round_trip(Document::Nerve(td.nerve().clone()));
            round_trip(Document::Cocycle(chern_cocycle(&td).unwrap()));
            round_trip(Document::TransitionData(td));
        }
    }

    #[test]
    fn schema_errors() {
        assert_eq!(Document::parse("{").unwrap_err().name(), "Syntax");
        assert_eq!(Document::parse(r#"{"kind":"matrix"}"#).unwrap_err().name(), "Schema");
        assert_eq!(
            Document::parse(r#"{"schema":"torfib/1","kind":"matrix","rows":[[1],[2,3]]}"#).unwrap_err().name(),
            "Schema"
        );
        let bad_rep = r#"{"schema":"torfib/1","kind":"representation","generators":["a"],
            "relators":["a^2"],"dim":1,"images":[[[2]]]}"#;
        assert!(matches!(
            Document::parse(bad_rep),
            Err(DocumentError::Invalid { error: "NotUnimodular", .. })
        ));
    }

    #[test]
    fn reverse_labels_parse() {
        let text = r#"{"schema":"torfib/1","kind":"transition-data","dim":1,
          "nerve":{"vertices":["A","B"],"edges":[["A","B"]],"spanning_tree":[["A","B"]]},
          "labels":[{"edge":["A","B"],"linear":[[1]],"translation":["1/3"]},
                    {"edge":["B","A"],"linear":[[1]],"translation":["2/3"]}]}"#;
        let Document::TransitionData(td) = Document::parse(text).unwrap() else {
            panic!()
        };
        assert_eq!(td.reverse_labels().len(), 1);
        round_trip(Document::TransitionData(td));
    }
}
