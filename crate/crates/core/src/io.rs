//! Text file formats (JSON, UTF-8).
//!
//! Rationals are always strings `"p/q"` or `"p"`. Multi-index keys are
//! comma-separated 1-based axis lists (`"1,2,2"`, empty for degree 0);
//! polynomial keys are comma-separated exponent counts `"I1,…,In"`.
//! Omitted entries are zero, and writers omit zeros.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::altforms::CoDimOneForm;
use crate::error::{Error, Result};
use crate::hyperstress::{TractionStressField, VariationalStressField};
use crate::jet::JetElement;
use crate::multiindex::{CardinalityIndex, MultiIndex};
use crate::polyfield::{Point, PolyField, Polynomial};
use crate::scalar::{self, Scalar};
use crate::symtensor::{Convention, DenseTensor, SymTensor, Variance};

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// A tensor read from or written to a tensor file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorValue {
    Dense(DenseTensor),
    Symmetric(SymTensor),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    n: usize,
    degree: usize,
    variance: String,
    storage: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    convention: Option<String>,
    #[serde(default)]
    components: BTreeMap<String, String>,
}

fn variance_tag(v: Variance) -> &'static str {
    match v {
        Variance::Covariant => "co",
        Variance::Contravariant => "contra",
    }
}

fn parse_variance(s: &str) -> Result<Variance> {
    match s {
        "co" => Ok(Variance::Covariant),
        "contra" => Ok(Variance::Contravariant),
        other => Err(Error::Parse(format!("unknown variance {other:?}"))),
    }
}

fn parse_convention(s: Option<&str>) -> Result<Convention> {
    match s {
        None | Some("plain") => Ok(Convention::Plain),
        Some("arrow") => Ok(Convention::Arrow),
        Some(other) => Err(Error::Parse(format!("unknown convention {other:?}"))),
    }
}

fn parse_index(n: usize, degree: usize, key: &str) -> Result<MultiIndex> {
    let idx = MultiIndex::parse(n, key)?;
    if idx.len() != degree {
        return Err(Error::Parse(format!("index {key:?} does not have degree {degree}")));
    }
    Ok(idx)
}

pub fn parse_tensor(text: &str) -> Result<TensorValue> {
    let file: TensorFile = serde_json::from_str(text).map_err(parse_err)?;
    let variance = parse_variance(&file.variance)?;
    match file.storage.as_str() {
        "dense" => {
            if file.convention.is_some() {
                return Err(Error::Parse("dense storage takes no convention".into()));
            }
            let mut t = DenseTensor::zeros(file.n, file.degree, variance);
            for (key, value) in &file.components {
                let idx = parse_index(file.n, file.degree, key)?;
                t.set(&idx, scalar::parse(value)?);
            }
            Ok(TensorValue::Dense(t))
        }
        "symmetric" => {
            let convention = parse_convention(file.convention.as_deref())?;
            let mut t = SymTensor::zeros(file.n, file.degree, variance, convention);
            for (key, value) in &file.components {
                let idx = parse_index(file.n, file.degree, key)?;
                if !idx.is_nondecreasing() {
                    return Err(Error::Parse(format!(
                        "symmetric storage needs non-decreasing indices, got {key:?}"
                    )));
                }
                t.set(&idx.cardinality(), scalar::parse(value)?);
            }
            Ok(TensorValue::Symmetric(t))
        }
        other => Err(Error::Parse(format!("unknown storage {other:?}"))),
    }
}

pub fn write_tensor(t: &TensorValue) -> String {
    let file = match t {
        TensorValue::Dense(d) => TensorFile {
            n: d.n(),
            degree: d.degree(),
            variance: variance_tag(d.variance()).into(),
            storage: "dense".into(),
            convention: None,
            components: MultiIndex::all(d.n(), d.degree())
                .zip(d.components())
                .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                .map(|(idx, v)| (idx.to_string(), scalar::format(v)))
                .collect(),
        },
        TensorValue::Symmetric(s) => TensorFile {
            n: s.n(),
            degree: s.degree(),
            variance: variance_tag(s.variance()).into(),
            storage: "symmetric".into(),
            convention: Some(
                match s.convention() {
                    Convention::Plain => "plain",
                    Convention::Arrow => "arrow",
                }
                .into(),
            ),
            components: crate::multiindex::enumerate_nondecreasing(s.n(), s.degree())
                .iter()
                .zip(s.components())
                .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                .map(|(idx, v)| (idx.canonical().to_string(), scalar::format(v)))
                .collect(),
        },
    };
    to_json(&file)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormFile {
    n: usize,
    coeffs: Vec<String>,
}

pub fn parse_form(text: &str) -> Result<CoDimOneForm> {
    let file: FormFile = serde_json::from_str(text).map_err(parse_err)?;
    if file.coeffs.len() != file.n {
        return Err(Error::LengthMismatch { expected: file.n, got: file.coeffs.len() });
    }
    let coeffs = file.coeffs.iter().map(|c| scalar::parse(c)).collect::<Result<_>>()?;
    Ok(CoDimOneForm::new(coeffs))
}

pub fn write_form(form: &CoDimOneForm) -> String {
    to_json(&FormFile { n: form.n(), coeffs: form.coeffs().iter().map(scalar::format).collect() })
}

type PolyMap = BTreeMap<String, String>;

pub fn parse_polynomial(n: usize, map: &PolyMap) -> Result<Polynomial> {
    let terms = map
        .iter()
        .map(|(k, v)| Ok((CardinalityIndex::parse(n, k)?, scalar::parse(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms(n, terms)
}

pub fn polynomial_map(p: &Polynomial) -> PolyMap {
    p.terms().map(|(idx, c)| (idx.to_string(), scalar::format(c))).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldFile {
    n: usize,
    m: usize,
    components: Vec<PolyMap>,
}

/// Field file: `{"n", "m", "components": [poly map per fiber component]}`.
pub fn parse_field(text: &str) -> Result<PolyField> {
    let file: FieldFile = serde_json::from_str(text).map_err(parse_err)?;
    if file.components.len() != file.m {
        return Err(Error::LengthMismatch { expected: file.m, got: file.components.len() });
    }
    let comps = file.components.iter().map(|c| parse_polynomial(file.n, c)).collect::<Result<_>>()?;
    PolyField::new(file.n, comps)
}

pub fn write_field(w: &PolyField) -> String {
    to_json(&FieldFile { n: w.n(), m: w.m(), components: w.components().iter().map(polynomial_map).collect() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JetFile {
    n: usize,
    m: usize,
    k: usize,
    x: Vec<String>,
    #[serde(default)]
    blocks: BTreeMap<String, BTreeMap<String, String>>,
}

fn split_alpha(key: &str) -> Result<(usize, &str)> {
    let (alpha, rest) =
        key.split_once('|').ok_or_else(|| Error::Parse(format!("slot key {key:?} lacks '|'")))?;
    let alpha = alpha.trim().parse().map_err(|_| Error::Parse(format!("bad fiber index in {key:?}")))?;
    Ok((alpha, rest))
}

/// Jet file: blocks keyed by order, slots `"alpha|I1,…,In"` (counts).
pub fn parse_jet(text: &str) -> Result<JetElement> {
    let file: JetFile = serde_json::from_str(text).map_err(parse_err)?;
    if file.x.len() != file.n {
        return Err(Error::LengthMismatch { expected: file.n, got: file.x.len() });
    }
    let x = Point::new(file.x.iter().map(|v| scalar::parse(v)).collect::<Result<_>>()?);
    let mut jet = JetElement::zeros(file.m, file.k, x);
    for (order, block) in &file.blocks {
        let order: usize =
            order.parse().map_err(|_| Error::Parse(format!("bad block order {order:?}")))?;
        for (key, value) in block {
            let (alpha, counts) = split_alpha(key)?;
            let idx = CardinalityIndex::parse(file.n, counts)?;
            if alpha == 0 || alpha > file.m || idx.degree() != order || order > file.k {
                return Err(Error::Parse(format!("slot {key:?} does not fit block {order}")));
            }
            jet.set(alpha, &idx, scalar::parse(value)?);
        }
    }
    Ok(jet)
}

pub fn write_jet(jet: &JetElement) -> String {
    let mut blocks: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for (alpha, idx) in jet.slots() {
        let v = jet.get(alpha, &idx);
        if num_traits::Zero::is_zero(v) {
            continue;
        }
        blocks
            .entry(idx.degree().to_string())
            .or_default()
            .insert(format!("{alpha}|{idx}"), scalar::format(v));
    }
    to_json(&JetFile {
        n: jet.n(),
        m: jet.m(),
        k: jet.order(),
        x: jet.point().coords().iter().map(scalar::format).collect(),
        blocks,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StressFile {
    n: usize,
    m: usize,
    k: usize,
    kind: String,
    #[serde(default)]
    blocks: BTreeMap<String, PolyMap>,
}

/// Either kind of stress field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StressValue {
    Variational(VariationalStressField),
    Traction(TractionStressField),
}

fn parse_symmetric_slot(n: usize, list: &str, key: &str) -> Result<CardinalityIndex> {
    let idx = MultiIndex::parse(n, list)?;
    if !idx.is_nondecreasing() {
        return Err(Error::Parse(format!("slot {key:?} needs a non-decreasing axis list")));
    }
    Ok(idx.cardinality())
}

/// Stress file: `kind` is `"variational"` (slots `"alpha|I-axis-list"`) or
/// `"traction"` (slots `"alpha|J-axis-list|j"`); values are polynomial maps in `x`.
pub fn parse_stress(text: &str) -> Result<StressValue> {
    let file: StressFile = serde_json::from_str(text).map_err(parse_err)?;
    match file.kind.as_str() {
        "variational" => {
            let mut f = VariationalStressField::new(file.n, file.m, file.k);
            for (key, poly) in &file.blocks {
                let (alpha, list) = split_alpha(key)?;
                let idx = parse_symmetric_slot(file.n, list, key)?;
                f.insert(alpha, idx, parse_polynomial(file.n, poly)?)?;
            }
            Ok(StressValue::Variational(f))
        }
        "traction" => {
            let mut f = TractionStressField::new(file.n, file.m, file.k);
            for (key, poly) in &file.blocks {
                let (alpha, rest) = split_alpha(key)?;
                let (list, j) = rest
                    .rsplit_once('|')
                    .ok_or_else(|| Error::Parse(format!("traction slot {key:?} lacks '|j'")))?;
                let j: usize =
                    j.trim().parse().map_err(|_| Error::Parse(format!("bad axis in {key:?}")))?;
                let idx = parse_symmetric_slot(file.n, list, key)?;
                f.insert(alpha, idx, j, parse_polynomial(file.n, poly)?)?;
            }
            Ok(StressValue::Traction(f))
        }
        other => Err(Error::Parse(format!("unknown stress kind {other:?}"))),
    }
}

pub fn write_stress(s: &StressValue) -> String {
    let file = match s {
        StressValue::Variational(f) => StressFile {
            n: f.n(),
            m: f.m(),
            k: f.order(),
            kind: "variational".into(),
            blocks: f
                .slots()
                .map(|((alpha, idx), p)| (format!("{alpha}|{}", idx.canonical()), polynomial_map(p)))
                .collect(),
        },
        StressValue::Traction(f) => StressFile {
            n: f.n(),
            m: f.m(),
            k: f.order(),
            kind: "traction".into(),
            blocks: f
                .slots()
                .map(|((alpha, idx, j), p)| {
                    (format!("{alpha}|{}|{j}", idx.canonical()), polynomial_map(p))
                })
                .collect(),
        },
    };
    to_json(&file)
}

pub fn format_scalar_list(values: &[Scalar]) -> String {
    values.iter().map(scalar::format).collect::<Vec<_>>().join(",")
}
