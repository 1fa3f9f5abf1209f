//! JSON wire format for elements, tensors, posets, and parameter vectors.
//!
//! Conventions:
//! - compositions are arrays of columns, each a length-`level` array of
//!   naturals, e.g. `[[1,0],[3,2]]`;
//! - coefficients are exact rational strings `"p"` or `"p/q"`;
//! - extended naturals spell infinity as the string `"inf"`;
//! - quasisymmetric elements look like
//!   `{"level":2,"basis":"M","terms":[{"coef":"-3/2","index":[[1,0],[3,2]]}]}`,
//!   noncommutative ones add `"algebra":"NSym"` with basis in `{S, Phi, Upsilon}`,
//!   and free quasisymmetric ones use
//!   `{"level":2,"algebra":"FQSym","terms":[{"coef":"1","sigma":[...],"u":[...]}]}`;
//! - tensors replace `"index"` with `"left"`/`"right"`.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::coef::{format_coef, parse_coef, Coef};
use crate::comb::{ColoredPermutation, ExtNat, ExtVec, LPartite, VectorComposition};
use crate::error::Error;
use crate::fqsym::{FQSymElem, FQSymTensor};
use crate::nsym::{NSymBasis, NSymElem, NSymTensor};
use crate::posets::{ColoredPoset, MultigradedPoset};
use crate::qsym::{QSymBasis, QSymElem, QSymTensor};
use crate::Result;

fn obj(v: &Value, what: &str) -> Result<Map<String, Value>> {
    v.as_object()
        .cloned()
        .ok_or_else(|| Error::parse(format!("{what}: expected a JSON object")))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| Error::parse(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::parse(format!("{what}: expected a natural number")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(format!("{what}: expected a JSON array")))
}

// ---------------------------------------------------------------------------
// Parameter vectors
// ---------------------------------------------------------------------------

pub fn lpartite_to_value(n: &LPartite) -> Value {
    json!(n.0)
}

pub fn lpartite_from_value(v: &Value) -> Result<LPartite> {
    let arr = as_array(v, "degree vector")?;
    let mut out = Vec::with_capacity(arr.len());
    for e in arr {
        out.push(as_usize(e, "degree entry")? as u32);
    }
    Ok(LPartite::new(out))
}

pub fn extvec_to_value(k: &ExtVec) -> Value {
    Value::Array(
        k.0.iter()
            .map(|e| match e {
                ExtNat::Inf => Value::String("inf".into()),
                ExtNat::Finite(n) => json!(n),
            })
            .collect(),
    )
}

pub fn extvec_from_value(v: &Value) -> Result<ExtVec> {
    let arr = as_array(v, "k vector")?;
    let mut out = Vec::with_capacity(arr.len());
    for e in arr {
        match e {
            Value::String(s) if s == "inf" => out.push(ExtNat::Inf),
            other => out.push(ExtNat::Finite(as_usize(other, "k entry")? as u32)),
        }
    }
    Ok(ExtVec(out))
}

pub fn composition_to_value(i: &VectorComposition) -> Value {
    Value::Array(i.cols().iter().map(lpartite_to_value).collect())
}

pub fn composition_from_value(level: usize, v: &Value) -> Result<VectorComposition> {
    let arr = as_array(v, "composition")?;
    let mut cols = Vec::with_capacity(arr.len());
    for c in arr {
        let col = lpartite_from_value(c)?;
        if col.level() != level {
            return Err(Error::parse(format!(
                "composition column has {} coordinates, expected {level}",
                col.level()
            )));
        }
        cols.push(col);
    }
    VectorComposition::new(level, cols).map_err(|e| Error::parse(e.to_string()))
}

fn coef_to_value(c: &Coef) -> Value {
    Value::String(format_coef(c))
}

fn coef_from_value(v: &Value) -> Result<Coef> {
    match v {
        Value::String(s) => parse_coef(s),
        Value::Number(n) => n
            .as_i64()
            .map(crate::coef::from_i64)
            .ok_or_else(|| Error::parse("coefficient must be an integer or \"p/q\" string")),
        _ => Err(Error::parse("coefficient must be an integer or \"p/q\" string")),
    }
}

// ---------------------------------------------------------------------------
// QSym elements and tensors
// ---------------------------------------------------------------------------

pub fn qsym_to_value(a: &QSymElem, basis: QSymBasis) -> Value {
    let terms: Vec<Value> = a
        .to_basis(basis)
        .iter()
        .map(|(i, c)| {
            json!({
                "coef": coef_to_value(c),
                "index": composition_to_value(i),
            })
        })
        .collect();
    json!({
        "level": a.level(),
        "basis": basis.name(),
        "terms": terms,
    })
}

pub fn qsym_from_value(v: &Value) -> Result<QSymElem> {
    let m = obj(v, "QSym element")?;
    if let Some(alg) = m.get("algebra") {
        if alg.as_str() != Some("QSym") {
            return Err(Error::parse(format!("expected a QSym element, got {alg}")));
        }
    }
    let level = as_usize(field(&m, "level")?, "level")?;
    let basis = QSymBasis::parse(
        field(&m, "basis")?
            .as_str()
            .ok_or_else(|| Error::parse("basis must be a string"))?,
    )?;
    let mut terms: Vec<(VectorComposition, Coef)> = Vec::new();
    for t in as_array(field(&m, "terms")?, "terms")? {
        let tm = obj(t, "term")?;
        let c = coef_from_value(field(&tm, "coef")?)?;
        let i = composition_from_value(level, field(&tm, "index")?)?;
        terms.push((i, c));
    }
    QSymElem::from_terms(level, basis, terms)
}

pub fn qsym_tensor_to_value(t: &QSymTensor) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((l, r), c)| {
            json!({
                "coef": coef_to_value(c),
                "left": composition_to_value(l),
                "right": composition_to_value(r),
            })
        })
        .collect();
    json!({
        "level": t.level(),
        "basis": "M",
        "tensor": true,
        "terms": terms,
    })
}

// ---------------------------------------------------------------------------
// NSym elements and tensors
// ---------------------------------------------------------------------------

pub fn nsym_to_value(a: &NSymElem, basis: NSymBasis) -> Value {
    let terms: Vec<Value> = a
        .to_basis(basis)
        .iter()
        .map(|(i, c)| {
            json!({
                "coef": coef_to_value(c),
                "index": composition_to_value(i),
            })
        })
        .collect();
    json!({
        "level": a.level(),
        "algebra": "NSym",
        "basis": basis.name(),
        "terms": terms,
    })
}

pub fn nsym_from_value(v: &Value) -> Result<NSymElem> {
    let m = obj(v, "NSym element")?;
    let level = as_usize(field(&m, "level")?, "level")?;
    let basis = NSymBasis::parse(
        field(&m, "basis")?
            .as_str()
            .ok_or_else(|| Error::parse("basis must be a string"))?,
    )?;
    let mut terms: Vec<(VectorComposition, Coef)> = Vec::new();
    for t in as_array(field(&m, "terms")?, "terms")? {
        let tm = obj(t, "term")?;
        let c = coef_from_value(field(&tm, "coef")?)?;
        let i = composition_from_value(level, field(&tm, "index")?)?;
        terms.push((i, c));
    }
    NSymElem::from_terms(level, basis, terms)
}

pub fn nsym_tensor_to_value(t: &NSymTensor) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((l, r), c)| {
            json!({
                "coef": coef_to_value(c),
                "left": composition_to_value(l),
                "right": composition_to_value(r),
            })
        })
        .collect();
    json!({
        "level": t.level(),
        "algebra": "NSym",
        "basis": "S",
        "tensor": true,
        "terms": terms,
    })
}

// ---------------------------------------------------------------------------
// FQSym elements and tensors
// ---------------------------------------------------------------------------

fn perm_fields(p: &ColoredPermutation) -> (Value, Value) {
    (
        json!(p.sigma()),
        json!(p.colors()),
    )
}

fn perm_from_fields(sigma: &Value, u: &Value) -> Result<ColoredPermutation> {
    let s = as_array(sigma, "sigma")?
        .iter()
        .map(|v| as_usize(v, "sigma entry"))
        .collect::<Result<Vec<usize>>>()?;
    let colors = as_array(u, "u")?
        .iter()
        .map(|v| Ok(as_usize(v, "color entry")? as u8))
        .collect::<Result<Vec<u8>>>()?;
    ColoredPermutation::new(s, colors).map_err(|e| Error::parse(e.to_string()))
}

pub fn fqsym_to_value(a: &FQSymElem) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .iter()
        .map(|(p, c)| {
            let (sigma, u) = perm_fields(p);
            json!({ "coef": coef_to_value(c), "sigma": sigma, "u": u })
        })
        .collect();
    json!({
        "level": a.level(),
        "algebra": "FQSym",
        "terms": terms,
    })
}

pub fn fqsym_from_value(v: &Value) -> Result<FQSymElem> {
    let m = obj(v, "FQSym element")?;
    let level = as_usize(field(&m, "level")?, "level")?;
    let mut out = FQSymElem::zero(level);
    for t in as_array(field(&m, "terms")?, "terms")? {
        let tm = obj(t, "term")?;
        let c = coef_from_value(field(&tm, "coef")?)?;
        let p = perm_from_fields(field(&tm, "sigma")?, field(&tm, "u")?)?;
        if p.colors().iter().any(|&col| (col as usize) >= level) {
            return Err(Error::parse("color out of range for level"));
        }
        out.add_assign_term(p, c);
    }
    Ok(out)
}

pub fn fqsym_tensor_to_value(t: &FQSymTensor) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((l, r), c)| {
            let (ls, lu) = perm_fields(l);
            let (rs, ru) = perm_fields(r);
            json!({
                "coef": coef_to_value(c),
                "left": {"sigma": ls, "u": lu},
                "right": {"sigma": rs, "u": ru},
            })
        })
        .collect();
    json!({
        "level": t.level(),
        "algebra": "FQSym",
        "tensor": true,
        "terms": terms,
    })
}

// ---------------------------------------------------------------------------
// Posets
// ---------------------------------------------------------------------------

pub fn multigraded_poset_from_value(v: &Value) -> Result<MultigradedPoset> {
    let m = obj(v, "poset")?;
    let level = as_usize(field(&m, "level")?, "level")?;
    let names: Vec<String> = as_array(field(&m, "elements")?, "elements")?
        .iter()
        .map(|e| {
            e.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::parse("element names must be strings"))
        })
        .collect::<Result<_>>()?;
    let index_of = |name: &str| -> Result<usize> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::parse(format!("unknown element {name:?}")))
    };
    let mut covers = Vec::new();
    for pair in as_array(field(&m, "covers")?, "covers")? {
        let p = as_array(pair, "cover pair")?;
        if p.len() != 2 {
            return Err(Error::parse("cover pair must have two entries"));
        }
        let a = p[0]
            .as_str()
            .ok_or_else(|| Error::parse("cover entries must be element names"))?;
        let b = p[1]
            .as_str()
            .ok_or_else(|| Error::parse("cover entries must be element names"))?;
        covers.push((index_of(a)?, index_of(b)?));
    }
    let rank_map = obj(field(&m, "rank")?, "rank")?;
    let mut rank = Vec::with_capacity(names.len());
    for name in &names {
        let rv = rank_map
            .get(name)
            .ok_or_else(|| Error::parse(format!("missing rank for {name:?}")))?;
        let r = lpartite_from_value(rv)?;
        if r.level() != level {
            return Err(Error::parse(format!(
                "rank of {name:?} has {} coordinates, expected {level}",
                r.level()
            )));
        }
        rank.push(r);
    }
    MultigradedPoset::new(level, names, &covers, rank)
}

pub fn multigraded_poset_to_value(p: &MultigradedPoset) -> Value {
    let names = p.names();
    let mut covers = Vec::new();
    for y in 0..p.len() {
        for x in 0..p.len() {
            if x == y || !p.le(x, y) {
                continue;
            }
            let is_cover = (0..p.len())
                .all(|z| z == x || z == y || !(p.le(x, z) && p.le(z, y)));
            if is_cover {
                covers.push(json!([names[x], names[y]]));
            }
        }
    }
    let mut rank = Map::new();
    for (i, name) in names.iter().enumerate() {
        rank.insert(name.clone(), lpartite_to_value(p.rank_of(i)));
    }
    json!({
        "level": p.level(),
        "elements": names,
        "covers": covers,
        "rank": Value::Object(rank),
    })
}

pub fn colored_poset_from_value(v: &Value) -> Result<ColoredPoset> {
    let m = obj(v, "colored poset")?;
    let level = as_usize(field(&m, "level")?, "level")?;
    let elems = as_array(field(&m, "elements")?, "elements")?;
    let mut colors = vec![None; elems.len()];
    for e in elems {
        let pair = as_array(e, "element")?;
        if pair.len() != 2 {
            return Err(Error::parse("element must be [value, color]"));
        }
        let a = as_usize(&pair[0], "element value")?;
        let c = as_usize(&pair[1], "element color")? as u8;
        if a == 0 || a > elems.len() {
            return Err(Error::parse(format!(
                "element values must cover 1..={}",
                elems.len()
            )));
        }
        if colors[a - 1].is_some() {
            return Err(Error::parse(format!("duplicate element value {a}")));
        }
        colors[a - 1] = Some(c);
    }
    let colors: Vec<u8> = colors
        .into_iter()
        .collect::<Option<Vec<u8>>>()
        .ok_or_else(|| Error::parse("element values must cover 1..=n"))?;
    let elem_value = |v: &Value| -> Result<usize> {
        match v {
            Value::Array(pair) if pair.len() == 2 => as_usize(&pair[0], "relation endpoint"),
            other => as_usize(other, "relation endpoint"),
        }
    };
    let mut relations = Vec::new();
    for pair in as_array(field(&m, "relations")?, "relations")? {
        let p = as_array(pair, "relation")?;
        if p.len() != 2 {
            return Err(Error::parse("relation must have two endpoints"));
        }
        relations.push((elem_value(&p[0])?, elem_value(&p[1])?));
    }
    ColoredPoset::new(level, colors, &relations)
}

// ---------------------------------------------------------------------------
// Series tables
// ---------------------------------------------------------------------------

pub fn series_to_value(series: &BTreeMap<LPartite, num::BigInt>) -> Value {
    let mut out = Map::new();
    for (n, c) in series {
        out.insert(
            serde_json::to_string(&n.0).expect("vector of naturals"),
            Value::String(c.to_string()),
        );
    }
    Value::Object(out)
}

pub fn flag_table_to_value(rows: &[(VectorComposition, u64)]) -> Value {
    let mut out = Map::new();
    for (i, c) in rows {
        out.insert(
            serde_json::to_string(&composition_to_value(i)).expect("composition"),
            json!(c),
        );
    }
    Value::Object(out)
}

// ---------------------------------------------------------------------------
// Pretty text rendering
// ---------------------------------------------------------------------------

fn pretty_index(i: &VectorComposition) -> String {
    let cols: Vec<String> = i
        .cols()
        .iter()
        .map(|c| {
            let row: Vec<String> = c.0.iter().map(u32::to_string).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", cols.join(","))
}

fn pretty_terms(pieces: Vec<(String, Coef)>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (label, c) in pieces {
        let neg = crate::coef::is_negative(&c);
        let mag = if neg { -c } else { c };
        let mag_str = format_coef(&mag);
        if out.is_empty() {
            if neg {
                out.push_str("-");
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag_str != "1" || label.is_empty() {
            out.push_str(&mag_str);
            if !label.is_empty() {
                out.push('*');
            }
        }
        out.push_str(&label);
    }
    out
}

pub fn pretty_qsym(a: &QSymElem, basis: QSymBasis) -> String {
    pretty_terms(
        a.to_basis(basis)
            .iter()
            .map(|(i, c)| {
                let label = if i.is_empty() {
                    "1".to_string()
                } else {
                    format!("{}{}", basis.name(), pretty_index(i))
                };
                (label, c.clone())
            })
            .collect(),
    )
}

pub fn pretty_nsym(a: &NSymElem, basis: NSymBasis) -> String {
    pretty_terms(
        a.to_basis(basis)
            .iter()
            .map(|(i, c)| {
                let label = if i.is_empty() {
                    "1".to_string()
                } else {
                    format!("{}{}", basis.name(), pretty_index(i))
                };
                (label, c.clone())
            })
            .collect(),
    )
}

pub fn pretty_fqsym(a: &FQSymElem) -> String {
    pretty_terms(
        a.terms()
            .iter()
            .map(|(p, c)| (format!("F{p}"), c.clone()))
            .collect(),
    )
}

pub fn pretty_qsym_tensor(t: &QSymTensor) -> String {
    pretty_terms(
        t.terms()
            .iter()
            .map(|((l, r), c)| {
                let lab = |i: &VectorComposition| {
                    if i.is_empty() {
                        "1".to_string()
                    } else {
                        format!("M{}", pretty_index(i))
                    }
                };
                (format!("{} (x) {}", lab(l), lab(r)), c.clone())
            })
            .collect(),
    )
}

pub fn pretty_nsym_tensor(t: &NSymTensor) -> String {
    pretty_terms(
        t.terms()
            .iter()
            .map(|((l, r), c)| {
                let lab = |i: &VectorComposition| {
                    if i.is_empty() {
                        "1".to_string()
                    } else {
                        format!("S{}", pretty_index(i))
                    }
                };
                (format!("{} (x) {}", lab(l), lab(r)), c.clone())
            })
            .collect(),
    )
}

pub fn pretty_fqsym_tensor(t: &FQSymTensor) -> String {
    pretty_terms(
        t.terms()
            .iter()
            .map(|((l, r), c)| {
                let lab = |p: &ColoredPermutation| {
                    if p.n() == 0 {
                        "1".to_string()
                    } else {
                        format!("F{p}")
                    }
                };
                (format!("{} (x) {}", lab(l), lab(r)), c.clone())
            })
            .collect(),
    )
}
