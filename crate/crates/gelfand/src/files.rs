//! Structured input files (JSON) and the canonical algebra serialization.
//!
//! Schemas:
//!
//! * `algebra/v1`: `{ "schema", "field", "basis", "products", "unit" }`
//!   with `field` one of `{"kind": "Q"}`, `{"kind": "Fp", "p": 5}`,
//!   `{"kind": "Qp", "p": 3, "precision": 8}`; `basis` a list of names;
//!   `products` a sparse list of triples `[i, j, [coords...]]` (absent
//!   pairs multiply to zero, order inside a pair is irrelevant); `unit`
//!   the unit's coordinates. Elements are written in the field's textual
//!   form (`"2/3"`, `"4"`, `"2*3^-1+O(3^5)"`).
//! * `space/v1`: `{ "schema", "points": [labels...] }`.
//! * `tower/v1`: `{ "schema", "level_sizes": [n0, n1, ...],
//!   "bonding": [[...], ...] }` with numeric point labels `0..n-1`.
//! * `oracle/v1`: `{ "schema", "kind": "data", "values": [...],
//!   "modulus": [[k, m], ...] }` or `{ "kind": "identity" }` or
//!   `{ "kind": "polynomial", "coefficients": [...] }`.
//! * `expression/v1`: `{ "schema", "terms": [{"coefficient": c,
//!   "element": [coords...]}, ...] }`.
//!
//! Parse failures carry a `location` path into the document. The
//! canonical serialization sorts products by `(i, j)` and keys
//! alphabetically, so identical algebras serialize byte-identically.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{AlgElement, Algebra};
use crate::duality::FiniteSpace;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use crate::profinite::{ContFnOracle, ProfiniteTower};

fn schema_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::SchemaError { location: location.into(), message: message.into() }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::IoError {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse_json(text: &str, location: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema_err(location, format!("invalid JSON: {e}")))
}

fn as_object<'a>(v: &'a Value, location: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema_err(location, "expected an object"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, location: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema_err(location, format!("missing field {key:?}")))
}

fn as_str<'a>(v: &'a Value, location: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema_err(location, "expected a string"))
}

fn as_array<'a>(v: &'a Value, location: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema_err(location, "expected an array"))
}

fn as_usize(v: &Value, location: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| schema_err(location, "expected a nonnegative integer"))
}

fn expect_schema(obj: &Map<String, Value>, expected: &str, location: &str) -> Result<()> {
    let tag = as_str(get(obj, "schema", location)?, &format!("{location}.schema"))?;
    if tag != expected {
        return Err(schema_err(
            format!("{location}.schema"),
            format!("expected {expected:?}, got {tag:?}"),
        ));
    }
    Ok(())
}

/// Parses `{"kind": "Q" | "Fp" | "Qp", "p": int?, "precision": int?}`.
pub fn parse_field_descriptor(v: &Value, location: &str) -> Result<FieldDescriptor> {
    let obj = as_object(v, location)?;
    let kind = as_str(get(obj, "kind", location)?, &format!("{location}.kind"))?;
    match kind {
        "Q" => Ok(FieldDescriptor::rational()),
        "Fp" => {
            let p = get(obj, "p", location)?
                .as_u64()
                .ok_or_else(|| schema_err(format!("{location}.p"), "expected a prime"))?;
            FieldDescriptor::prime(p)
        }
        "Qp" => {
            let p = get(obj, "p", location)?
                .as_u64()
                .ok_or_else(|| schema_err(format!("{location}.p"), "expected a prime"))?;
            let precision = get(obj, "precision", location)?
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| {
                    schema_err(format!("{location}.precision"), "expected a positive integer")
                })?;
            FieldDescriptor::padic(p, precision)
        }
        other => Err(schema_err(
            format!("{location}.kind"),
            format!("unknown field kind {other:?} (expected Q, Fp, or Qp)"),
        )),
    }
}

pub fn field_descriptor_json(f: &FieldDescriptor) -> Value {
    match f {
        FieldDescriptor::Rational => json!({"kind": "Q"}),
        FieldDescriptor::Prime { p } => json!({"kind": "Fp", "p": p}),
        FieldDescriptor::Padic { p, precision } => {
            json!({"kind": "Qp", "p": p, "precision": precision})
        }
    }
}

/// Short field syntax for command-line flags: `q`, `f<p>`, or
/// `q<p>:<precision>` (e.g. `f5`, `q3:8`).
pub fn parse_field_flag(text: &str) -> Result<FieldDescriptor> {
    let s = text.trim().to_ascii_lowercase();
    let bad = || schema_err("--field", format!("unrecognized field {text:?} (use q, f<p>, or q<p>:<prec>)"));
    if s == "q" {
        return Ok(FieldDescriptor::rational());
    }
    if let Some(rest) = s.strip_prefix('f') {
        let p: u64 = rest.parse().map_err(|_| bad())?;
        return FieldDescriptor::prime(p);
    }
    if let Some(rest) = s.strip_prefix('q') {
        let (p, prec) = rest.split_once(':').ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let prec: u32 = prec.parse().map_err(|_| bad())?;
        return FieldDescriptor::padic(p, prec);
    }
    Err(bad())
}

fn parse_coords(
    field: &FieldDescriptor,
    v: &Value,
    dim: usize,
    location: &str,
) -> Result<AlgElement> {
    let arr = as_array(v, location)?;
    if arr.len() != dim {
        return Err(schema_err(
            location,
            format!("expected {dim} coordinates, got {}", arr.len()),
        ));
    }
    arr.iter()
        .enumerate()
        .map(|(k, c)| {
            let loc = format!("{location}[{k}]");
            field.parse_element(as_str(c, &loc)?)
        })
        .collect()
}

pub fn parse_algebra_str(text: &str, origin: &str) -> Result<Algebra> {
    let root = parse_json(text, origin)?;
    let obj = as_object(&root, origin)?;
    expect_schema(obj, "algebra/v1", origin)?;
    let field = parse_field_descriptor(get(obj, "field", origin)?, &format!("{origin}.field"))?;

    let basis_loc = format!("{origin}.basis");
    let basis = as_array(get(obj, "basis", origin)?, &basis_loc)?;
    let mut names = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        names.push(as_str(b, &format!("{basis_loc}[{i}]"))?.to_string());
    }
    let dim = names.len();
    if dim == 0 {
        return Err(schema_err(basis_loc, "at least one basis element is required"));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(schema_err(
                format!("{basis_loc}[{i}]"),
                format!("duplicate basis name {n:?}"),
            ));
        }
    }

    let prod_loc = format!("{origin}.products");
    let products = as_array(get(obj, "products", origin)?, &prod_loc)?;
    let mut table = vec![field.zero(); dim * dim * dim];
    let mut seen = vec![false; dim * dim];
    for (t, triple) in products.iter().enumerate() {
        let loc = format!("{prod_loc}[{t}]");
        let arr = as_array(triple, &loc)?;
        if arr.len() != 3 {
            return Err(schema_err(loc, "expected a triple [i, j, coords]"));
        }
        let i = as_usize(&arr[0], &format!("{loc}[0]"))?;
        let j = as_usize(&arr[1], &format!("{loc}[1]"))?;
        if i >= dim || j >= dim {
            return Err(schema_err(loc, format!("indices ({i}, {j}) out of range 0..{dim}")));
        }
        let (lo, hi) = (i.min(j), i.max(j));
        if seen[lo * dim + hi] {
            return Err(schema_err(loc, format!("duplicate product entry for ({lo}, {hi})")));
        }
        seen[lo * dim + hi] = true;
        let coords = parse_coords(&field, &arr[2], dim, &format!("{loc}[2]"))?;
        for (k, c) in coords.iter().enumerate() {
            table[(i * dim + j) * dim + k] = c.clone();
            table[(j * dim + i) * dim + k] = c.clone();
        }
    }

    let unit = parse_coords(&field, get(obj, "unit", origin)?, dim, &format!("{origin}.unit"))?;
    Algebra::new(field, names, table, unit)
}

pub fn parse_algebra_file(path: &Path) -> Result<Algebra> {
    parse_algebra_str(&read_to_string(path)?, "algebra")
}

/// Canonical serialization: products sorted by `(i, j)` with `i <= j`,
/// zero products omitted, keys alphabetical. Re-parsing yields an equal
/// algebra; identical algebras serialize byte-identically.
pub fn serialize_algebra(a: &Algebra) -> String {
    let dim = a.dim();
    let mut products = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            let row = a.table_row(i, j);
            if row.iter().all(|c| matches!(c.is_zero(), Ok(true))) {
                continue;
            }
            let coords: Vec<Value> =
                row.iter().map(|c| Value::String(c.to_string())).collect();
            products.push(json!([i, j, coords]));
        }
    }
    let unit: Vec<Value> = a.one().iter().map(|c| Value::String(c.to_string())).collect();
    let doc = json!({
        "schema": "algebra/v1",
        "field": field_descriptor_json(a.field()),
        "basis": a.basis_names(),
        "products": products,
        "unit": unit,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable document");
    out.push('\n');
    out
}

pub fn parse_space_str(text: &str, origin: &str) -> Result<FiniteSpace> {
    let root = parse_json(text, origin)?;
    let obj = as_object(&root, origin)?;
    expect_schema(obj, "space/v1", origin)?;
    let loc = format!("{origin}.points");
    let points = as_array(get(obj, "points", origin)?, &loc)?;
    let mut labels = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        labels.push(as_str(p, &format!("{loc}[{i}]"))?.to_string());
    }
    FiniteSpace::new(labels)
}

pub fn parse_space_file(path: &Path) -> Result<FiniteSpace> {
    parse_space_str(&read_to_string(path)?, "space")
}

pub fn parse_tower_str(text: &str, origin: &str) -> Result<ProfiniteTower> {
    let root = parse_json(text, origin)?;
    let obj = as_object(&root, origin)?;
    expect_schema(obj, "tower/v1", origin)?;

    let sizes_loc = format!("{origin}.level_sizes");
    let sizes = as_array(get(obj, "level_sizes", origin)?, &sizes_loc)?;
    let mut levels = Vec::with_capacity(sizes.len());
    for (k, s) in sizes.iter().enumerate() {
        let loc = format!("{sizes_loc}[{k}]");
        let n = as_usize(s, &loc)?;
        if n == 0 {
            return Err(schema_err(loc, "levels must be nonempty"));
        }
        levels.push(FiniteSpace::new((0..n).map(|j| j.to_string()).collect())?);
    }

    let bond_loc = format!("{origin}.bonding");
    let bonding_arr = as_array(get(obj, "bonding", origin)?, &bond_loc)?;
    let mut bonding = Vec::with_capacity(bonding_arr.len());
    for (k, row) in bonding_arr.iter().enumerate() {
        let loc = format!("{bond_loc}[{k}]");
        let arr = as_array(row, &loc)?;
        let mut map = Vec::with_capacity(arr.len());
        for (x, v) in arr.iter().enumerate() {
            map.push(as_usize(v, &format!("{loc}[{x}]"))?);
        }
        bonding.push(map);
    }
    ProfiniteTower::new(levels, bonding)
}

pub fn parse_tower_file(path: &Path) -> Result<ProfiniteTower> {
    parse_tower_str(&read_to_string(path)?, "tower")
}

pub fn parse_oracle_str(
    text: &str,
    origin: &str,
    tower: &ProfiniteTower,
    field: &FieldDescriptor,
) -> Result<ContFnOracle> {
    let root = parse_json(text, origin)?;
    let obj = as_object(&root, origin)?;
    expect_schema(obj, "oracle/v1", origin)?;
    let kind = as_str(get(obj, "kind", origin)?, &format!("{origin}.kind"))?;
    match kind {
        "identity" => ContFnOracle::identity(tower, field),
        "polynomial" => {
            let loc = format!("{origin}.coefficients");
            let arr = as_array(get(obj, "coefficients", origin)?, &loc)?;
            let mut coeffs = Vec::with_capacity(arr.len());
            for (i, c) in arr.iter().enumerate() {
                let cl = format!("{loc}[{i}]");
                coeffs.push(field.parse_element(as_str(c, &cl)?)?);
            }
            ContFnOracle::polynomial(tower, field, &coeffs)
        }
        "data" => {
            let vloc = format!("{origin}.values");
            let arr = as_array(get(obj, "values", origin)?, &vloc)?;
            let mut values = Vec::with_capacity(arr.len());
            for (i, c) in arr.iter().enumerate() {
                let cl = format!("{vloc}[{i}]");
                values.push(field.parse_element(as_str(c, &cl)?)?);
            }
            let mloc = format!("{origin}.modulus");
            let marr = as_array(get(obj, "modulus", origin)?, &mloc)?;
            let mut modulus = Vec::with_capacity(marr.len());
            for (i, pair) in marr.iter().enumerate() {
                let pl = format!("{mloc}[{i}]");
                let pv = as_array(pair, &pl)?;
                if pv.len() != 2 {
                    return Err(schema_err(pl, "expected a pair [k, m]"));
                }
                let k = pv[0]
                    .as_i64()
                    .ok_or_else(|| schema_err(format!("{pl}[0]"), "expected an integer"))?;
                let m = as_usize(&pv[1], &format!("{pl}[1]"))?;
                modulus.push((k, m));
            }
            ContFnOracle::from_data(tower, values, modulus)
        }
        other => Err(schema_err(
            format!("{origin}.kind"),
            format!("unknown oracle kind {other:?} (expected data, identity, or polynomial)"),
        )),
    }
}

pub fn parse_oracle_file(
    path: &Path,
    tower: &ProfiniteTower,
    field: &FieldDescriptor,
) -> Result<ContFnOracle> {
    parse_oracle_str(&read_to_string(path)?, "oracle", tower, field)
}

pub fn parse_expression_str(
    text: &str,
    origin: &str,
    algebra: &Algebra,
) -> Result<Vec<(FieldElement, AlgElement)>> {
    let root = parse_json(text, origin)?;
    let obj = as_object(&root, origin)?;
    expect_schema(obj, "expression/v1", origin)?;
    let loc = format!("{origin}.terms");
    let arr = as_array(get(obj, "terms", origin)?, &loc)?;
    let mut terms = Vec::with_capacity(arr.len());
    for (i, term) in arr.iter().enumerate() {
        let tl = format!("{loc}[{i}]");
        let tobj = as_object(term, &tl)?;
        let c = algebra
            .field()
            .parse_element(as_str(get(tobj, "coefficient", &tl)?, &format!("{tl}.coefficient"))?)?;
        let e = parse_coords(
            algebra.field(),
            get(tobj, "element", &tl)?,
            algebra.dim(),
            &format!("{tl}.element"),
        )?;
        terms.push((c, e));
    }
    Ok(terms)
}

pub fn parse_expression_file(
    path: &Path,
    algebra: &Algebra,
) -> Result<Vec<(FieldElement, AlgElement)>> {
    parse_expression_str(&read_to_string(path)?, "expression", algebra)
}

/// Comma-separated coordinates for command-line element input.
pub fn parse_element_csv(field: &FieldDescriptor, dim: usize, text: &str) -> Result<AlgElement> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != dim {
        return Err(schema_err(
            "--element",
            format!("expected {dim} comma-separated coordinates, got {}", parts.len()),
        ));
    }
    parts.iter().map(|s| field.parse_element(s)).collect()
}
