//! JSON file formats for solutions, Hopf algebras and matrices, and a
//! deterministic pretty printer for reports.
//!
//! Indices inside files are implicit in array positions; names and witness
//! indices shown to users are 1-based.
//!
//! ```json
//! {"field": "Q", "n": 2, "blocks": [[[["1", "0"], ...]]]}
//! {"field": {"Fp": 7}, "n": 2, "kronecker": [[1, 0, 0, 0], ...]}
//! ```
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`); residues as integers.
//! Integers are accepted anywhere a scalar is expected.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfData;
use crate::linalg::Mat;
use crate::tensor::Tensor2;

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rationals),
        Value::Object(o) if o.len() == 1 && o.contains_key("Fp") => {
            let p = o["Fp"].as_u64().ok_or_else(|| {
                Error::BadField(format!("modulus {} is not a positive integer", o["Fp"]))
            })?;
            Field::prime(p)
        }
        other => Err(Error::BadField(format!("unknown field tag {other}"))),
    }
}

/// Parses `Q` or `Fp:<p>` as used on the command line.
pub fn field_from_flag(s: &str) -> Result<Field> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("Fp:")
        .ok_or_else(|| Error::BadField(format!("expected Q or Fp:<p>, got {s:?}")))?;
    let p: u64 = p
        .parse()
        .map_err(|_| Error::BadField(format!("invalid modulus {p:?}")))?;
    Field::prime(p)
}

fn scalar_from_json(f: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => f.parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => f.parse_scalar(&n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))
}

fn scalars(f: Field, v: &Value, len: usize, what: &str) -> Result<Vec<Scalar>> {
    let items = array(v, what)?;
    if items.len() != len {
        return Err(Error::Shape(format!(
            "{what} has {} entries, expected {len}",
            items.len()
        )));
    }
    items.iter().map(|x| scalar_from_json(f, x)).collect()
}

fn matrix_from_json(f: Field, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Mat> {
    let items = array(v, what)?;
    if items.len() != rows {
        return Err(Error::Shape(format!(
            "{what} has {} rows, expected {rows}",
            items.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in items.iter().enumerate() {
        data.extend(scalars(f, row, cols, &format!("{what} row {}", i + 1))?);
    }
    Mat::from_vec(f, rows, cols, data)
}

fn matrix_to_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(Scalar::to_json).collect()))
            .collect(),
    )
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse("top level must be a JSON object".into()))
}

fn field_member(o: &Map<String, Value>, key: &str) -> Result<Value> {
    o.get(key)
        .cloned()
        .ok_or_else(|| Error::Parse(format!("missing \"{key}\"")))
}

fn count(o: &Map<String, Value>, key: &str) -> Result<usize> {
    let v = field_member(o, key)?;
    let k = v
        .as_u64()
        .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a non-negative integer")))?;
    if k == 0 {
        return Err(Error::Shape(format!("\"{key}\" must be positive")));
    }
    Ok(k as usize)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a solution file. The zero tensor is rejected.
pub fn parse_solution(text: &str) -> Result<Tensor2> {
    let doc = parse_json(text)?;
    let o = object(&doc)?;
    let f = field_from_json(&field_member(o, "field")?)?;
    let n = count(o, "n")?;
    let t = match (o.get("blocks"), o.get("kronecker")) {
        (Some(b), None) => {
            let rows = array(b, "blocks")?;
            if rows.len() != n || rows.iter().any(|r| r.as_array().map(Vec::len) != Some(n)) {
                return Err(Error::Shape(format!(
                    "\"blocks\" must be a {n}×{n} array of matrices"
                )));
            }
            let blocks = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    array(row, "blocks row")?
                        .iter()
                        .enumerate()
                        .map(|(j, m)| {
                            matrix_from_json(f, m, n, n, &format!("block ({}, {})", i + 1, j + 1))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Tensor2::from_blocks(&blocks)?
        }
        (None, Some(k)) => Tensor2::new(n, matrix_from_json(f, k, n * n, n * n, "kronecker")?)?,
        _ => {
            return Err(Error::Parse(
                "exactly one of \"blocks\" and \"kronecker\" is required".into(),
            ))
        }
    };
    if t.is_zero() {
        return Err(Error::ZeroTensor);
    }
    Ok(t)
}

/// Canonical form: the block payload.
pub fn solution_to_json(t: &Tensor2) -> Value {
    let blocks: Vec<Value> = t
        .blocks()
        .iter()
        .map(|row| Value::Array(row.iter().map(matrix_to_json).collect()))
        .collect();
    json!({
        "field": field_to_json(t.field()),
        "n": t.n(),
        "blocks": blocks,
    })
}

pub fn serialize_solution(t: &Tensor2) -> String {
    to_pretty(&solution_to_json(t))
}

pub fn parse_hopf(text: &str) -> Result<HopfData> {
    let doc = parse_json(text)?;
    let o = object(&doc)?;
    let f = field_from_json(&field_member(o, "field")?)?;
    let m = count(o, "dim")?;
    let names = match o.get("basis_names") {
        None => (1..=m).map(|i| format!("e{i}")).collect(),
        Some(v) => {
            let items = array(v, "basis_names")?;
            if items.len() != m {
                return Err(Error::Shape(format!(
                    "basis_names has {} entries, expected {m}",
                    items.len()
                )));
            }
            items
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("basis names must be strings".into()))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    let cube = |key: &str| -> Result<Vec<Scalar>> {
        let v = field_member(o, key)?;
        let outer = array(&v, key)?;
        if outer.len() != m {
            return Err(Error::Shape(format!(
                "{key} has {} slices, expected {m}",
                outer.len()
            )));
        }
        let mut out = Vec::with_capacity(m * m * m);
        for (i, slice) in outer.iter().enumerate() {
            out.extend(
                matrix_from_json(f, slice, m, m, &format!("{key}[{}]", i + 1))?.into_entries(),
            );
        }
        Ok(out)
    };
    let mult = cube("mult")?;
    let comult = cube("comult")?;
    let unit = scalars(f, &field_member(o, "unit")?, m, "unit")?;
    let counit = scalars(f, &field_member(o, "counit")?, m, "counit")?;
    let antipode = matrix_from_json(f, &field_member(o, "antipode")?, m, m, "antipode")?;
    HopfData::new(f, names, mult, unit, comult, counit, antipode)
}

pub fn hopf_to_json(h: &HopfData) -> Value {
    let m = h.dim();
    let cube = |c: &[Scalar]| -> Value {
        Value::Array(
            (0..m)
                .map(|i| {
                    Value::Array(
                        (0..m)
                            .map(|j| {
                                Value::Array(
                                    c[(i * m + j) * m..(i * m + j + 1) * m]
                                        .iter()
                                        .map(Scalar::to_json)
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    json!({
        "field": field_to_json(h.field()),
        "dim": m,
        "basis_names": h.basis_names(),
        "mult": cube(h.mult_constants()),
        "unit": h.unit().iter().map(Scalar::to_json).collect::<Vec<_>>(),
        "comult": cube(h.comult_constants()),
        "counit": h.counit().iter().map(Scalar::to_json).collect::<Vec<_>>(),
        "antipode": matrix_to_json(h.antipode()),
    })
}

pub fn serialize_hopf(h: &HopfData) -> String {
    to_pretty(&hopf_to_json(h))
}

/// `{"field": ..., "matrix": [[...], ...]}` for a square matrix.
pub fn parse_matrix(text: &str) -> Result<Mat> {
    let doc = parse_json(text)?;
    let o = object(&doc)?;
    let f = field_from_json(&field_member(o, "field")?)?;
    let v = field_member(o, "matrix")?;
    let rows = array(&v, "matrix")?;
    let n = rows.len();
    if n == 0 {
        return Err(Error::Shape("matrix must be nonempty".into()));
    }
    matrix_from_json(f, &v, n, n, "matrix")
}

pub fn matrix_file_to_json(m: &Mat) -> Value {
    json!({
        "field": field_to_json(m.field()),
        "matrix": matrix_to_json(m),
    })
}

pub fn serialize_matrix(m: &Mat) -> String {
    to_pretty(&matrix_file_to_json(m))
}

pub fn matrix_json(m: &Mat) -> Value {
    matrix_to_json(m)
}

pub fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

/// Two-space indented JSON with arrays of plain values kept on one line.
/// Ends with a newline.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_flat) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Indented `key: value` lines for reading reports in a terminal.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, depth + 1);
                    }
                    Value::Array(items) if !items.iter().all(is_flat) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, depth + 1);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(x))),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(out, x, depth + 1);
                    }
                    _ if !is_flat(x) && !matches!(x, Value::Array(a) if a.iter().all(is_flat)) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(out, x, depth + 1);
                    }
                    _ => out.push_str(&format!("{pad}{}\n", inline(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field::Rationals as Q;
    use crate::gallery;
    use proptest::prelude::*;

    const CYCLIC3: &str = include_str!("../tests/fixtures/cyclic3.json");

    #[test]
    fn cyclic3_fixture_round_trips() {
        let t = parse_solution(CYCLIC3).unwrap();
        assert_eq!(t, gallery::cyclic(Q, 3).unwrap());
        assert_eq!(serialize_solution(&t), CYCLIC3);
    }

    #[test]
    fn kronecker_payload_accepted() {
        let text = r#"{"field": {"Fp": 7}, "n": 1, "kronecker": [[3]]}"#;
        let t = parse_solution(text).unwrap();
        assert_eq!(t.matrix()[(0, 0)], Field::Prime(7).from_i64(3));
        let back = serialize_solution(&t);
        assert!(back.contains("\"blocks\""));
        assert_eq!(parse_solution(&back).unwrap(), t);
    }

    #[test]
    fn bad_inputs() {
        let bad_field = r#"{"field": {"Fp": 4}, "n": 1, "blocks": [[[[1]]]]}"#;
        assert!(matches!(parse_solution(bad_field), Err(Error::BadField(_))));
        let three_blocks = r#"{"field": "Q", "n": 2, "blocks": [[[["1","0"],["0","1"]], [["0","0"],["0","0"]]], [[["0","0"],["0","0"]]]]}"#;
        assert!(matches!(parse_solution(three_blocks), Err(Error::Shape(_))));
        let zero = r#"{"field": "Q", "n": 1, "kronecker": [["0"]]}"#;
        assert_eq!(parse_solution(zero), Err(Error::ZeroTensor));
        assert!(matches!(parse_solution("{"), Err(Error::Parse(_))));
        let both = r#"{"field": "Q", "n": 1, "kronecker": [["1"]], "blocks": [[[["1"]]]]}"#;
        assert!(matches!(parse_solution(both), Err(Error::Parse(_))));
        let non_square = r#"{"field": "Q", "n": 1, "kronecker": [["1", "2"]]}"#;
        assert!(matches!(parse_solution(non_square), Err(Error::Shape(_))));
        let bad_scalar = r#"{"field": "Q", "n": 1, "kronecker": [["1/0"]]}"#;
        assert!(matches!(parse_solution(bad_scalar), Err(Error::Parse(_))));
        assert!(matches!(field_from_flag("Fp:9"), Err(Error::BadField(_))));
        assert_eq!(field_from_flag("Fp:5").unwrap(), Field::Prime(5));
    }

    #[test]
    fn hopf_round_trip() {
        for h in [
            gallery::sweedler_hopf(Q).unwrap(),
            gallery::group_hopf(Field::Prime(3), 3).unwrap(),
        ] {
            let text = serialize_hopf(&h);
            let back = parse_hopf(&text).unwrap();
            assert_eq!(back, h);
            assert_eq!(serialize_hopf(&back), text);
        }
    }

    #[test]
    fn matrix_round_trip() {
        let m = Mat::from_ints(Q, &[[1, -2], [0, 3]]).scale(&Q.parse_scalar("1/2").unwrap());
        let text = serialize_matrix(&m);
        assert!(text.contains("\"-1\""));
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn pretty_printer_layout() {
        let v = json!({"a": [1, 2], "b": {"c": [[1], [2]]}, "d": []});
        assert_eq!(
            to_pretty(&v),
            "{\n  \"a\": [1, 2],\n  \"b\": {\n    \"c\": [\n      [1],\n      [2]\n    ]\n  },\n  \"d\": []\n}\n"
        );
        assert_eq!(
            render_text(&json!({"ok": true, "dims": [1, 2]})),
            "ok: true\ndims: [1, 2]\n"
        );
    }

    proptest! {
        #[test]
        fn random_solutions_round_trip(seed in any::<u64>(), n in 1usize..4, fp in any::<bool>()) {
            let f = if fp { Field::Prime(5) } else { Q };
            let t = gallery::cyclic(f, n).unwrap().conjugate(&gallery::random_conjugator(n, f, seed)).unwrap();
            let text = serialize_solution(&t);
            let back = parse_solution(&text).unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(serialize_solution(&back), text);
        }
    }
}
