//! Serialization helpers: exact values as "p/q" strings, floats with 17
//! significant digits, polynomials with their variable.

use ratext::{Poly, Rational, RationalFn};
use serde_json::{json, Map, Value};

pub fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn f(x: f64) -> Value {
    Value::String(fmt_f64(x))
}

pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn poly(p: &Poly, var: &str) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(q).collect::<Vec<_>>(),
        "variable": var,
        "text": p.display_in(var).to_string(),
    })
}

pub fn ratfn(r: &RationalFn, var: &str) -> Value {
    json!({
        "num": poly(r.num(), var),
        "den": poly(r.den(), var),
        "variable": var,
    })
}

/// One command's output: a JSON document, flat rows for CSV, and the
/// certification verdict.
pub struct Report {
    pub json: Value,
    pub rows: Vec<Vec<(String, String)>>,
    pub pass: bool,
}

impl Report {
    pub fn new(json: Value, pass: bool) -> Self {
        let rows = flatten_rows(&json);
        Report { json, rows, pass }
    }

    pub fn with_rows(json: Value, rows: Vec<Vec<(String, String)>>, pass: bool) -> Self {
        Report { json, rows, pass }
    }

    pub fn render(&self, csv: bool) -> String {
        if csv {
            render_csv(&self.rows)
        } else {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable report");
            s.push('\n');
            s
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten_into(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            out.push((prefix.to_string(), a.iter().map(scalar).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten_into(&format!("{prefix}.{i}"), x, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

/// A top-level array of objects becomes one row per element; anything else
/// becomes a single row.
pub fn flatten_rows(v: &Value) -> Vec<Vec<(String, String)>> {
    match v {
        Value::Array(a) => a
            .iter()
            .map(|x| {
                let mut row = Vec::new();
                flatten_into("", x, &mut row);
                row
            })
            .collect(),
        _ => {
            let mut row = Vec::new();
            flatten_into("", v, &mut row);
            vec![row]
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_csv(rows: &[Vec<(String, String)>]) -> String {
    let mut header: Vec<String> = Vec::new();
    for row in rows {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut out = header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        let m: Map<String, Value> = row.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let line = header
            .iter()
            .map(|h| csv_field(m.get(h).and_then(|v| v.as_str()).unwrap_or("")))
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}
