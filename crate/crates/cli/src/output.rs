//! Serialization of results: versioned JSON, flattened CSV and plain text.

use liekoszul_core::{Poly, PolyMatrix, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::config::{OutputFormat, RunConfig};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA: &str = "liekoszul/1";

/// Integers that fit in `i64` are JSON numbers; larger ones are strings.
pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// A weight in fundamental and simple-root coordinates. Non-integral
/// simple coordinates are written as `"p/q"` strings.
pub fn weight_json(rs: &RootSystem, w: &Weight) -> Value {
    let simple: Vec<Value> = rs
        .to_simple_root_coords(w)
        .expect("rank checked")
        .iter()
        .map(|q| {
            if q.is_integer() {
                int_json(&q.to_integer())
            } else {
                json!(q.to_string())
            }
        })
        .collect();
    json!({ "fundamental": w.coords(), "simple": simple })
}

pub fn weights_json(rs: &RootSystem, ws: &[Weight]) -> Value {
    Value::Array(ws.iter().map(|w| weight_json(rs, w)).collect())
}

pub fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(int_json).collect())
}

/// `{"index": [...], "rows": [[coeffs, ...], ...]}` with each entry a dense
/// coefficient vector (`[]` for zero).
pub fn matrix_json(rs: &RootSystem, m: &PolyMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(poly_json).collect()))
        .collect();
    json!({ "index": weights_json(rs, m.index()), "rows": rows })
}

/// `(row, col, degree, coeff)` for every nonzero coefficient.
pub fn matrix_rows(name: &str, m: &PolyMatrix) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for (i, r) in m.rows().iter().enumerate() {
        for (j, p) in r.iter().enumerate() {
            for (d, c) in p.coeffs().iter().enumerate() {
                if c.sign() != num_bigint::Sign::NoSign {
                    out.push(vec![
                        name.to_string(),
                        m.index()[i].to_string(),
                        m.index()[j].to_string(),
                        d.to_string(),
                        c.to_string(),
                    ]);
                }
            }
        }
    }
    out
}

pub const MATRIX_HEADER: [&str; 5] = ["matrix", "row", "col", "degree", "coeff"];

/// Aligned text rendering of a polynomial matrix.
pub fn matrix_text(m: &PolyMatrix) -> String {
    let labels: Vec<String> = m.index().iter().map(|w| w.to_string()).collect();
    let cells: Vec<Vec<String>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect();
    let lw = labels.iter().map(|s| s.len()).max().unwrap_or(0);
    let cw: Vec<usize> = (0..labels.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(1))
        .collect();
    let mut s = format!("{:lw$}", "");
    for (j, l) in labels.iter().enumerate() {
        s.push_str(&format!("  {:>w$}", l, w = cw[j]));
    }
    s.push('\n');
    for (i, r) in cells.iter().enumerate() {
        s.push_str(&format!("{:<lw$}", labels[i]));
        for (j, c) in r.iter().enumerate() {
            s.push_str(&format!("  {:>w$}", c, w = cw[j]));
        }
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

/// What a command hands back for rendering.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub result: Value,
    /// `None` when the command verifies nothing.
    pub verified: Option<bool>,
    pub tables: Vec<Table>,
    pub text: String,
}

pub fn config_json(cfg: &RunConfig, resolved: &Value) -> Value {
    json!({
        "command": cfg.command.as_str(),
        "family": cfg.family.map(|f| f.to_string()),
        "rank": cfg.rank,
        "xi": cfg.xi,
        "lambda": cfg.lambda,
        "mu": cfg.mu,
        "format": cfg.format.as_str(),
        "cache_dir": cfg.cache_dir.as_ref().map(|p| p.display().to_string()),
        "search_bound": cfg.search_bound,
        "depth": cfg.depth,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "grow_steps": cfg.grow_steps,
        "max_sym_degree": cfg.max_sym_degree,
        "rank_limit": cfg.rank_limit,
        "resolved": resolved,
    })
}

pub fn render(cfg: &RunConfig, config: &Value, doc: &Document) -> String {
    match cfg.format {
        OutputFormat::Json => {
            let v = json!({
                "schema": SCHEMA,
                "command": cfg.command.as_str(),
                "config": config,
                "result": doc.result,
                "verified": doc.verified,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = format!("# {SCHEMA} {}\n", serde_json::to_string(config).expect("json"));
            if let Some(v) = doc.verified {
                s.push_str(&format!("# verified {v}\n"));
            }
            for t in &doc.tables {
                s.push_str(&format!("# table {}\n", t.name));
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&t.header).expect("csv");
                for r in &t.rows {
                    w.write_record(r).expect("csv");
                }
                s.push_str(&String::from_utf8(w.into_inner().expect("csv")).expect("utf8"));
            }
            s
        }
        OutputFormat::Pretty => {
            let mut s = format!("liekoszul {}", cfg.command.as_str());
            if let Some(obj) = config.get("resolved").and_then(|r| r.as_object()) {
                for (k, v) in obj {
                    s.push_str(&format!("  {k}={}", plain(v)));
                }
            }
            s.push('\n');
            s.push_str(&doc.text);
            if let Some(v) = doc.verified {
                s.push_str(if v { "verified: yes\n" } else { "verified: NO\n" });
            }
            s
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn error_json(kind: &str, message: &str) -> String {
    let v = json!({
        "schema": SCHEMA,
        "error": { "kind": kind, "message": message },
    });
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}
