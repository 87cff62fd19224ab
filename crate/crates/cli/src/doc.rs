//! The output document and its plain-text rendering.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL: &str = "pcd";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// What every command prints: the resolved configuration, the master seed
/// and the results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub config: Value,
    pub results: Value,
}

impl ResultDocument {
    pub fn new(command: &str, seed: u64, config: Value, results: Value) -> Self {
        ResultDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            seed,
            config,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}  (seed {})\n\n", self.tool, self.version, self.command, self.seed);
        out.push_str("config\n");
        render(&self.config, 1, &mut out);
        out.push_str("\nresults\n");
        render(&self.results, 1, &mut out);
        out
    }
}

/// `x` with `digits` significant digits, in fixed notation when that stays
/// readable.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x == 0.0 { "0".into() } else { format!("{x}") };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci.split_once('e').map(|(_, e)| e.parse().unwrap()).unwrap();
    if (-6..=15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// Rounds to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => round_sig(x, 6).to_string(),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Short arrays of scalars, or of arrays of scalars, on one line.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|i| match i {
                    Value::Array(inner) if inner.iter().all(is_flat) => {
                        Some(format!("[{}]", inner.iter().map(scalar).collect::<Vec<_>>().join(", ")))
                    }
                    flat if is_flat(flat) => Some(scalar(flat)),
                    _ => None,
                })
                .collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

/// Arrays of flat objects become aligned tables; everything else is an
/// indented outline.
fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(val)));
                } else if let Some(line) = inline(val) {
                    out.push_str(&format!("{pad}{k}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}\n"));
                    render(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(|i| matches!(i, Value::Object(m) if m.values().all(is_flat))) => {
            let mut cols: Vec<&String> = Vec::new();
            for i in items {
                for k in i.as_object().unwrap().keys() {
                    if !cols.contains(&k) {
                        cols.push(k);
                    }
                }
            }
            let rows: Vec<Vec<String>> = items
                .iter()
                .map(|i| cols.iter().map(|c| i.get(c.as_str()).map(scalar).unwrap_or_default()).collect())
                .collect();
            let width: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(j, c)| rows.iter().map(|r| r[j].len()).chain([c.len()]).max().unwrap())
                .collect();
            let line = |cells: Vec<&str>| {
                let s: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
                format!("{pad}{}\n", s.join("  "))
            };
            out.push_str(&line(cols.iter().map(|c| c.as_str()).collect()));
            for r in &rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
            }
        }
        Value::Array(items) => {
            for (k, i) in items.iter().enumerate() {
                if is_flat(i) {
                    out.push_str(&format!("{pad}- {}\n", scalar(i)));
                } else {
                    out.push_str(&format!("{pad}[{k}]\n"));
                    render(i, depth + 1, out);
                }
            }
        }
        flat => out.push_str(&format!("{pad}{}\n", scalar(flat))),
    }
}
