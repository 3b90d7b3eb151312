//! Human-readable rendering of command output for `--pretty`.

use std::fmt::Write;

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    if is_report(v) {
        report(v, &mut out);
    } else {
        value(v, 0, &mut out);
    }
    out
}

/// Display width, ignoring combining marks such as the bar in `λ̄`.
fn width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

fn is_report(v: &Value) -> bool {
    v.get("entries")
        .and_then(Value::as_array)
        .is_some_and(|es| es.iter().all(|e| e.get("status").is_some()))
}

fn is_matrix(v: &Value) -> bool {
    v.get("n").is_some() && v.get("entries").is_some_and(Value::is_array)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn report(v: &Value, out: &mut String) {
    let entries = v["entries"].as_array().expect("checked by is_report");
    let name_width = entries
        .iter()
        .map(|e| e["name"].as_str().map_or(0, width))
        .max()
        .unwrap_or(0);
    for e in entries {
        let name = e["name"].as_str().unwrap_or("");
        let pad = name_width - width(name);
        let _ = write!(out, "{name}{}  {:<4}  {:>7} cases", " ".repeat(pad), scalar(&e["status"]), scalar(&e["cases"]));
        if let Some(w) = e.get("witness") {
            let _ = write!(out, "  {}", scalar(w));
        }
        out.push('\n');
    }
    if let Some(seed) = v.get("seed") {
        let _ = writeln!(out, "seed {seed}");
    }
    let verdict = if v["passed"].as_bool() == Some(true) { "all pass" } else { "FAILED" };
    let _ = writeln!(out, "{verdict}");
}

fn matrix(v: &Value, indent: usize, out: &mut String) {
    let rows: Vec<Vec<String>> = v["entries"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| r.as_array().into_iter().flatten().map(scalar).collect())
        .collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| width(s)).max().unwrap_or(0))
        .collect();
    for r in &rows {
        out.push_str(&" ".repeat(indent));
        for (j, s) in r.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{}{s}", " ".repeat(widths[j] - width(s)));
        }
        out.push('\n');
    }
}

fn value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(_) if is_matrix(v) => matrix(v, indent, out),
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        value(x, indent + 2, out);
                    }
                    Value::Array(xs) if xs.iter().any(Value::is_object) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for x in xs {
                            value(x, indent + 2, out);
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}
