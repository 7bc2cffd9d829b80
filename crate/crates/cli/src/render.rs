//! Plain-text view of a JSON report: one `path: value` line per leaf.
//! Object-free arrays stay on one line while short; records carrying `name` and
//! `passed` become `PASS name` / `FAIL name` headings.

use std::fmt::Write;

use serde_json::Value;

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    walk(&mut out, "", report, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let flat = items.iter().all(|i| !i.is_array() && !i.is_object());
            let line = serde_json::to_string(v).expect("json values serialize");
            (!has_object(v) && (flat || line.len() <= INLINE_WIDTH)).then_some(line)
        }
        Value::Object(map) => map.is_empty().then(|| "{}".into()),
    }
}

const INLINE_WIDTH: usize = 72;

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn walk(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        writeln!(out, "{pad}{key}: {s}").unwrap();
        return;
    }
    if let (Some(name), Some(passed)) = (
        v.get("name").and_then(Value::as_str),
        v.get("passed").and_then(Value::as_bool),
    ) {
        let id = v.get("id").map(|i| format!("{i}. ")).unwrap_or_default();
        writeln!(
            out,
            "{pad}{} {id}{name}",
            if passed { "PASS" } else { "FAIL" }
        )
        .unwrap();
        for (k, child) in v.as_object().into_iter().flatten() {
            if !matches!(k.as_str(), "id" | "name" | "passed") {
                walk_children(out, child, depth + 1);
            }
        }
        return;
    }
    let depth = if key.is_empty() {
        depth
    } else {
        writeln!(out, "{pad}{key}:").unwrap();
        depth + 1
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                walk(out, k, child, depth);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                walk(out, &i.to_string(), child, depth);
            }
        }
        _ => unreachable!("scalars are handled above"),
    }
}

fn walk_children(out: &mut String, v: &Value, depth: usize) {
    match v {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, c)| walk(out, &i.to_string(), c, depth)),
        other => walk(out, "", other, depth),
    }
}
