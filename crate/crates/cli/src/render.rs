//! Plain-text rendering of the JSON reports.

use schubert_core::exact_linalg::QuadExt;
use schubert_core::json::FromJson;
use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("-".into()),
        Value::Object(o)
            if o.len() == 3
                && o.contains_key("a")
                && o.contains_key("b")
                && o.contains_key("d") =>
        {
            QuadExt::from_json(v).ok().map(|q| q.to_string())
        }
        _ => None,
    }
}

fn scalar_row(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(scalar).collect()
}

/// Objects with identical keys and scalar values, as a header row plus rows.
fn flat_records(items: &[Value]) -> Option<Vec<Vec<String>>> {
    let first = items.first()?.as_object()?;
    let keys: Vec<&String> = first.keys().collect();
    let mut rows = vec![keys.iter().map(|k| k.to_string()).collect()];
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        rows.push(
            keys.iter()
                .map(|k| obj.get(*k).and_then(scalar))
                .collect::<Option<Vec<_>>>()?,
        );
    }
    Some(rows)
}

fn table(rows: &[Vec<String>], indent: usize, out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        out.push_str(&format!("{}{}\n", " ".repeat(indent), cells.join("  ")));
    }
}

fn block(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Some(s) = scalar(x) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else if let Some(row) = scalar_row(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", row.join(" ")));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    block(x, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            let rows: Option<Vec<Vec<String>>> = items.iter().map(scalar_row).collect();
            match rows {
                Some(rows) if !rows.is_empty() => table(&rows, indent, out),
                _ if flat_records(items).is_some() => {
                    table(&flat_records(items).expect("checked"), indent, out)
                }
                _ => {
                    for (i, x) in items.iter().enumerate() {
                        if let Some(s) = scalar(x) {
                            out.push_str(&format!("{pad}{s}\n"));
                        } else {
                            out.push_str(&format!("{pad}[{i}]\n"));
                            block(x, indent + 2, out);
                        }
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn plain(v: &Value) -> String {
    if let Some(row) = scalar_row(v) {
        return format!("{}\n", row.join(" "));
    }
    let mut out = String::new();
    block(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn vectors_and_matrices() {
        assert_eq!(plain(&json!(["1", "2", "-4/3"])), "1 2 -4/3\n");
        assert_eq!(
            plain(&json!({"matrix": [["0", "0"], ["1", "10"]]})),
            "matrix:\n  0   0\n  1  10\n"
        );
    }

    #[test]
    fn records_become_tables() {
        let v = json!({"results": [{"t": "0", "ok": true}, {"t": "-1/2", "ok": false}]});
        assert_eq!(
            plain(&v),
            "results:\n     ok     t\n   true     0\n  false  -1/2\n"
        );
    }

    #[test]
    fn quadratic_entries_render_symbolically() {
        let v = json!({"x": {"a": "1", "b": "1", "d": 2}});
        assert_eq!(plain(&v), "x: 1 + sqrt(2)\n");
    }
}
