//! Plain-text rendering of a JSON report. Every number in the JSON appears verbatim.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flat_row(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(scalar).collect()
}

fn table(rows: &[Vec<String>], indent: usize, out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:>w$}", w = widths[c])).collect();
        out.push_str(&format!("{:indent$}{}\n", "", cells.join(" ")));
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if let Some(s) = scalar(val) {
                    out.push_str(&format!("{:indent$}{k}: {s}\n", ""));
                } else if let Some(row) = flat_row(val) {
                    out.push_str(&format!("{:indent$}{k}: [{}]\n", "", row.join(", ")));
                } else {
                    out.push_str(&format!("{:indent$}{k}:\n", ""));
                    render(val, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            let rows: Option<Vec<Vec<String>>> = items.iter().map(flat_row).collect();
            match rows {
                Some(rows) if !rows.is_empty() => table(&rows, indent, out),
                _ => {
                    for (i, item) in items.iter().enumerate() {
                        if let Some(s) = scalar(item) {
                            out.push_str(&format!("{:indent$}- {s}\n", ""));
                        } else {
                            out.push_str(&format!("{:indent$}[{i}]\n", ""));
                            render(item, indent + 2, out);
                        }
                    }
                }
            }
        }
        other => out.push_str(&format!("{:indent$}{}\n", "", scalar(other).unwrap_or_default())),
    }
}

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn matrices_become_aligned_rows() {
        let t = to_text(&json!({ "matrix": [[1, 10], [0, 1]], "determinant": "1" }));
        assert_eq!(t, "determinant: 1\nmatrix:\n  1 10\n  0  1\n");
    }

    #[test]
    fn nested_objects_indent() {
        let t = to_text(&json!({ "a": { "b": [1, null] } }));
        assert_eq!(t, "a:\n  b: [1, -]\n");
    }
}
