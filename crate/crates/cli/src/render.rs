use serde_json::Value;

/// Left-aligned plain-text table with two spaces between columns.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// `key  value` lines with the keys padded to a common width.
pub fn fields(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<w$}  {v}").trim_end().to_string() + "\n")
        .collect()
}

pub fn distance_text(d: Option<usize>) -> String {
    d.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

pub fn pred_text(p: Option<usize>) -> String {
    p.map_or_else(|| "nil".to_string(), |x| x.to_string())
}

pub fn distance_json(v: &[Option<usize>]) -> Value {
    Value::Array(
        v.iter()
            .map(|d| d.map_or_else(|| Value::from("inf"), Value::from))
            .collect(),
    )
}

pub fn pred_json(v: &[Option<usize>]) -> Value {
    Value::Array(v.iter().map(|p| p.map_or(Value::Null, Value::from)).collect())
}

pub fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
