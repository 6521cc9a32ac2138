use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Keys whose values (numbers, or arrays of them at any depth) are vertex labels.
const VERTEX_KEYS: &[&str] = &[
    "a",
    "x",
    "ground",
    "facets",
    "facet",
    "circuits",
    "subcircuits",
    "vertices",
    "vertex",
    "shedding_vertices",
    "face",
    "gap",
    "support",
];

/// Shift every vertex label by one, leaving counts and parameters alone.
pub fn shift_labels(value: &mut Value) {
    shift(value, false);
}

fn shift(value: &mut Value, labels: bool) {
    match value {
        Value::Number(n) if labels => {
            if let Some(v) = n.as_u64() {
                *value = Value::from(v + 1);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|v| shift(v, labels)),
        Value::Object(map) => {
            for (k, v) in map.iter_mut() {
                shift(v, VERTEX_KEYS.contains(&k.as_str()));
            }
        }
        _ => {}
    }
}

/// JSON lines go to the output file or standard output; the summary table
/// goes to standard output when JSON has its own file, otherwise to
/// standard error so the JSON stream stays clean.
pub struct Output {
    json: Box<dyn Write>,
    table_to_stdout: bool,
    one_indexed: bool,
    quiet: bool,
}

impl Output {
    pub fn new(path: Option<&Path>, one_indexed: bool, quiet: bool) -> io::Result<Self> {
        let json: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Output {
            json,
            table_to_stdout: path.is_some(),
            one_indexed,
            quiet,
        })
    }

    pub fn line(&mut self, item: &impl Serialize) -> io::Result<()> {
        let mut value = serde_json::to_value(item).map_err(io::Error::other)?;
        if self.one_indexed {
            shift_labels(&mut value);
        }
        serde_json::to_writer(&mut self.json, &value).map_err(io::Error::other)?;
        self.json.write_all(b"\n")
    }

    pub fn table(&mut self, headers: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
        if self.quiet {
            return Ok(());
        }
        self.json.flush()?;
        let text = render_table(headers, rows);
        if self.table_to_stdout {
            io::stdout().write_all(text.as_bytes())
        } else {
            io::stderr().write_all(text.as_bytes())
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.json.flush()
    }
}

pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let render = |cells: &mut dyn Iterator<Item = &str>| {
        let mut line = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        line.truncate(line.trim_end().len());
        line.push('\n');
        line
    };
    let mut out = render(&mut headers.iter().copied());
    out.push_str(&render(&mut widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str)));
    for row in rows {
        out.push_str(&render(&mut row.iter().map(String::as_str)));
    }
    out
}

pub fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn only_vertex_keys_shift() {
        let mut v = json!({
            "r": 2, "n": 6, "a": [0],
            "ground": [1, 2], "facets": [[1, 2], []],
            "certificate": {"kind": "vd_tree", "tree": {"node": "shed", "vertex": 3,
                "link": {"node": "simplex", "facet": [4]}, "deletion": {"node": "void"}}},
            "witness": {"k": 3, "value": -1, "vertex": 0}
        });
        shift_labels(&mut v);
        assert_eq!(
            v,
            json!({
                "r": 2, "n": 6, "a": [1],
                "ground": [2, 3], "facets": [[2, 3], []],
                "certificate": {"kind": "vd_tree", "tree": {"node": "shed", "vertex": 4,
                    "link": {"node": "simplex", "facet": [5]}, "deletion": {"node": "void"}}},
                "witness": {"k": 3, "value": -1, "vertex": 1}
            })
        );
    }

    #[test]
    fn table_layout() {
        let t = render_table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\n---  --\nxyz  1\n");
    }
}
