//! Edge-list text format.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2   # trailing comments are fine
//! 2 3
//! ```
//!
//! The first content line is the vertex count; each further content line is one
//! edge `u v` with `0 <= u < v < n`.

use super::{Edge, Graph};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(n) = n else {
            if fields.len() != 1 {
                return Err(parse_err(line_no, "expected the vertex count on its own line"));
            }
            let count = fields[0]
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex count `{}`", fields[0])))?;
            n = Some(count);
            continue;
        };
        if fields.len() != 2 {
            return Err(parse_err(line_no, format!("expected `u v`, got `{content}`")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex `{s}`")))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if let Some(w) = [u, v].into_iter().find(|&w| w >= n) {
            return Err(parse_err(line_no, format!("vertex {w} out of range 0..{n}")));
        }
        let key = (u.min(v), u.max(v));
        if let Some(first) = seen.insert(key, line_no) {
            return Err(parse_err(
                line_no,
                format!("edge {}-{} already declared on line {first}", key.0, key.1),
            ));
        }
        if u > v {
            return Err(parse_err(line_no, format!("expected u < v, got `{u} {v}`")));
        }
        edges.push(key);
    }
    let n = n.ok_or_else(|| parse_err(1, "missing vertex count"))?;
    Graph::new(n, edges)
}

/// Canonical text: vertex count, then edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
