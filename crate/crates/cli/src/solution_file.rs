//! JSONL edge lists: one `[u, v]` pair per line, `u < v`, sorted by edge id.
//! The dimension is not stored in the file.

use std::fs;
use std::io::Write;
use std::path::Path;

use c4free::{Dim, EdgeSet};

use crate::error::CliError;

pub fn parse_solution(text: &str, dim: Dim, origin: &str) -> Result<EdgeSet, CliError> {
    let mut edges = EdgeSet::empty(dim);
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let invalid = |msg: String| CliError::Validation(format!("{origin}:{lineno}: {msg}"));
        let [u, v]: [u64; 2] = serde_json::from_str(line).map_err(|e| CliError::Parse {
            origin: origin.to_string(),
            line: lineno,
            message: e.to_string(),
        })?;
        let u = dim.check_vertex(u).map_err(|e| invalid(e.to_string()))?;
        let v = dim.check_vertex(v).map_err(|e| invalid(e.to_string()))?;
        if u >= v {
            return Err(invalid(format!("[{u}, {v}] must be listed with u < v")));
        }
        let e = dim.edge_id(u, v).map_err(|e| invalid(e.to_string()))?;
        if !edges.insert(e) {
            return Err(invalid(format!("duplicate edge [{u}, {v}]")));
        }
    }
    Ok(edges)
}

pub fn read_solution(path: &Path, dim: Dim) -> Result<EdgeSet, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_solution(&text, dim, &path.display().to_string())
}

pub fn format_solution(edges: &EdgeSet) -> String {
    let dim = edges.dim();
    let mut out = String::with_capacity(edges.len() * 12);
    for e in edges.iter() {
        let (u, v) = dim.endpoints(e);
        out.push_str(&format!("[{u}, {v}]\n"));
    }
    out
}

pub fn write_solution(edges: &EdgeSet, path: &Path) -> Result<(), CliError> {
    let mut f = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(format_solution(edges).as_bytes())
        .map_err(|e| CliError::io(path, e))
}
