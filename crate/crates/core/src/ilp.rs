//! The 0/1 program `max Σ x_e  s.t.  Σ_{e ∈ C} x_e ≤ 3` for every four-cycle
//! `C`, and its export in free-format MPS.
//!
//! Columns are named `X` + edge id and rows `C` + cycle id, both zero-padded
//! to six digits; the objective row is `OBJ`. The file is byte-identical for
//! a given `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{self, BufRead, Write};

use crate::cube::{Dim, EdgeId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpModel {
    pub dim: Dim,
    /// Edge ids of each cycle constraint, indexed by cycle id.
    pub constraints: Vec<[EdgeId; 4]>,
}

pub const CONSTRAINT_RHS: u32 = 3;

impl IlpModel {
    pub fn variable_count(&self) -> usize {
        self.dim.edge_count()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }
}

pub fn build_ilp(n: u32) -> Result<IlpModel> {
    let dim = Dim::new(n)?;
    Ok(IlpModel {
        dim,
        constraints: dim.cycles().map(|c| c.edges).collect(),
    })
}

fn var_name(e: usize) -> String {
    format!("X{e:06}")
}

fn row_name(c: usize) -> String {
    format!("C{c:06}")
}

pub fn write_mps<W: Write>(model: &IlpModel, mut out: W) -> io::Result<()> {
    let n = model.dim.n();
    // rows touched by each column, ascending
    let mut rows_of: Vec<Vec<usize>> = vec![Vec::new(); model.variable_count()];
    for (c, edges) in model.constraints.iter().enumerate() {
        for e in edges {
            rows_of[e.index()].push(c);
        }
    }

    writeln!(out, "NAME Q{n}_C4FREE")?;
    writeln!(out, "OBJSENSE")?;
    writeln!(out, "    MAX")?;
    writeln!(out, "ROWS")?;
    writeln!(out, " N  OBJ")?;
    for c in 0..model.constraint_count() {
        writeln!(out, " L  {}", row_name(c))?;
    }
    writeln!(out, "COLUMNS")?;
    writeln!(out, "    MARKER  'MARKER'  'INTORG'")?;
    for (e, rows) in rows_of.iter().enumerate() {
        let x = var_name(e);
        writeln!(out, "    {x}  OBJ  1")?;
        for &c in rows {
            writeln!(out, "    {x}  {}  1", row_name(c))?;
        }
    }
    writeln!(out, "    MARKER  'MARKER'  'INTEND'")?;
    writeln!(out, "RHS")?;
    for c in 0..model.constraint_count() {
        writeln!(out, "    RHS  {}  {CONSTRAINT_RHS}", row_name(c))?;
    }
    writeln!(out, "BOUNDS")?;
    for e in 0..model.variable_count() {
        writeln!(out, " BV BND  {}", var_name(e))?;
    }
    writeln!(out, "ENDATA")?;
    out.flush()
}

/// What [`read_mps`] recovers from a free-format MPS file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MpsSummary {
    pub name: String,
    pub maximize: bool,
    pub objective_row: Option<String>,
    /// Constraint rows (everything except the `N` row), with their sense.
    pub rows: BTreeMap<String, char>,
    /// Column → (row → coefficient).
    pub columns: BTreeMap<String, BTreeMap<String, f64>>,
    pub integer_columns: BTreeSet<String>,
    pub rhs: BTreeMap<String, f64>,
    pub binary_columns: BTreeSet<String>,
}

fn mps_error(line: usize, msg: &str) -> Error {
    Error::InvalidArgument(format!("MPS line {line}: {msg}"))
}

/// A minimal reader for the free-format subset produced by [`write_mps`].
pub fn read_mps<R: BufRead>(input: R) -> Result<MpsSummary> {
    let mut summary = MpsSummary::default();
    let mut section = String::new();
    let mut integer = false;
    for (k, line) in input.lines().enumerate() {
        let lineno = k + 1;
        let line = line.map_err(|e| mps_error(lineno, &e.to_string()))?;
        if line.trim().is_empty() || line.starts_with('*') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !line.starts_with(' ') {
            section = fields[0].to_string();
            match section.as_str() {
                "NAME" => summary.name = fields.get(1).unwrap_or(&"").to_string(),
                "OBJSENSE" => {
                    if let Some(s) = fields.get(1) {
                        summary.maximize = s.starts_with("MAX");
                    }
                }
                "ENDATA" => break,
                _ => {}
            }
            continue;
        }
        let number = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| mps_error(lineno, "bad number"))
        };
        match section.as_str() {
            "OBJSENSE" => summary.maximize = fields[0].starts_with("MAX"),
            "ROWS" => {
                let [kind, name] = fields[..] else {
                    return Err(mps_error(lineno, "expected row type and name"));
                };
                let kind = kind.chars().next().unwrap_or('?');
                if kind == 'N' {
                    summary.objective_row = Some(name.to_string());
                } else {
                    summary.rows.insert(name.to_string(), kind);
                }
            }
            "COLUMNS" => {
                if fields.get(1) == Some(&"'MARKER'") {
                    integer = fields.get(2) == Some(&"'INTORG'");
                    continue;
                }
                if fields.len() < 3 || fields.len().is_multiple_of(2) {
                    return Err(mps_error(lineno, "malformed column entry"));
                }
                let col = summary.columns.entry(fields[0].to_string()).or_default();
                for pair in fields[1..].chunks(2) {
                    col.insert(pair[0].to_string(), number(pair[1])?);
                }
                if integer {
                    summary.integer_columns.insert(fields[0].to_string());
                }
            }
            "RHS" => {
                if fields.len() < 3 {
                    return Err(mps_error(lineno, "malformed RHS entry"));
                }
                for pair in fields[1..].chunks(2) {
                    if pair.len() == 2 {
                        summary.rhs.insert(pair[0].to_string(), number(pair[1])?);
                    }
                }
            }
            "BOUNDS" => {
                if fields.len() < 3 {
                    return Err(mps_error(lineno, "malformed bound"));
                }
                if fields[0] == "BV" {
                    summary.binary_columns.insert(fields[2].to_string());
                }
            }
            other => return Err(mps_error(lineno, &format!("unsupported section {other}"))),
        }
    }
    Ok(summary)
}

/// Parses a solver's objective value from a file holding a single integer.
pub fn parse_solution_value(text: &str) -> Result<i64> {
    let trimmed = text.trim();
    trimmed.parse::<i64>().map_err(|_| {
        Error::InvalidArgument(format!(
            "expected a single integer objective value, got {trimmed:?}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mps(n: u32) -> String {
        let mut buf = Vec::new();
        write_mps(&build_ilp(n).unwrap(), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn model_sizes() {
        let m6 = build_ilp(6).unwrap();
        assert_eq!((m6.variable_count(), m6.constraint_count()), (192, 240));
        let m4 = build_ilp(4).unwrap();
        assert_eq!((m4.variable_count(), m4.constraint_count()), (32, 24));
        for c in &m6.constraints {
            let mut e = c.to_vec();
            e.sort();
            e.dedup();
            assert_eq!(e.len(), 4);
        }
    }

    #[test]
    fn q2_golden() {
        let expected = "\
NAME Q2_C4FREE
OBJSENSE
    MAX
ROWS
 N  OBJ
 L  C000000
COLUMNS
    MARKER  'MARKER'  'INTORG'
    X000000  OBJ  1
    X000000  C000000  1
    X000001  OBJ  1
    X000001  C000000  1
    X000002  OBJ  1
    X000002  C000000  1
    X000003  OBJ  1
    X000003  C000000  1
    MARKER  'MARKER'  'INTEND'
RHS
    RHS  C000000  3
BOUNDS
 BV BND  X000000
 BV BND  X000001
 BV BND  X000002
 BV BND  X000003
ENDATA
";
        assert_eq!(mps(2), expected);
    }

    #[test]
    fn round_trip_q6() {
        let text = mps(6);
        assert_eq!(text, mps(6));
        let s = read_mps(text.as_bytes()).unwrap();
        assert_eq!(s.name, "Q6_C4FREE");
        assert!(s.maximize);
        assert_eq!(s.objective_row.as_deref(), Some("OBJ"));
        assert_eq!(s.columns.len(), 192);
        assert_eq!(s.rows.len(), 240);
        assert!(s.rows.values().all(|&k| k == 'L'));
        assert_eq!(s.rhs.len(), 240);
        assert!(s.rhs.values().all(|&v| v == 3.0));
        assert_eq!(s.integer_columns.len(), 192);
        assert_eq!(s.binary_columns.len(), 192);
        for col in s.columns.values() {
            assert_eq!(col.get("OBJ"), Some(&1.0));
            assert_eq!(col.len(), 1 + 5);
        }
        // every row has four nonzeros
        let mut per_row: BTreeMap<&str, usize> = BTreeMap::new();
        for col in s.columns.values() {
            for row in col.keys().filter(|r| *r != "OBJ") {
                *per_row.entry(row).or_default() += 1;
            }
        }
        assert!(per_row.values().all(|&k| k == 4));
    }

    #[test]
    fn solution_value() {
        assert_eq!(parse_solution_value(" 132\n").unwrap(), 132);
        assert!(parse_solution_value("132 edges").is_err());
        assert!(parse_solution_value("").is_err());
    }
}
