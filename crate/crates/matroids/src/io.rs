//! Plain-text matroid files.
//!
//! ```text
//! # comments run to end of line
//! matroid <name>
//! elements <n>
//! type bases|linear|graphic|uniform
//! ```
//!
//! followed by the body for the declared type:
//! * `bases`: `rank <r>` then one comma-separated basis per line (rank 0 has
//!   no basis lines; the empty set is the unique basis),
//! * `linear`: `field <p>` and `rows <r>`, then `r` lines of `n` residues,
//! * `graphic`: `vertices <v>`, then one `edge <u> <w>` line per element,
//! * `uniform`: `rank <r>`.
//!
//! `serialize_matroid` emits canonical text that reparses to the same
//! labeled matroid under the same representation.

use crate::error::{input_err, Result};
use crate::matroid::{Matroid, Rep};
use crate::set::ElementSet;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone)]
pub struct NamedMatroid {
    pub name: String,
    pub matroid: Matroid,
}

/// Lines with comments stripped, paired with 1-based source line numbers.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let stripped = raw.split('#').next().unwrap_or("").trim();
                if stripped.is_empty() {
                    None
                } else {
                    Some((i + 1, stripped))
                }
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self, expecting: &str) -> Result<(usize, &'a str)> {
        match self.items.get(self.pos) {
            Some(&item) => {
                self.pos += 1;
                Ok(item)
            }
            None => input_err(format!("unexpected end of file, expected {expecting}")),
        }
    }

    /// Consumes a `<keyword> <value>` line and returns the value text.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, &'a str)> {
        let (line_no, line) = self.next(&format!("`{keyword} ...`"))?;
        match line.split_once(char::is_whitespace) {
            Some((head, rest)) if head == keyword => Ok((line_no, rest.trim())),
            _ => input_err(format!("line {line_no}: expected `{keyword} ...`, found {line:?}")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.items.get(self.pos) {
            None => Ok(()),
            Some((line_no, line)) => {
                input_err(format!("line {line_no}: unexpected trailing content {line:?}"))
            }
        }
    }
}

fn parse_number(line_no: usize, what: &str, text: &str) -> Result<usize> {
    text.parse::<usize>()
        .map_err(|_| crate::error::Error::Input(format!("line {line_no}: invalid {what} {text:?}")))
}

pub fn parse_matroid(text: &str) -> Result<NamedMatroid> {
    let mut lines = Lines::new(text);
    let (name_line, name) = lines.keyword("matroid")?;
    if name.is_empty() {
        return input_err(format!("line {name_line}: empty matroid name"));
    }
    let (n_line, n_text) = lines.keyword("elements")?;
    let n = parse_number(n_line, "element count", n_text)?;
    let (type_line, type_name) = lines.keyword("type")?;

    let matroid = match type_name {
        "bases" => parse_bases_body(&mut lines, n)?,
        "linear" => parse_linear_body(&mut lines, n)?,
        "graphic" => parse_graphic_body(&mut lines, n)?,
        "uniform" => {
            let (r_line, r_text) = lines.keyword("rank")?;
            let r = parse_number(r_line, "rank", r_text)?;
            Matroid::uniform(r, n)?
        }
        other => {
            return input_err(format!(
                "line {type_line}: unknown type {other:?}; expected bases, linear, graphic, or uniform"
            ))
        }
    };
    lines.finish()?;
    Ok(NamedMatroid { name: name.to_string(), matroid })
}

fn parse_bases_body(lines: &mut Lines, n: usize) -> Result<Matroid> {
    let (r_line, r_text) = lines.keyword("rank")?;
    let r = parse_number(r_line, "rank", r_text)?;
    if r == 0 {
        return Matroid::from_bases(n, vec![ElementSet::from_indices(n, &[])?]);
    }
    let mut bases = Vec::new();
    while lines.pos < lines.items.len() {
        let (line_no, line) = lines.next("a basis line")?;
        let mut members = Vec::new();
        for part in line.split(',') {
            members.push(parse_number(line_no, "element index", part.trim())?);
        }
        if members.len() != r {
            return input_err(format!(
                "line {line_no}: basis has {} elements, rank is {r}",
                members.len()
            ));
        }
        bases.push(
            ElementSet::from_indices(n, &members)
                .map_err(|e| crate::error::Error::Input(format!("line {line_no}: {e}")))?,
        );
    }
    if bases.is_empty() {
        return input_err(format!("rank {r} requires at least one basis line"));
    }
    Matroid::from_bases(n, bases)
}

fn parse_linear_body(lines: &mut Lines, n: usize) -> Result<Matroid> {
    let (p_line, p_text) = lines.keyword("field")?;
    let p = parse_number(p_line, "field order", p_text)?;
    let (rows_line, rows_text) = lines.keyword("rows")?;
    let row_count = parse_number(rows_line, "row count", rows_text)?;
    let mut rows = Vec::with_capacity(row_count);
    // A row of a 0-column matrix is a blank line, which the lexer drops, so
    // rows of the empty matroid are implicit.
    if n > 0 {
        for _ in 0..row_count {
            let (line_no, line) = lines.next("a matrix row")?;
            let mut row = Vec::with_capacity(n);
            for part in line.split_whitespace() {
                let v = parse_number(line_no, "matrix entry", part)?;
                if v >= 256 {
                    return input_err(format!("line {line_no}: matrix entry {v} out of range"));
                }
                row.push(v as u8);
            }
            if row.len() != n {
                return input_err(format!(
                    "line {line_no}: row has {} entries, expected {n}",
                    row.len()
                ));
            }
            rows.push(row);
        }
    } else {
        rows.resize(row_count, Vec::new());
    }
    let p = u8::try_from(p)
        .map_err(|_| crate::error::Error::Input(format!("field order {p} out of range")))?;
    Matroid::from_linear(p, rows, n)
}

fn parse_graphic_body(lines: &mut Lines, n: usize) -> Result<Matroid> {
    let (v_line, v_text) = lines.keyword("vertices")?;
    let vertices = parse_number(v_line, "vertex count", v_text)?;
    let mut edges = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, value) = lines.keyword("edge")?;
        let mut ends = value.split_whitespace();
        let (u, w) = match (ends.next(), ends.next(), ends.next()) {
            (Some(u), Some(w), None) => (
                parse_number(line_no, "vertex", u)?,
                parse_number(line_no, "vertex", w)?,
            ),
            _ => {
                return input_err(format!("line {line_no}: expected `edge <u> <v>`"));
            }
        };
        edges.push((u, w));
    }
    Matroid::from_graph(vertices, edges)
}

pub fn serialize_matroid(name: &str, m: &Matroid) -> String {
    let n = m.ground_size();
    let mut out = String::new();
    writeln!(out, "matroid {name}").unwrap();
    writeln!(out, "elements {n}").unwrap();
    match m.rep() {
        Rep::Bases { rank, bases } => {
            writeln!(out, "type bases").unwrap();
            writeln!(out, "rank {rank}").unwrap();
            if *rank > 0 {
                for &mask in bases {
                    let members: Vec<String> = crate::set::BitIter(mask).map(|e| e.to_string()).collect();
                    writeln!(out, "{}", members.join(",")).unwrap();
                }
            }
        }
        Rep::Linear { p, rows } => {
            writeln!(out, "type linear").unwrap();
            writeln!(out, "field {p}").unwrap();
            writeln!(out, "rows {}", rows.len()).unwrap();
            if n > 0 {
                for row in rows {
                    let entries: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", entries.join(" ")).unwrap();
                }
            }
        }
        Rep::Graphic { vertices, edges } => {
            writeln!(out, "type graphic").unwrap();
            writeln!(out, "vertices {vertices}").unwrap();
            for (u, w) in edges {
                writeln!(out, "edge {u} {w}").unwrap();
            }
        }
        Rep::Uniform { r } => {
            writeln!(out, "type uniform").unwrap();
            writeln!(out, "rank {r}").unwrap();
        }
    }
    out
}

pub fn read_matroid_file(path: &Path) -> Result<NamedMatroid> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        crate::error::Error::Input(format!("cannot read {}: {e}", path.display()))
    })?;
    parse_matroid(&text)
}

pub fn write_matroid_file(path: &Path, name: &str, m: &Matroid) -> Result<()> {
    std::fs::write(path, serialize_matroid(name, m)).map_err(|e| {
        crate::error::Error::Input(format!("cannot write {}: {e}", path.display()))
    })
}
