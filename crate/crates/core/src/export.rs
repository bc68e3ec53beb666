//! Text renderings of triangles: aligned table, CSV, JSON and b-file.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::triangle::{Entry, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Table, Format::Csv, Format::Json, Format::Bfile];

    pub fn name(self) -> &'static str {
        match self {
            Format::Table => "table",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Bfile => "bfile",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Format::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown format `{s}`"))
    }
}

pub fn render<E: Entry>(t: &Triangle<E>, format: Format) -> String {
    match format {
        Format::Table => table(t),
        Format::Csv => csv(t),
        Format::Json => serde_json::to_string_pretty(&json_value(t)).expect("plain JSON") + "\n",
        Format::Bfile => bfile(t),
    }
}

/// One line per row: `n: e_0, e_1, ...`.
pub fn table<E: Entry>(t: &Triangle<E>) -> String {
    let width = t.max_n().map_or(1, |m| m.to_string().len());
    t.rows()
        .map(|(n, row)| {
            let cells: Vec<String> = row.iter().map(Entry::render).collect();
            format!("{n:>width$}: {}\n", cells.join(", "))
        })
        .collect()
}

/// `n,k,value` with a header line.
pub fn csv<E: Entry>(t: &Triangle<E>) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in t.rows() {
        for (k, e) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{}\n", e.render()));
        }
    }
    out
}

/// `{"family", "first_row", "rows"}` with entries as strings.
pub fn json_value<E: Entry>(t: &Triangle<E>) -> Value {
    let rows: Vec<Vec<String>> = t.rows().map(|(_, row)| row.iter().map(Entry::render).collect()).collect();
    json!({ "family": t.name(), "first_row": t.first_row(), "rows": rows })
}

/// Header comments naming the family and the linearization, then one
/// `index value` pair per line. Entries of row `n` run over `k = 0..len`
/// and the index starts at 1. Polynomial entries are written without spaces
/// so that each line keeps two columns.
pub fn bfile<E: Entry>(t: &Triangle<E>) -> String {
    let mut out = format!("# {} triangle, row-major\n", t.name());
    if let Some(max_n) = t.max_n() {
        out.push_str(&format!(
            "# rows n = {}..{}, row n lists k = 0..len(n)-1; index starts at 1\n",
            t.first_row(),
            max_n
        ));
    }
    let mut index = 1usize;
    for (_, row) in t.rows() {
        for e in row {
            out.push_str(&format!("{index} {}\n", e.render().replace(' ', "")));
            index += 1;
        }
    }
    out
}
