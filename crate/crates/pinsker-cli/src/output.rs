//! Tabular output rendering for the `pinsker` binary.
//!
//! Every subcommand produces a [`Table`]: a header plus rows of typed
//! [`Cell`]s. The table is rendered in one of three formats:
//!
//! - `csv` (default): one header line, one comma-joined line per row.
//!   Floats are printed with [`fmt_float`] (17 significant digits, `.`
//!   decimal separator), so re-parsing a float cell with `str::parse::<f64>`
//!   and re-emitting it reproduces the byte-identical field. Missing cells
//!   are empty fields. No quoting is ever needed: string cells (regime
//!   tokens, check names, `;`-joined coordinate lists) never contain commas.
//! - `json`: JSON Lines, one object per row keyed by the header. Non-finite
//!   floats become `null` (JSON has no NaN/infinity); missing cells are
//!   `null`.
//! - `table`: human-readable aligned columns. Floats use Rust's shortest
//!   round-trip formatting, so the values are still exact, just narrower.

use serde_json::{Map, Number, Value};

/// Output format selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated values with a header line (default).
    Csv,
    /// JSON Lines: one object per row.
    Json,
    /// Aligned human-readable columns.
    Table,
}

/// One typed cell of a result table.
#[derive(Debug, Clone)]
pub enum Cell {
    /// A floating-point quantity (printed with 17 significant digits in CSV).
    Float(f64),
    /// An unsigned integer (counts, alphabet sizes).
    Int(u64),
    /// A token or preformatted string; must not contain commas or newlines.
    Str(String),
    /// A field that does not apply to this row (empty in CSV, null in JSON).
    Empty,
}

/// A rendered result: header plus rows, all the same width.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// Canonical float formatting: `{:.16e}` gives 17 significant digits, enough
/// to round-trip any f64 exactly. NaN prints as `NaN`, infinities as `inf` /
/// `-inf`.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Render `table` in `format`, returning the full output text (every line
/// newline-terminated).
pub fn render(table: &Table, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(table),
        OutputFormat::Json => render_json(table),
        OutputFormat::Table => render_aligned(table),
    }
}

fn cell_csv(cell: &Cell) -> String {
    match cell {
        Cell::Float(v) => fmt_float(*v),
        Cell::Int(v) => v.to_string(),
        Cell::Str(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&table.header.join(","));
    out.push('\n');
    for row in &table.rows {
        let fields: Vec<String> = row.iter().map(cell_csv).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        Cell::Float(v) => Number::from_f64(*v)
            .map(Value::Number)
            .unwrap_or(Value::Null),
        Cell::Int(v) => Value::from(*v),
        Cell::Str(s) => Value::from(s.as_str()),
        Cell::Empty => Value::Null,
    }
}

fn render_json(table: &Table) -> String {
    let mut out = String::new();
    for row in &table.rows {
        let mut map = Map::new();
        for (head, cell) in table.header.iter().zip(row) {
            map.insert((*head).to_string(), cell_json(cell));
        }
        out.push_str(&Value::Object(map).to_string());
        out.push('\n');
    }
    out
}

fn cell_display(cell: &Cell) -> String {
    match cell {
        // Shortest round-trip formatting: exact but compact for humans.
        Cell::Float(v) => format!("{v}"),
        Cell::Int(v) => v.to_string(),
        Cell::Str(s) => s.clone(),
        Cell::Empty => "-".to_string(),
    }
}

fn render_aligned(table: &Table) -> String {
    let formatted: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| row.iter().map(cell_display).collect())
        .collect();
    let ncols = table.header.len();
    let mut widths: Vec<usize> = table.header.iter().map(|h| h.len()).collect();
    for row in &formatted {
        for (i, field) in row.iter().enumerate().take(ncols) {
            widths[i] = widths[i].max(field.len());
        }
    }
    let mut out = String::new();
    let push_row = |fields: &[String], out: &mut String| {
        let line: Vec<String> = fields
            .iter()
            .enumerate()
            .map(|(i, f)| format!("{f:<width$}", width = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    let header_fields: Vec<String> = table.header.iter().map(|h| h.to_string()).collect();
    push_row(&header_fields, &mut out);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    push_row(&rule, &mut out);
    for row in &formatted {
        push_row(row, &mut out);
    }
    out
}
