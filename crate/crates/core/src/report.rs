//! Report model and its table, JSON and CSV emitters.
//!
//! A [`Report`] is an ordered list of sections. Rendering is a pure function
//! of the report, so identical reports produce identical bytes.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Integer(i64),
    Text(String),
    Missing,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Integer(n)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Number)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    /// lower_snake_case key.
    pub key: String,
    pub value: Cell,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub key: String,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Section {
    /// Name / value / unit rows.
    Record {
        key: String,
        title: String,
        rows: Vec<Row>,
    },
    /// Rows of cells under fixed columns.
    Table {
        key: String,
        title: String,
        columns: Vec<Column>,
        rows: Vec<Vec<Cell>>,
    },
}

impl Section {
    pub fn record(key: &str, title: &str) -> Self {
        Section::Record {
            key: key.into(),
            title: title.into(),
            rows: Vec::new(),
        }
    }

    pub fn table(key: &str, title: &str, columns: &[(&str, &str)]) -> Self {
        Section::Table {
            key: key.into(),
            title: title.into(),
            columns: columns
                .iter()
                .map(|(k, u)| Column {
                    key: (*k).into(),
                    unit: (*u).into(),
                })
                .collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a record row. Panics on a table section.
    pub fn row(mut self, key: &str, value: impl Into<Cell>, unit: &str) -> Self {
        match &mut self {
            Section::Record { rows, .. } => rows.push(Row {
                key: key.into(),
                value: value.into(),
                unit: unit.into(),
            }),
            Section::Table { .. } => panic!("row() on a table section"),
        }
        self
    }

    /// Appends a table row. Panics on a record or on a width mismatch.
    pub fn push(&mut self, cells: Vec<Cell>) {
        match self {
            Section::Table { columns, rows, .. } => {
                assert_eq!(cells.len(), columns.len(), "row width");
                rows.push(cells);
            }
            Section::Record { .. } => panic!("push() on a record section"),
        }
    }

    pub fn key(&self) -> &str {
        match self {
            Section::Record { key, .. } | Section::Table { key, .. } => key,
        }
    }

    /// Looks up a record value by key.
    pub fn get(&self, name: &str) -> Option<&Cell> {
        match self {
            Section::Record { rows, .. } => rows.iter().find(|r| r.key == name).map(|r| &r.value),
            Section::Table { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn section(&self, key: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.key() == key)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Table => render_table(report),
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

/// `x` to `digits` significant digits. Plain notation between 1e-4 and 1e6,
/// scientific otherwise.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-4..6).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// 17 significant digits, enough to round-trip any f64. Negative zero prints
/// as zero.
pub fn fmt_full(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

fn human(cell: &Cell) -> String {
    match cell {
        Cell::Number(x) => fmt_sig(*x, 6),
        Cell::Integer(n) => n.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Missing => "-".into(),
    }
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    for (i, section) in report.sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match section {
            Section::Record { title, rows, .. } => {
                out.push_str(title);
                out.push('\n');
                let lines: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| vec![r.key.clone(), human(&r.value), r.unit.clone()])
                    .collect();
                write_aligned(&mut out, &lines, &[false, true, false]);
            }
            Section::Table {
                title,
                columns,
                rows,
                ..
            } => {
                out.push_str(title);
                out.push('\n');
                let mut lines = vec![columns
                    .iter()
                    .map(|c| {
                        if c.unit.is_empty() {
                            c.key.clone()
                        } else {
                            format!("{} [{}]", c.key, c.unit)
                        }
                    })
                    .collect::<Vec<_>>()];
                lines.extend(rows.iter().map(|r| r.iter().map(human).collect()));
                let right = vec![true; columns.len()];
                write_aligned(&mut out, &lines, &right);
            }
        }
    }
    out
}

fn write_aligned(out: &mut String, lines: &[Vec<String>], right: &[bool]) {
    let ncol = right.len();
    let mut widths = vec![0usize; ncol];
    for line in lines {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for line in lines {
        let mut text = String::from("  ");
        for (j, cell) in line.iter().enumerate() {
            if j > 0 {
                text.push_str("  ");
            }
            let pad = widths[j] - cell.chars().count();
            if right[j] {
                text.push_str(&" ".repeat(pad));
                text.push_str(cell);
            } else {
                text.push_str(cell);
                if j + 1 < ncol {
                    text.push_str(&" ".repeat(pad));
                }
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
}

fn json_cell(cell: &Cell) -> Value {
    match cell {
        Cell::Number(x) if x.is_finite() => Value::Number(
            fmt_full(*x)
                .parse::<Number>()
                .expect("formatted float is valid JSON"),
        ),
        Cell::Number(_) | Cell::Missing => Value::Null,
        Cell::Integer(n) => Value::from(*n),
        Cell::Text(s) => Value::String(s.clone()),
    }
}

pub fn to_json_value(report: &Report) -> Value {
    let mut top = Map::new();
    for section in &report.sections {
        let value = match section {
            Section::Record { rows, .. } => Value::Object(
                rows.iter()
                    .map(|r| (r.key.clone(), json_cell(&r.value)))
                    .collect(),
            ),
            Section::Table { columns, rows, .. } => Value::Array(
                rows.iter()
                    .map(|r| {
                        Value::Object(
                            columns
                                .iter()
                                .zip(r)
                                .map(|(c, cell)| (c.key.clone(), json_cell(cell)))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        };
        top.insert(section.key().to_string(), value);
    }
    Value::Object(top)
}

fn render_json(report: &Report) -> String {
    let mut s =
        serde_json::to_string_pretty(&to_json_value(report)).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Number(x) => fmt_full(*x),
        Cell::Integer(n) => n.to_string(),
        Cell::Text(s) => csv_field(s),
        Cell::Missing => String::new(),
    }
}

/// One block per section. Blocks are separated by a blank line and, when
/// there is more than one, introduced by a `# key` line.
fn render_csv(report: &Report) -> String {
    let labelled = report.sections.len() > 1;
    let mut out = String::new();
    for (i, section) in report.sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if labelled {
            out.push_str("# ");
            out.push_str(section.key());
            out.push('\n');
        }
        match section {
            Section::Record { rows, .. } => {
                out.push_str("name,value,unit\n");
                for r in rows {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        csv_field(&r.key),
                        csv_cell(&r.value),
                        csv_field(&r.unit)
                    ));
                }
            }
            Section::Table { columns, rows, .. } => {
                let header: Vec<String> = columns.iter().map(|c| csv_field(&c.key)).collect();
                out.push_str(&header.join(","));
                out.push('\n');
                for r in rows {
                    let line: Vec<String> = r.iter().map(csv_cell).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
            }
        }
    }
    out
}
