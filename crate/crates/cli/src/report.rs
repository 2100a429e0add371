//! One result, four renderings. Every command builds a [`Report`] and the
//! requested format picks the matching view.

use serde_json::Value;

use crate::args::Format;

#[derive(Debug, Default, Clone)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    fn to_markdown(&self) -> String {
        let esc = |s: &str| s.replace('|', "\\|");
        let mut out = format!("| {} |\n", self.headers.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| esc(c)).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out
    }
}

pub struct Report {
    pub plain: String,
    pub json: Value,
    pub table: Table,
    /// False when the command checked a claim and it failed.
    pub ok: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        let mut s = match format {
            Format::Plain => self.plain.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Csv => self.table.to_csv(),
            Format::Markdown => self.table.to_markdown(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}
