//! Report rendering: aligned text tables, JSON (one object, or JSON lines for
//! verdict streams) and CSV. Every machine-readable record carries
//! `schema_version` and the run seed.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use selfext_core::lab::Tally;
use selfext_core::verdict::{Status, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// One line of a verdict stream.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub schema_version: u32,
    pub seed: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// One row of the CSV summary of a verdict stream.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub schema_version: u32,
    pub seed: u64,
    pub instance: String,
    pub check: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default)]
pub struct TextTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new<S: ToString>(headers: impl IntoIterator<Item = S>) -> Self {
        TextTable {
            headers: headers.into_iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.headers);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

/// The result of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    /// Human-readable rendering.
    pub text: String,
    /// Fields of the JSON object for non-stream reports.
    pub data: Map<String, Value>,
    /// Tabular form for CSV output, when `data` is not flat.
    pub table: Option<TextTable>,
    /// Set for sweeps and catalog verification.
    pub verdicts: Option<Vec<Verdict>>,
}

impl Report {
    pub fn new(command: &str, seed: u64, text: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            seed,
            text: text.into(),
            data: Map::new(),
            table: None,
            verdicts: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.data.insert(
            key.to_string(),
            serde_json::to_value(value).expect("report values serialize"),
        );
        self
    }

    pub fn with_table(mut self, table: TextTable) -> Self {
        self.table = Some(table);
        self
    }

    pub fn stream(command: &str, seed: u64, verdicts: Vec<Verdict>) -> Self {
        let mut report = Report::new(command, seed, verdict_table(&verdicts));
        report.verdicts = Some(verdicts);
        report
    }

    pub fn has_failures(&self) -> bool {
        self.verdicts.as_ref().is_some_and(|vs| vs.iter().any(Verdict::is_fail))
    }

    pub fn records(&self) -> Vec<VerdictRecord> {
        self.verdicts
            .iter()
            .flatten()
            .map(|v| VerdictRecord {
                schema_version: SCHEMA_VERSION,
                seed: self.seed,
                verdict: v.clone(),
            })
            .collect()
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Table => out.write_all(self.text.as_bytes()),
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
        }
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        if self.verdicts.is_some() {
            for record in self.records() {
                serde_json::to_writer(&mut *out, &record)?;
                writeln!(out)?;
            }
            return Ok(());
        }
        let mut object = Map::new();
        object.insert("schema_version".into(), SCHEMA_VERSION.into());
        object.insert("seed".into(), self.seed.into());
        object.insert("command".into(), self.command.clone().into());
        object.extend(self.data.clone());
        serde_json::to_writer_pretty(&mut *out, &Value::Object(object))?;
        writeln!(out)
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        if self.verdicts.is_some() {
            return self.write_summary(out);
        }
        let mut w = csv::Writer::from_writer(out);
        match &self.table {
            Some(table) => {
                let mut header = vec!["schema_version".to_string(), "seed".to_string()];
                header.extend(table.headers.iter().cloned());
                w.write_record(&header)?;
                for row in &table.rows {
                    let mut record = vec![SCHEMA_VERSION.to_string(), self.seed.to_string()];
                    record.extend(row.iter().cloned());
                    w.write_record(&record)?;
                }
            }
            None => {
                w.write_record(["schema_version", "seed", "command", "key", "value"])?;
                for (key, value) in &self.data {
                    let value = match value {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    w.write_record([
                        &SCHEMA_VERSION.to_string(),
                        &self.seed.to_string(),
                        &self.command,
                        key,
                        &value,
                    ])?;
                }
            }
        }
        w.flush()
    }

    /// CSV with one row per verdict: instance, check, status.
    pub fn write_summary(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for v in self.verdicts.iter().flatten() {
            w.serialize(SummaryRow {
                schema_version: SCHEMA_VERSION,
                seed: self.seed,
                instance: v.instance.clone(),
                check: v.check.clone(),
                status: v.status,
            })
            .map_err(io::Error::other)?;
        }
        w.flush()
    }
}

/// Fails and skips in full, passes counted per check.
fn verdict_table(verdicts: &[Verdict]) -> String {
    let mut table = TextTable::new(["instance", "check", "status", "detail"]);
    let mut passes: Vec<(String, usize)> = Vec::new();
    for v in verdicts {
        if v.status == Status::Pass && verdicts.len() > 200 {
            match passes.iter_mut().find(|(c, _)| *c == v.check) {
                Some((_, n)) => *n += 1,
                None => passes.push((v.check.clone(), 1)),
            }
            continue;
        }
        let mut detail = v.detail.clone();
        if let Some(w) = &v.witness {
            detail.push_str(&format!(" witness={w}"));
        }
        table.row([v.instance.clone(), v.check.clone(), v.status.to_string(), detail]);
    }
    let mut out = String::new();
    if !table.rows.is_empty() {
        out.push_str(&table.render());
    }
    for (check, n) in passes {
        out.push_str(&format!("{check}: {n} pass\n"));
    }
    let t = Tally::of(verdicts);
    out.push_str(&format!(
        "total: {} pass, {} fail, {} skipped\n",
        t.pass, t.fail, t.skipped
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_lines_round_trip() {
        let verdicts = vec![
            Verdict::pass("[2,2] cyclic", "rigidity", "ok"),
            Verdict::fail("[3] cyclic", "oracle_agreement", "mismatch", json!({"module": [0, 1]})),
        ];
        let report = Report::stream("sweep", 7, verdicts);
        let mut buf = Vec::new();
        report.write(Format::Json, &mut buf).unwrap();
        let parsed: Vec<VerdictRecord> = String::from_utf8(buf)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(parsed, report.records());
        assert!(report.has_failures());
    }

    #[test]
    fn table_aligns_columns() {
        let mut t = TextTable::new(["a", "long header"]);
        t.row(["xyz", "1"]);
        assert_eq!(t.render(), "a    long header\nxyz  1\n");
    }
}
