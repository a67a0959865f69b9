use super::CliError;
use serde_json::Value;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" => Ok(Format::Jsonl),
            _ => Err(CliError::Config(format!("unknown output format '{s}' (csv or jsonl)"))),
        }
    }
}

/// Rows with a fixed column order plus trailing summary records.
#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub summary: Vec<Value>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table { columns: columns.to_vec(), ..Table::default() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Header echo: tool, command, resolved config, seed, and an optional
/// wall-clock line.
pub struct Header {
    pub command: String,
    pub config: Value,
    pub seed: u64,
    pub timestamp: Option<u64>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        // Shortest round-trip representation.
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => i.to_string(),
            (_, Some(u), _) => u.to_string(),
            (_, _, Some(f)) => format!("{f:?}"),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn write_header(out: &mut dyn Write, format: Format, h: &Header) -> std::io::Result<()> {
    let meta = serde_json::json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": h.command,
        "seed": h.seed,
        "config": h.config,
    });
    match format {
        Format::Csv => {
            writeln!(out, "# {} {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"), h.command)?;
            writeln!(out, "# seed: {}", h.seed)?;
            writeln!(out, "# config: {}", h.config)?;
            if let Some(t) = h.timestamp {
                writeln!(out, "# generated_unix: {t}")?;
            }
        }
        Format::Jsonl => {
            writeln!(out, "{}", serde_json::json!({ "header": meta }))?;
            if let Some(t) = h.timestamp {
                writeln!(out, "{}", serde_json::json!({ "generated_unix": t }))?;
            }
        }
    }
    Ok(())
}

pub fn emit(out: &mut dyn Write, format: Format, header: &Header, table: &Table) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    write_header(out, format, header).map_err(io)?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let csv_err = |e: csv::Error| CliError::Io(e.to_string());
            w.write_record(&table.columns).map_err(csv_err)?;
            for row in &table.rows {
                w.write_record(row.iter().map(cell)).map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
            drop(w);
            for s in &table.summary {
                writeln!(out, "# summary: {s}").map_err(io)?;
            }
        }
        Format::Jsonl => {
            for row in &table.rows {
                let fields: Vec<String> = table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("{}:{}", Value::from(*c), v))
                    .collect();
                writeln!(out, "{{{}}}", fields.join(",")).map_err(io)?;
            }
            for s in &table.summary {
                writeln!(out, "{}", serde_json::json!({ "summary": s })).map_err(io)?;
            }
        }
    }
    out.flush().map_err(io)
}
