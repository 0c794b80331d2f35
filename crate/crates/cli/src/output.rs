use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

/// Writes a record (object) or a list of records in the chosen format.
/// Nested values are flattened into their compact JSON text.
pub fn emit<T: Serialize>(out: &mut impl Write, format: Format, value: &T) -> Result<()> {
    let value = serde_json::to_value(value)?;
    if format == Format::Json {
        serde_json::to_writer_pretty(&mut *out, &value)?;
        writeln!(out)?;
        return Ok(());
    }
    let records = match value {
        Value::Array(items) => items,
        other => vec![other],
    };
    let header: Vec<String> = match records.first() {
        Some(Value::Object(map)) => map.keys().cloned().collect(),
        _ => vec!["value".into()],
    };
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|record| match record {
            Value::Object(map) => header
                .iter()
                .map(|k| map.get(k).map(cell).unwrap_or_default())
                .collect(),
            other => vec![cell(other)],
        })
        .collect();

    match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(&mut *out);
            writer.write_record(&header)?;
            for row in &rows {
                writer.write_record(row)?;
            }
            writer.flush()?;
        }
        Format::Table => {
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([header[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&header))?;
            for row in &rows {
                writeln!(out, "{}", line(row))?;
            }
        }
        Format::Json => unreachable!(),
    }
    Ok(())
}

fn cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(format: Format, value: Value) -> String {
        let mut buf = Vec::new();
        emit(&mut buf, format, &value).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_keeps_field_order() {
        let text = render(Format::Csv, json!([{"m": 1, "deg": "6"}, {"m": 2, "deg": "12"}]));
        assert_eq!(text, "m,deg\n1,6\n2,12\n");
    }

    #[test]
    fn table_aligns_columns() {
        let text = render(Format::Table, json!({"m": 2, "deg": "12"}));
        assert_eq!(text, "m  deg\n2   12\n");
    }

    #[test]
    fn nested_values_flatten() {
        let text = render(Format::Csv, json!({"shape": [3, 1]}));
        assert_eq!(text, "shape\n\"[3,1]\"\n");
    }
}
