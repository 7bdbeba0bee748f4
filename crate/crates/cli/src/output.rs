//! Rendering of command results in the three output formats.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One command result, pre-rendered for each format.
pub struct Emit {
    plain: String,
    json: Value,
    csv: String,
}

impl Emit {
    /// A single record: plain is the scripting value, csv is header plus one row.
    pub fn record(plain: impl Into<String>, fields: Value) -> Self {
        let row = into_map(fields);
        Emit {
            plain: plain.into(),
            csv: csv_of(std::slice::from_ref(&row)),
            json: Value::Object(row),
        }
    }

    pub fn table(plain: impl Into<String>, rows: Vec<Value>) -> Self {
        let rows: Vec<_> = rows.into_iter().map(into_map).collect();
        Emit {
            plain: plain.into(),
            csv: csv_of(&rows),
            json: Value::Array(rows.into_iter().map(Value::Object).collect()),
        }
    }

    /// For results that carry their own serializers.
    pub fn custom(plain: impl Into<String>, json: Value, csv: String) -> Self {
        Emit {
            plain: plain.into(),
            json,
            csv,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => with_newline(self.plain.clone()),
            Format::Json => {
                with_newline(serde_json::to_string_pretty(&self.json).expect("json value"))
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_of(rows: &[Map<String, Value>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    if let Some(first) = rows.first() {
        writer.write_record(first.keys()).expect("in-memory csv");
    }
    for row in rows {
        writer
            .write_record(row.values().map(cell))
            .expect("in-memory csv");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_each_format() {
        let e = Emit::record("1", json!({"word": "a^1", "delta": 1, "note": null}));
        assert_eq!(e.render(Format::Plain), "1\n");
        assert_eq!(e.render(Format::Csv), "word,delta,note\na^1,1,\n");
        assert!(e.render(Format::Json).contains("\"delta\": 1"));

        let t = Emit::table(
            "",
            vec![json!({"g": "a", "k": 2}), json!({"g": "b", "k": -1})],
        );
        assert_eq!(t.render(Format::Csv), "g,k\na,2\nb,-1\n");
        assert!(t.render(Format::Json).starts_with('['));
    }
}
