use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command prints, in every format it supports.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub csv: Option<String>,
    /// False when a check the command ran did not hold.
    pub ok: bool,
}

impl Report {
    pub fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Report { text: text.into(), json: serde_json::to_value(json).expect("serializable"), csv: None, ok: true }
    }

    pub fn csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Text => Some(self.text.clone()),
            Format::Json => Some(serde_json::to_string_pretty(&self.json).expect("valid json")),
            Format::Csv => self.csv.clone(),
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 == r.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.pop();
    out
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_rows(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = vec![header.to_string()];
    out.extend(rows.into_iter().map(|r| r.iter().map(|s| csv_field(s)).collect::<Vec<_>>().join(",")));
    out.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let t = align(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a    bb\nccc  d");
    }

    #[test]
    fn quotes_csv() {
        assert_eq!(csv_field("{[-5]^2,[1]^3}"), "\"{[-5]^2,[1]^3}\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
