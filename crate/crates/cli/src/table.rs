use std::io::{self, Write};

use scaled_hypercomplex::text::{format_real, round_sig};
use serde_json::{Map, Value};

use crate::Format;

#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    Num(f64),
    Bool(bool),
    Empty,
}

impl Cell {
    fn render(&self, digits: usize) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(v) => format_real(*v, digits),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    pub fn json(&self, digits: usize) -> Value {
        match self {
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Num(v) => Value::from(round_sig(*v, digits)),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, digits: usize, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.headers.join(","))?;
                for row in &self.rows {
                    let line: Vec<_> = row.iter().map(|c| csv_field(&c.render(digits))).collect();
                    writeln!(out, "{}", line.join(","))?;
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.to_string(), c.json(digits)))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                writeln!(out, "{}", Value::Array(rows))?;
            }
            Format::Human => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.render(digits)).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|k| {
                        cells
                            .iter()
                            .map(|r| r[k].len())
                            .chain([self.headers[k].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |vals: Vec<&str>| {
                    vals.iter()
                        .zip(&widths)
                        .map(|(v, w)| format!("{v:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(self.headers.clone()))?;
                for r in &cells {
                    writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["word", "value", "note"]);
        t.push(vec![Cell::Text("1*".into()), Cell::Num(3.5), Cell::Empty]);
        t.push(vec![
            Cell::Text("11".into()),
            Cell::Num(-2.0),
            Cell::Text("a, b".into()),
        ]);
        t
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        sample().write(format, 12, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(render(Format::Csv), "word,value,note\n1*,3.5,\n11,-2,\"a, b\"\n");
    }

    #[test]
    fn json_uses_null_for_empty() {
        assert_eq!(
            render(Format::Json),
            "[{\"note\":null,\"value\":3.5,\"word\":\"1*\"},{\"note\":\"a, b\",\"value\":-2.0,\"word\":\"11\"}]\n"
        );
    }

    #[test]
    fn human_is_aligned() {
        assert_eq!(render(Format::Human), "word  value  note\n1*    3.5\n11    -2     a, b\n");
    }
}
