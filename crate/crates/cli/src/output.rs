//! Rendering for the three output formats.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use squaretriads::json::TriadRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Out<W: Write> {
    w: W,
    format: Format,
}

fn to_io(e: impl std::error::Error + Send + Sync + 'static) -> io::Error {
    io::Error::other(e)
}

/// Flat cell text for a JSON value; nested values stay JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl<W: Write> Out<W> {
    pub fn new(w: W, format: Format) -> Self {
        Out { w, format }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.w.flush()
    }

    fn json_line<T: Serialize>(&mut self, v: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.w, v).map_err(to_io)?;
        writeln!(self.w)
    }

    fn csv_rows<H: AsRef<[u8]>>(&mut self, header: &[H], rows: &[Vec<String>]) -> io::Result<()> {
        let mut wr = csv::Writer::from_writer(&mut self.w);
        wr.write_record(header).map_err(to_io)?;
        for r in rows {
            wr.write_record(r).map_err(to_io)?;
        }
        wr.flush()
    }

    /// Triads with certificates; JSON is one object per line.
    pub fn triads(&mut self, recs: &[TriadRecord]) -> io::Result<()> {
        match self.format {
            Format::Json => recs.iter().try_for_each(|r| self.json_line(r)),
            Format::Csv => {
                let rows: Vec<Vec<String>> = recs
                    .iter()
                    .map(|r| vec![r.a.clone(), r.b.clone(), r.c.clone(), r.f.clone(), r.g.clone(), r.h.clone()])
                    .collect();
                self.csv_rows(&["a", "b", "c", "f", "g", "h"], &rows)
            }
            Format::Text => recs.iter().try_for_each(|r| {
                writeln!(
                    self.w,
                    "({}, {}, {})  a+b+c = {}^2  ab+bc+ca = {}^2  abc = {}^2",
                    r.a, r.b, r.c, r.f, r.g, r.h
                )
            }),
        }
    }

    /// One record. CSV uses the top-level JSON keys as the header.
    pub fn record<T: Serialize>(&mut self, v: &T, text: &str) -> io::Result<()> {
        match self.format {
            Format::Json => self.json_line(v),
            Format::Csv => {
                let obj = serde_json::to_value(v).map_err(to_io)?;
                let Value::Object(map) = obj else {
                    return self.csv_rows(&["value"], &[vec![cell(&obj)]]);
                };
                let keys: Vec<&String> = map.keys().collect();
                let vals: Vec<String> = map.values().map(cell).collect();
                self.csv_rows(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>(), &[vals])
            }
            Format::Text => writeln!(self.w, "{text}"),
        }
    }

    /// Several rows. JSON serializes `items`; CSV and text use `rows`.
    pub fn lines<T: Serialize>(&mut self, header: &[&str], rows: Vec<Vec<String>>, items: &[T]) -> io::Result<()> {
        match self.format {
            Format::Json => items.iter().try_for_each(|i| self.json_line(i)),
            Format::Csv => self.csv_rows(header, &rows),
            Format::Text => {
                let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
                for r in &rows {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.len());
                    }
                }
                let line = |cells: &mut dyn Iterator<Item = &str>| {
                    cells
                        .zip(&width)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(self.w, "{}", line(&mut header.iter().copied()))?;
                for r in &rows {
                    writeln!(self.w, "{}", line(&mut r.iter().map(String::as_str)))?;
                }
                Ok(())
            }
        }
    }

    /// Trailing summary; omitted from CSV so the table stays rectangular.
    pub fn summary<T: Serialize>(&mut self, v: &T, text: &str) -> io::Result<()> {
        match self.format {
            Format::Json => self.json_line(v),
            Format::Csv => Ok(()),
            Format::Text => writeln!(self.w, "{text}"),
        }
    }
}
