use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use girard::families::TableRow;
use girard::suite::RunSummary;
use girard::{BasisTable, FamilySpec, RingElem, TruncatedSeries};

use crate::input::Resolved;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct Sink {
    format: Format,
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(format: Format, path: Option<&Path>) -> io::Result<Sink> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink { format, out })
    }

    fn json<T: Serialize>(mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut self.out, value)?;
        self.out.write_all(b"\n")?;
        self.out.flush()
    }

    fn csv(self, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(self.out);
        w.write_record(header)?;
        for row in rows {
            w.write_record(&row)?;
        }
        w.flush()
    }
}

/// `k=v,k=v` with parameters in name order, matching `--params`.
pub fn params_text(spec: &FamilySpec) -> String {
    spec.params
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn text(v: &RingElem) -> String {
    v.to_string()
}

fn opt_text(v: &Option<RingElem>) -> String {
    v.as_ref().map(text).unwrap_or_default()
}

#[derive(Serialize)]
struct BasesRow<'a> {
    k: usize,
    e: &'a RingElem,
    h: &'a RingElem,
    p: &'a RingElem,
}

#[derive(Serialize)]
struct BasesOut<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<FamilySpec>,
    alphabet: &'a girard::VariableSet,
    rows: Vec<BasesRow<'a>>,
}

pub fn write_bases(sink: Sink, input: &Resolved, table: &BasisTable) -> io::Result<()> {
    let rows: Vec<BasesRow> = (0..table.e.len())
        .map(|k| BasesRow {
            k,
            e: &table.e[k],
            h: &table.h[k],
            p: &table.p[k],
        })
        .collect();
    match sink.format {
        Format::Json => sink.json(&BasesOut {
            family: input.family.as_ref().map(|f| f.to_spec()),
            alphabet: &input.alphabet,
            rows,
        }),
        Format::Csv => sink.csv(
            &["k", "e", "h", "p"],
            rows.iter()
                .map(|r| vec![r.k.to_string(), text(r.e), text(r.h), text(r.p)]),
        ),
    }
}

pub fn write_verify(sink: Sink, summary: &RunSummary) -> io::Result<()> {
    match sink.format {
        Format::Json => sink.json(summary),
        Format::Csv => {
            let mut rows = Vec::new();
            for s in &summary.suites {
                for o in &s.outcomes {
                    for r in &o.reports {
                        let family = r.family.as_ref().or(o.family.as_ref());
                        rows.push(vec![
                            s.suite.to_string(),
                            o.case.to_string(),
                            r.identity.clone(),
                            r.n.to_string(),
                            r.k.map(|k| k.to_string()).unwrap_or_default(),
                            r.basis.map(|b| b.to_string()).unwrap_or_default(),
                            family.map(|f| f.kind.to_string()).unwrap_or_default(),
                            family.map(params_text).unwrap_or_default(),
                            o.x.as_ref().map(|x| x.to_string()).unwrap_or_default(),
                            o.y.as_ref().map(|y| y.to_string()).unwrap_or_default(),
                            text(&r.lhs),
                            text(&r.rhs),
                            r.equal.to_string(),
                        ]);
                    }
                }
            }
            sink.csv(
                &[
                    "suite", "case", "identity", "n", "k", "basis", "family", "params", "x", "y",
                    "lhs", "rhs", "equal",
                ],
                rows,
            )
        }
    }
}

pub fn write_table(sink: Sink, rows: &[TableRow]) -> io::Result<()> {
    match sink.format {
        Format::Json => sink.json(&rows),
        Format::Csv => sink.csv(
            &[
                "family", "params", "k", "e", "h", "p", "e_closed", "h_closed", "p_closed",
                "matches",
            ],
            rows.iter().map(|r| {
                vec![
                    r.family.kind.to_string(),
                    params_text(&r.family),
                    r.k.to_string(),
                    text(&r.e),
                    text(&r.h),
                    text(&r.p),
                    opt_text(&r.e_closed),
                    opt_text(&r.h_closed),
                    opt_text(&r.p_closed),
                    r.matches.to_string(),
                ]
            }),
        ),
    }
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    series: &'a str,
    truncation: usize,
    coeffs: &'a TruncatedSeries,
}

pub fn write_series(sink: Sink, label: &str, series: &TruncatedSeries) -> io::Result<()> {
    match sink.format {
        Format::Json => sink.json(&SeriesOut {
            series: label,
            truncation: series.order(),
            coeffs: series,
        }),
        Format::Csv => sink.csv(
            &["series", "power", "coeff"],
            series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![label.to_string(), i.to_string(), text(c)]),
        ),
    }
}
