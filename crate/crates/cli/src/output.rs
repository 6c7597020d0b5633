//! JSON Lines and CSV encodings of output records.
//!
//! Every float goes through [`number`], so both encodings carry the same
//! 17-significant-digit strings.

use std::io::Write;

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use uacg_core::verify::VerificationReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Scientific notation with 17 significant digits; non-finite values as
/// `inf`, `-inf`, `nan`.
pub fn number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(number(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_str(&number(self.0))
        }
    }
}

fn opt_number(x: Option<f64>) -> String {
    x.map(number).unwrap_or_default()
}

#[derive(Debug, Clone)]
pub enum Payload {
    Spectrum {
        graph: &'static str,
        source: &'static str,
        entries: Vec<(f64, usize)>,
        max_deviation: Option<f64>,
    },
    Energy {
        graph: &'static str,
        source: &'static str,
        value: f64,
        shift: f64,
        /// Stated formula value and note when the formula is known to be off.
        caveat: Option<(f64, &'static str)>,
        max_deviation: Option<f64>,
    },
    Report(VerificationReport),
}

#[derive(Debug, Clone)]
pub struct Record {
    pub n: u64,
    pub family: String,
    pub payload: Payload,
}

#[derive(Serialize)]
struct Entry {
    value: Num,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectrumLine<'a> {
    schema_version: u32,
    command: &'a str,
    n: u64,
    family: &'a str,
    graph: &'a str,
    source: &'a str,
    spectrum: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_deviation: Option<Num>,
}

#[derive(Serialize)]
struct EnergyLine<'a> {
    schema_version: u32,
    command: &'a str,
    n: u64,
    family: &'a str,
    graph: &'a str,
    source: &'a str,
    value: Num,
    shift: Num,
    caveat: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_value: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_deviation: Option<Num>,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    schema_version: u32,
    command: &'a str,
    n: u64,
    family: &'a str,
    kind: &'a str,
    status: &'a str,
    max_deviation: Num,
    details: &'a str,
}

const SPECTRUM_HEADER: [&str; 9] = [
    "schema_version",
    "command",
    "n",
    "family",
    "graph",
    "source",
    "value",
    "multiplicity",
    "max_deviation",
];
const ENERGY_HEADER: [&str; 12] = [
    "schema_version",
    "command",
    "n",
    "family",
    "graph",
    "source",
    "value",
    "shift",
    "caveat",
    "formula_value",
    "note",
    "max_deviation",
];
const REPORT_HEADER: [&str; 8] = [
    "schema_version",
    "command",
    "n",
    "family",
    "kind",
    "status",
    "max_deviation",
    "details",
];

pub struct Emitter<W: Write> {
    format: Format,
    command: String,
    out: W,
    csv: Option<csv::Writer<Vec<u8>>>,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, command: String, out: W) -> Self {
        Self {
            format,
            command,
            out,
            csv: None,
        }
    }

    pub fn emit(&mut self, record: &Record) -> std::io::Result<()> {
        match self.format {
            Format::Json => {
                let line = self.json_line(record)?;
                writeln!(self.out, "{line}")
            }
            Format::Csv => self.csv_rows(record),
        }
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        if let Some(w) = self.csv.take() {
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            self.out.write_all(&bytes)?;
        }
        self.out.flush()
    }

    fn json_line(&self, r: &Record) -> std::io::Result<String> {
        let command = self.command.as_str();
        let family = r.family.as_str();
        let text = match &r.payload {
            Payload::Spectrum {
                graph,
                source,
                entries,
                max_deviation,
            } => serde_json::to_string(&SpectrumLine {
                schema_version: SCHEMA_VERSION,
                command,
                n: r.n,
                family,
                graph,
                source,
                spectrum: entries
                    .iter()
                    .map(|&(v, m)| Entry {
                        value: Num(v),
                        multiplicity: m,
                    })
                    .collect(),
                max_deviation: max_deviation.map(Num),
            }),
            Payload::Energy {
                graph,
                source,
                value,
                shift,
                caveat,
                max_deviation,
            } => serde_json::to_string(&EnergyLine {
                schema_version: SCHEMA_VERSION,
                command,
                n: r.n,
                family,
                graph,
                source,
                value: Num(*value),
                shift: Num(*shift),
                caveat: caveat.is_some(),
                formula_value: caveat.map(|c| Num(c.0)),
                note: caveat.map(|c| c.1),
                max_deviation: max_deviation.map(Num),
            }),
            Payload::Report(rep) => serde_json::to_string(&ReportLine {
                schema_version: SCHEMA_VERSION,
                command,
                n: rep.n,
                family: &rep.family,
                kind: rep.kind.name(),
                status: rep.status.name(),
                max_deviation: Num(rep.max_deviation),
                details: &rep.details,
            }),
        };
        text.map_err(std::io::Error::other)
    }

    fn csv_rows(&mut self, r: &Record) -> std::io::Result<()> {
        let header: &[&str] = match r.payload {
            Payload::Spectrum { .. } => &SPECTRUM_HEADER,
            Payload::Energy { .. } => &ENERGY_HEADER,
            Payload::Report(_) => &REPORT_HEADER,
        };
        let w = match &mut self.csv {
            Some(w) => w,
            slot => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(header)?;
                slot.insert(w)
            }
        };
        let lead = [SCHEMA_VERSION.to_string(), self.command.clone(), r.n.to_string(), r.family.clone()];
        match &r.payload {
            Payload::Spectrum {
                graph,
                source,
                entries,
                max_deviation,
            } => {
                for &(v, m) in entries {
                    let tail = [
                        graph.to_string(),
                        source.to_string(),
                        number(v),
                        m.to_string(),
                        opt_number(*max_deviation),
                    ];
                    w.write_record(lead.iter().chain(&tail))?;
                }
            }
            Payload::Energy {
                graph,
                source,
                value,
                shift,
                caveat,
                max_deviation,
            } => {
                let tail = [
                    graph.to_string(),
                    source.to_string(),
                    number(*value),
                    number(*shift),
                    caveat.is_some().to_string(),
                    opt_number(caveat.map(|c| c.0)),
                    caveat.map(|c| c.1).unwrap_or_default().to_string(),
                    opt_number(*max_deviation),
                ];
                w.write_record(lead.iter().chain(&tail))?;
            }
            Payload::Report(rep) => {
                let tail = [
                    rep.kind.name().to_string(),
                    rep.status.name().to_string(),
                    number(rep.max_deviation),
                    rep.details.clone(),
                ];
                w.write_record(lead.iter().chain(&tail))?;
            }
        }
        Ok(())
    }
}
