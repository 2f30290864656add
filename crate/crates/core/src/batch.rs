//! Batch ingestion: record splitting, format detection, the JSON mirror of
//! the text grammars, and order-preserving (optionally parallel) analysis.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certify::{certify, Certificate, Primeness, Splitness};
use crate::diagram::{
    braid_closure, gauss_to_diagram, parse_braid, parse_gauss, parse_pd, pd_to_diagram, BraidWord,
    DiagramError, GaussCode, LinkDiagram, PdCode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InputFormat {
    Pd,
    Gauss,
    Braid,
    Json,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pd" => Ok(InputFormat::Pd),
            "gauss" => Ok(InputFormat::Gauss),
            "braid" => Ok(InputFormat::Braid),
            "json" => Ok(InputFormat::Json),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

/// A parsed record in one of the supported encodings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramInput {
    Pd(PdCode),
    Braid(BraidWord),
    Gauss(GaussCode),
}

impl DiagramInput {
    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        match self {
            DiagramInput::Pd(pd) => pd_to_diagram(pd),
            DiagramInput::Braid(b) => Ok(braid_closure(b)),
            DiagramInput::Gauss(g) => gauss_to_diagram(g),
        }
    }

    /// The JSON mirror of this record.
    pub fn to_json(&self) -> Value {
        match self {
            DiagramInput::Pd(pd) => serde_json::json!({
                "pd": pd.crossings,
                "free_loops": pd.free_loops,
            }),
            DiagramInput::Braid(b) => serde_json::json!({
                "braid": { "strands": b.strands, "word": b.letters },
            }),
            DiagramInput::Gauss(g) => serde_json::json!({
                "gauss": g.to_string().split(';').collect::<Vec<_>>(),
            }),
        }
    }
}

#[derive(Deserialize)]
struct JsonBraid {
    strands: usize,
    word: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRecord {
    pd: Option<Vec<[u64; 4]>>,
    free_loops: Option<usize>,
    braid: Option<JsonBraid>,
    gauss: Option<Vec<String>>,
    #[allow(dead_code)]
    name: Option<String>,
}

/// Parses one JSON-mirror object: `{"pd": [[a,b,c,d], ...], "free_loops": k}`,
/// `{"braid": {"strands": n, "word": [...]}}` or `{"gauss": ["O1+U2+...", ...]}`.
/// An optional `"name"` is ignored.
pub fn parse_json_record(value: &Value) -> Result<DiagramInput, DiagramError> {
    let rec: JsonRecord =
        serde_json::from_value(value.clone()).map_err(|e| DiagramError::Json(e.to_string()))?;
    match (rec.pd, rec.braid, rec.gauss) {
        (Some(pd), None, None) => Ok(DiagramInput::Pd(PdCode::new(
            pd,
            rec.free_loops.unwrap_or(0),
        )?)),
        (None, Some(b), None) if rec.free_loops.is_none() => {
            Ok(DiagramInput::Braid(BraidWord::new(b.strands, b.word)?))
        }
        (None, None, Some(g)) if rec.free_loops.is_none() => {
            if g.is_empty() {
                return Err(DiagramError::EmptyDiagram);
            }
            Ok(DiagramInput::Gauss(parse_gauss(&g.join(";"))?))
        }
        _ => Err(DiagramError::Json(
            "expected exactly one of \"pd\", \"braid\", \"gauss\"".into(),
        )),
    }
}

fn detect(line: &str) -> InputFormat {
    let t = line.trim_start();
    if t.starts_with('{') {
        InputFormat::Json
    } else if t.starts_with("BR") {
        InputFormat::Braid
    } else if t.starts_with('X') || t.starts_with("FREE_LOOPS") {
        InputFormat::Pd
    } else {
        InputFormat::Gauss
    }
}

fn parse_line(line: &str, format: InputFormat) -> Result<DiagramInput, DiagramError> {
    match format {
        InputFormat::Pd => parse_pd(line).map(DiagramInput::Pd),
        InputFormat::Braid => parse_braid(line).map(DiagramInput::Braid),
        InputFormat::Gauss => parse_gauss(line).map(DiagramInput::Gauss),
        InputFormat::Json => {
            let value: Value =
                serde_json::from_str(line).map_err(|e| DiagramError::Json(e.to_string()))?;
            parse_json_record(&value)
        }
    }
}

/// A record as read from the input: its source text and parse result.
#[derive(Clone, Debug)]
pub struct RawRecord {
    pub source: String,
    pub parsed: Result<DiagramInput, DiagramError>,
}

/// Splits input into records.
///
/// Text whose first non-blank character is `[` is a JSON array of mirror
/// objects. Otherwise each non-blank line not starting with `#` is one
/// record, in the given format or detected per line.
pub fn parse_records(text: &str, format: Option<InputFormat>) -> Vec<RawRecord> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') && matches!(format, None | Some(InputFormat::Json)) {
        return match serde_json::from_str::<Vec<Value>>(trimmed) {
            Ok(values) => values
                .iter()
                .map(|v| RawRecord {
                    source: v.to_string(),
                    parsed: parse_json_record(v),
                })
                .collect(),
            Err(e) => vec![RawRecord {
                source: trimmed.lines().next().unwrap_or_default().to_string(),
                parsed: Err(DiagramError::Json(e.to_string())),
            }],
        };
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| RawRecord {
            source: line.to_string(),
            parsed: parse_line(line, format.unwrap_or_else(|| detect(line))),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BatchOptions {
    pub format: Option<InputFormat>,
    pub assume_nontrivial: bool,
    /// Worker threads; `Some(1)` runs sequentially, `None` uses every core.
    pub jobs: Option<usize>,
}

/// Maps `f` over `items`, preserving order. Runs on a rayon pool unless
/// `jobs` is `Some(1)`, only one thread is available, or the `parallel`
/// feature is off.
pub fn ordered_map<T, U, F>(items: &[T], jobs: Option<usize>, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let run = || items.par_iter().map(&f).collect::<Vec<U>>();
        match jobs {
            Some(n) if n > 1 => {
                if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    return pool.install(run);
                }
            }
            // a one-thread pool only adds hand-off cost
            None if rayon::current_num_threads() > 1 => return run(),
            _ => {}
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    items.iter().map(f).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordOutcome<T> {
    pub index: usize,
    pub input: String,
    pub result: Result<T, String>,
}

/// Parses and converts each record, then applies `f` to the diagrams.
pub fn map_records<T, F>(records: &[RawRecord], jobs: Option<usize>, f: F) -> Vec<RecordOutcome<T>>
where
    T: Send,
    F: Fn(&LinkDiagram) -> T + Sync + Send,
{
    let indexed: Vec<(usize, &RawRecord)> = records.iter().enumerate().collect();
    ordered_map(&indexed, jobs, |(index, rec)| RecordOutcome {
        index: *index,
        input: rec.source.clone(),
        result: rec
            .parsed
            .clone()
            .and_then(|input| input.to_diagram())
            .map(|d| f(&d))
            .map_err(|e| e.to_string()),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub analyzed: usize,
    pub errors: usize,
    pub nonsplit_certified: usize,
    pub split_certified: usize,
    pub splitness_inconclusive: usize,
    pub prime_certified: usize,
    pub primeness_inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchReport {
    pub outcomes: Vec<RecordOutcome<Certificate>>,
    pub summary: Summary,
}

impl BatchReport {
    /// 0 on success, 1 if any record failed to parse.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            1
        } else {
            0
        }
    }
}

/// Summary counts of a list of outcomes; certificate tallies only when the
/// outcomes carry certificates.
pub fn summarize<T>(
    outcomes: &[RecordOutcome<T>],
    certificate: impl Fn(&T) -> Option<&Certificate>,
) -> Summary {
    let mut s = Summary {
        records: outcomes.len(),
        ..Summary::default()
    };
    for o in outcomes {
        match &o.result {
            Err(_) => s.errors += 1,
            Ok(value) => {
                s.analyzed += 1;
                if let Some(c) = certificate(value) {
                    match c.splitness {
                        Splitness::NonsplitCertified => s.nonsplit_certified += 1,
                        Splitness::SplitCertified => s.split_certified += 1,
                        Splitness::Inconclusive => s.splitness_inconclusive += 1,
                    }
                    match c.primeness {
                        Primeness::PrimeCertified => s.prime_certified += 1,
                        Primeness::Inconclusive => s.primeness_inconclusive += 1,
                    }
                }
            }
        }
    }
    s
}

/// Certifies every record of `text`.
pub fn analyze_source(text: &str, options: &BatchOptions) -> BatchReport {
    let records = parse_records(text, options.format);
    let assume = options.assume_nontrivial;
    let outcomes = map_records(&records, options.jobs, |d| certify(d, assume));
    let summary = summarize(&outcomes, |c| Some(c));
    BatchReport { outcomes, summary }
}

/// Certifies every record of the file at `path`.
pub fn analyze_batch(path: &Path, options: &BatchOptions) -> std::io::Result<BatchReport> {
    let text = std::fs::read_to_string(path)?;
    Ok(analyze_source(&text, options))
}
