use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{io_err, HarnessError};

pub const CSV_HEADER: &str = "algorithm,model,family,n,k,trial,seed,queries,answer,truth,correct,ms";

/// One algorithm run on one generated instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub algorithm: String,
    pub model: String,
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub trial: usize,
    pub seed: u64,
    pub queries: u64,
    pub answer: bool,
    pub truth: bool,
    pub correct: bool,
    /// Wall time; zero unless timing was requested.
    pub ms: f64,
}

pub fn write_csv(records: &[TrialRecord]) -> Result<String, HarnessError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let body = w.into_inner().map_err(|e| HarnessError::Invalid(e.to_string()))?;
    let mut out = format!("{CSV_HEADER}\n");
    out.push_str(std::str::from_utf8(&body).expect("csv output is utf-8"));
    Ok(out)
}

pub fn emit_csv(records: &[TrialRecord], path: &Path) -> Result<(), HarnessError> {
    std::fs::write(path, write_csv(records)?).map_err(io_err(path))
}

pub fn parse_csv(text: &str) -> Result<Vec<TrialRecord>, HarnessError> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<&str> = rd.headers()?.iter().collect();
    if header.join(",") != CSV_HEADER {
        return Err(HarnessError::Invalid(format!("unexpected csv header {header:?}")));
    }
    Ok(rd.deserialize().collect::<Result<_, _>>()?)
}
