//! CSV report rows.

use std::path::Path;

use ksub_core::Report;
use serde::Serialize;

use crate::error::{CliError, Result};

/// One CSV line. Empty optionals become empty fields.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub instance: String,
    pub algorithm: String,
    pub n: usize,
    pub k: usize,
    pub budget: u64,
    pub value: f64,
    pub optimum: Option<f64>,
    pub ratio: Option<f64>,
    pub evaluations: u64,
    pub millis: Option<u64>,
}

impl ReportRow {
    pub fn new(instance: impl Into<String>, n: usize, k: usize, budget: u64, report: &Report) -> Self {
        Self {
            instance: instance.into(),
            algorithm: report.algorithm.name().to_string(),
            n,
            k,
            budget,
            value: report.value,
            optimum: report.optimum,
            ratio: report.ratio,
            evaluations: report.evaluations,
            millis: None,
        }
    }
}

pub fn csv_string(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn is_csv_path(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ksub_core::{Algorithm, Assignment};

    #[test]
    fn empty_optionals_are_empty_fields() {
        let r = Report::new(Algorithm::KnapsackGreedy, Assignment::empty(), 0.0, 4);
        let text = csv_string(&[ReportRow::new("w", 2, 2, 3, &r)]).unwrap();
        assert_eq!(
            text,
            "instance,algorithm,n,k,budget,value,optimum,ratio,evaluations,millis\nw,knapsack_greedy,2,2,3,0.0,,,4,\n"
        );
        let r = r.with_optimum(0.0);
        let text = csv_string(&[ReportRow::new("w", 2, 2, 3, &r)]).unwrap();
        assert!(text.ends_with("w,knapsack_greedy,2,2,3,0.0,0.0,,4,\n"));
    }
}
