use serde::{Deserialize, Serialize};

use super::frontier::{FrontierDomain, Verdict};
use super::ReportError;
use crate::search::Archive;

/// Validity of one archived misbehaving input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryVerdict {
    pub index: usize,
    pub verdict: Verdict,
    /// Value the verdict rests on (minimum curvature radius for roads).
    pub metric: Option<f64>,
    pub distance_to_reference: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValiditySummary {
    pub valid_count: usize,
    pub invalid_count: usize,
    pub threshold: f64,
    pub entries: Vec<EntryVerdict>,
}

impl ValiditySummary {
    pub fn undetermined_count(&self) -> usize {
        self.entries.len() - self.valid_count - self.invalid_count
    }

    /// Share of automatically judged entries that are valid.
    pub fn valid_fraction(&self) -> Option<f64> {
        let judged = self.valid_count + self.invalid_count;
        (judged > 0).then(|| self.valid_count as f64 / judged as f64)
    }
}

/// Judges every outer (misbehaving) member of the archive.
pub fn validity_summary<D: FrontierDomain>(
    archive: &Archive<D>,
    domain: &D,
    threshold: f64,
) -> Result<ValiditySummary, ReportError> {
    if archive.is_empty() {
        return Err(ReportError::EmptyArchive);
    }
    let omega = domain.concretize(&domain.reference()).ok_or(ReportError::InvalidReference)?;
    let entries: Vec<EntryVerdict> = archive
        .entries()
        .iter()
        .enumerate()
        .map(|(index, e)| {
            let outer = e.individual.m2.concrete();
            let (verdict, metric) = domain.verdict(outer, threshold);
            EntryVerdict { index, verdict, metric, distance_to_reference: domain.distance(outer, &omega) }
        })
        .collect();
    let count = |v| entries.iter().filter(|e| e.verdict == v).count();
    Ok(ValiditySummary {
        valid_count: count(Verdict::Valid),
        invalid_count: count(Verdict::Invalid),
        threshold,
        entries,
    })
}
