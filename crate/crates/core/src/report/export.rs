use std::path::Path;

use serde::{Deserialize, Serialize};

use super::frontier::{DomainKind, FrontierDomain};
use super::ReportError;
use crate::search::{Archive, ArchiveEntry, Individual, Member, SearchConfig};
use crate::Quality;

pub const FORMAT_VERSION: u32 = 1;

/// Values that change from one run or export to the next.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    /// Seconds since the Unix epoch at export time.
    pub exported_at: u64,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub preset: Quality,
    pub config: SearchConfig,
    /// Domain settings as given in the run configuration.
    pub domain_config: serde_json::Value,
    pub rng_seed: u64,
    pub generations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryRecord<M> {
    pub id: u64,
    pub seed_id: usize,
    pub generation: usize,
    pub m1_id: u64,
    pub m2_id: u64,
    pub m1: M,
    pub m2: M,
    pub eval1: f64,
    pub eval2: f64,
    /// Absent until the pair has been ranked.
    pub f1: Option<f64>,
    pub f2: Option<f64>,
}

/// Exported archive: one record per frontier pair plus the run that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchiveDocument<M> {
    pub format: u32,
    pub domain: DomainKind,
    pub threshold_ta: f64,
    pub metadata: RunMetadata,
    pub entries: Vec<EntryRecord<M>>,
}

impl<M: Serialize> ArchiveDocument<M> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("archive documents serialize") + "\n"
    }

    /// JSON without the timing block; equal for two runs with the same configuration.
    pub fn deterministic_json(&self) -> String
    where
        M: Clone,
    {
        let mut doc = self.clone();
        doc.metadata.timing = None;
        doc.to_json()
    }
}

pub fn archive_document<D: FrontierDomain>(archive: &Archive<D>, metadata: RunMetadata) -> ArchiveDocument<D::Model> {
    let entries = archive
        .entries()
        .iter()
        .map(|e| {
            let x = &e.individual;
            EntryRecord {
                id: x.id,
                seed_id: x.seed_id,
                generation: e.generation,
                m1_id: x.m1.id,
                m2_id: x.m2.id,
                m1: x.m1.model.clone(),
                m2: x.m2.model.clone(),
                eval1: x.m1.eval().unwrap_or(f64::NAN),
                eval2: x.m2.eval().unwrap_or(f64::NAN),
                f1: x.f1.is_finite().then_some(x.f1),
                f2: x.f2.is_finite().then_some(x.f2),
            }
        })
        .collect();
    ArchiveDocument { format: FORMAT_VERSION, domain: D::KIND, threshold_ta: archive.threshold(), metadata, entries }
}

pub fn export_archive<D: FrontierDomain>(
    archive: &Archive<D>,
    metadata: RunMetadata,
    path: &Path,
) -> Result<ArchiveDocument<D::Model>, ReportError> {
    let doc = archive_document(archive, metadata);
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| ReportError::io(dir, e))?;
    }
    std::fs::write(path, doc.to_json()).map_err(|e| ReportError::io(path, e))?;
    Ok(doc)
}

/// Reads only the domain tag of an exported archive.
pub fn peek_domain(path: &Path) -> Result<DomainKind, ReportError> {
    #[derive(Deserialize)]
    struct Head {
        domain: DomainKind,
    }
    let text = std::fs::read_to_string(path).map_err(|e| ReportError::io(path, e))?;
    let head: Head = serde_json::from_str(&text).map_err(|e| ReportError::parse(path, e))?;
    Ok(head.domain)
}

pub fn read_document<M: serde::de::DeserializeOwned>(path: &Path) -> Result<ArchiveDocument<M>, ReportError> {
    let text = std::fs::read_to_string(path).map_err(|e| ReportError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| ReportError::parse(path, e))
}

/// Rebuilds the archive of a document, concretizing every member again.
pub fn document_archive<D: FrontierDomain>(
    doc: &ArchiveDocument<D::Model>,
    domain: &D,
) -> Result<Archive<D>, ReportError> {
    if doc.domain != D::KIND {
        return Err(ReportError::WrongDomain { expected: D::KIND, found: doc.domain });
    }
    let entries = doc
        .entries
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let m1 = Member::with_eval(domain, r.m1_id, r.m1.clone(), r.eval1);
            let m2 = Member::with_eval(domain, r.m2_id, r.m2.clone(), r.eval2);
            let (Some(m1), Some(m2)) = (m1, m2) else {
                return Err(ReportError::InvalidEntry(i));
            };
            let mut individual = Individual::new(r.id, m1, m2, r.seed_id);
            if let Some(f1) = r.f1 {
                individual.f1 = f1;
            }
            if let Some(f2) = r.f2 {
                individual.f2 = f2;
            }
            Ok(ArchiveEntry { individual, generation: r.generation })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Archive::from_entries(doc.threshold_ta, entries))
}

pub fn import_archive<D: FrontierDomain>(
    path: &Path,
    domain: &D,
) -> Result<(Archive<D>, ArchiveDocument<D::Model>), ReportError> {
    let doc = read_document::<D::Model>(path)?;
    let archive = document_archive(&doc, domain)?;
    Ok((archive, doc))
}
