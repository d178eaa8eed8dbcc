//! Frontier analysis: radius, validity, export, rendering and preset comparison.

pub mod cli;
mod compare;
mod config;
mod export;
mod frontier;
mod radius;
mod render;
mod validity;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::digit::DigitError;
use crate::search::SearchError;

pub use compare::{
    compare_presets, comparison_table, summarize_run, Comparison, MeanSd, PairedRun, PresetStats, RunSummary,
};
pub use config::{default_search, DigitSettings, RunConfig};
pub use export::{
    archive_document, document_archive, export_archive, import_archive, peek_domain, read_document, ArchiveDocument,
    EntryRecord, RunMetadata, Timing, FORMAT_VERSION,
};
pub use frontier::{DomainKind, FrontierDomain, Verdict};
pub use radius::{frontier_radius, radius_report, RadiusReport, Side};
pub use render::{digit_panel, digit_svg, entry_file_name, pair_svg, render_frontier, road_panel, PANEL};
pub use validity::{validity_summary, EntryVerdict, ValiditySummary};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("archive is empty")]
    EmptyArchive,
    #[error("reference input violates the domain constraints")]
    InvalidReference,
    #[error("archive holds {found} inputs, expected {expected}")]
    WrongDomain { expected: frontier::DomainKind, found: frontier::DomainKind },
    #[error("archive entry {0} does not describe valid inputs")]
    InvalidEntry(usize),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("configuration: {0}")]
    Config(String),
    #[error("seed generation failed: {0}")]
    Seeds(String),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Digit(#[from] DigitError),
}

impl ReportError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io { path: path.to_path_buf(), source }
    }

    pub fn parse(path: &Path, source: serde_json::Error) -> Self {
        Self::Parse { path: path.to_path_buf(), source }
    }
}
