//! Prints radius and validity of an exported road or digit archive.
//!
//! cargo run --example frontier_metrics -- frontier-out/archive.json

use std::path::PathBuf;

use frontier_core::digit::{DigitDomain, DigitModel};
use frontier_core::report::*;
use frontier_core::road::{RoadDomain, RoadDomainConfig, RoadModel};

fn print_metrics<D: FrontierDomain>(
    archive: &frontier_core::search::Archive<D>,
    domain: &D,
) -> Result<(), ReportError> {
    let radius = radius_report(archive, domain)?;
    println!("{} pairs", archive.len());
    println!("inner radius {:.3}  outer radius {:.3}", radius.inner_radius, radius.outer_radius);
    let validity = validity_summary(archive, domain, D::default_threshold())?;
    println!(
        "valid {}  invalid {}  to review {}",
        validity.valid_count,
        validity.invalid_count,
        validity.undetermined_count()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = PathBuf::from(std::env::args().nth(1).ok_or("usage: frontier_metrics ARCHIVE")?);
    match peek_domain(&path)? {
        DomainKind::Road => {
            let doc: ArchiveDocument<RoadModel> = read_document(&path)?;
            let domain = RoadDomain::new(RoadDomainConfig::with_preset(doc.metadata.preset))?;
            print_metrics(&document_archive(&doc, &domain)?, &domain)?;
        }
        DomainKind::Digit => {
            let doc: ArchiveDocument<DigitModel> = read_document(&path)?;
            let domain = DigitDomain::from_preset(doc.metadata.preset)?;
            print_metrics(&document_archive(&doc, &domain)?, &domain)?;
        }
    }
    Ok(())
}
