use serde::{Deserialize, Serialize};

use super::frontier::FrontierDomain;
use super::ReportError;
use crate::search::Archive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Behaving members.
    Inner,
    /// Misbehaving members.
    Outer,
}

/// Mean distance of one side of the frontier from the reference input.
pub fn frontier_radius<D: FrontierDomain>(
    archive: &Archive<D>,
    side: Side,
    reference: &D::Model,
    domain: &D,
) -> Result<f64, ReportError> {
    if archive.is_empty() {
        return Err(ReportError::EmptyArchive);
    }
    let omega = domain.concretize(reference).ok_or(ReportError::InvalidReference)?;
    let total: f64 = archive
        .entries()
        .iter()
        .map(|e| {
            let m = match side {
                Side::Inner => &e.individual.m1,
                Side::Outer => &e.individual.m2,
            };
            domain.distance(m.concrete(), &omega)
        })
        .sum();
    Ok(total / archive.len() as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport<M> {
    pub inner_radius: f64,
    pub outer_radius: f64,
    pub reference: M,
    pub inner_set_size: usize,
    pub outer_set_size: usize,
}

/// Both radii measured from the domain's reference input.
pub fn radius_report<D: FrontierDomain>(
    archive: &Archive<D>,
    domain: &D,
) -> Result<RadiusReport<D::Model>, ReportError> {
    let reference = domain.reference();
    Ok(RadiusReport {
        inner_radius: frontier_radius(archive, Side::Inner, &reference, domain)?,
        outer_radius: frontier_radius(archive, Side::Outer, &reference, domain)?,
        reference,
        inner_set_size: archive.len(),
        outer_set_size: archive.len(),
    })
}
