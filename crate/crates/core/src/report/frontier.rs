use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use super::render::{digit_panel, road_panel};
use crate::digit::{synth, DigitDomain, RasterImage};
use crate::road::{reference_road, RoadConcrete, RoadDomain, MIN_RADIUS_15_MPH};
use crate::search::Domain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    Road,
    Digit,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainKind::Road => "road",
            DomainKind::Digit => "digit",
        })
    }
}

impl FromStr for DomainKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "road" | "roads" => Ok(DomainKind::Road),
            "digit" | "digits" => Ok(DomainKind::Digit),
            other => Err(format!("unknown domain '{other}', expected road or digit")),
        }
    }
}

/// Automatic validity judgement of one frontier input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Invalid,
    /// Needs a human to decide.
    Undetermined,
}

/// Domain hooks used by the frontier analysis.
pub trait FrontierDomain: Domain {
    const KIND: DomainKind;

    /// The reference input the frontier radius is measured from.
    fn reference(&self) -> Self::Model;

    /// Verdict on a misbehaving input and the metric it rests on. `threshold` is in the domain's
    /// validity units (meters of curvature radius for roads).
    fn verdict(&self, concrete: &Self::Concrete, threshold: f64) -> (Verdict, Option<f64>);

    /// Default validity threshold.
    fn default_threshold() -> f64;

    /// SVG fragment drawing one input in a square panel.
    fn panel(&self, model: &Self::Model, concrete: &Self::Concrete) -> String;

    /// Seeds on which every one of `domains` behaves.
    fn shared_seeds(domains: &[&Self], count: usize, rng: &mut dyn RngCore) -> Result<Vec<Self::Model>, String>;
}

impl FrontierDomain for RoadDomain {
    const KIND: DomainKind = DomainKind::Road;

    fn reference(&self) -> Self::Model {
        reference_road(self.config())
    }

    fn verdict(&self, concrete: &RoadConcrete, threshold: f64) -> (Verdict, Option<f64>) {
        let r = concrete.min_curvature_radius();
        (if r >= threshold { Verdict::Valid } else { Verdict::Invalid }, Some(r))
    }

    fn default_threshold() -> f64 {
        MIN_RADIUS_15_MPH
    }

    fn panel(&self, model: &Self::Model, concrete: &RoadConcrete) -> String {
        road_panel(model, concrete, &self.drive(concrete))
    }

    fn shared_seeds(domains: &[&Self], count: usize, rng: &mut dyn RngCore) -> Result<Vec<Self::Model>, String> {
        RoadDomain::shared_seeds(domains, count, rng)
    }
}

impl FrontierDomain for DigitDomain {
    const KIND: DomainKind = DomainKind::Digit;

    fn reference(&self) -> Self::Model {
        synth::template(self.expected_label())
    }

    fn verdict(&self, _concrete: &RasterImage, _threshold: f64) -> (Verdict, Option<f64>) {
        (Verdict::Undetermined, None)
    }

    fn default_threshold() -> f64 {
        0.0
    }

    fn panel(&self, model: &Self::Model, concrete: &RasterImage) -> String {
        digit_panel(model, concrete)
    }

    /// Pool models every classifier gets right, drawn without replacement.
    fn shared_seeds(domains: &[&Self], count: usize, rng: &mut dyn RngCore) -> Result<Vec<Self::Model>, String> {
        let first = domains.first().ok_or("no classifier given")?;
        let pool: Vec<_> =
            first.seed_pool().iter().filter(|m| domains.iter().all(|d| d.seed_pool().contains(m))).cloned().collect();
        if pool.is_empty() {
            return Err("no seed is classified correctly by every classifier".into());
        }
        Ok(pool.choose_multiple(rng, count.min(pool.len())).cloned().collect())
    }
}
