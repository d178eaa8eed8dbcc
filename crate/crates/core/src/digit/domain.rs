use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::RngCore;

use super::classifier::{CentroidClassifier, DEFAULT_TEMPERATURE};
use super::corpus::{embedded_corpus, filter_seeds, preset_classifier};
use super::model::{DigitError, DigitModel};
use super::mutation::mutate_digit;
use super::raster::{pixel_distance, rasterize, RasterImage};
use super::synth::SEED_LABEL;
use crate::search::Domain;
use crate::Quality;

/// Digits of one class judged by a centroid classifier.
#[derive(Clone, Debug)]
pub struct DigitDomain {
    classifier: Arc<CentroidClassifier>,
    expected_label: u8,
    seed_pool: Vec<DigitModel>,
}

impl DigitDomain {
    /// Keeps only the pool models the classifier gets right.
    pub fn new(classifier: CentroidClassifier, expected_label: u8, pool: Vec<DigitModel>) -> Self {
        let seed_pool = filter_seeds(pool, &classifier, expected_label);
        Self { classifier: Arc::new(classifier), expected_label, seed_pool }
    }

    /// Classifier and seed fives from the embedded corpus.
    pub fn from_preset(quality: Quality) -> Result<Self, DigitError> {
        Self::with_temperature(quality, DEFAULT_TEMPERATURE)
    }

    pub fn with_temperature(quality: Quality, temperature: f64) -> Result<Self, DigitError> {
        let clf = preset_classifier(quality, temperature)?;
        Ok(Self::new(clf, SEED_LABEL, embedded_corpus().seeds))
    }

    pub fn classifier(&self) -> &CentroidClassifier {
        &self.classifier
    }

    pub fn expected_label(&self) -> u8 {
        self.expected_label
    }

    pub fn seed_pool(&self) -> &[DigitModel] {
        &self.seed_pool
    }
}

impl Domain for DigitDomain {
    type Model = DigitModel;
    type Concrete = RasterImage;

    fn concretize(&self, model: &DigitModel) -> Option<RasterImage> {
        model.check().ok()?;
        Some(rasterize(model))
    }

    fn evaluate(&self, model: &DigitModel, concrete: &RasterImage) -> f64 {
        self.classifier.margin(concrete, model.expected_label)
    }

    fn distance(&self, a: &RasterImage, b: &RasterImage) -> f64 {
        pixel_distance(a, b)
    }

    fn mutate(&self, model: &DigitModel, rng: &mut dyn RngCore, lb: f64, ub: f64) -> DigitModel {
        mutate_digit(model, rng, lb, ub)
    }

    /// Draws without replacement; a pool smaller than `count` is returned whole, shuffled.
    fn generate_seeds(&self, count: usize, rng: &mut dyn RngCore) -> Result<Vec<DigitModel>, String> {
        if self.seed_pool.is_empty() {
            return Err(format!("no correctly classified {} in the seed pool", self.expected_label));
        }
        Ok(self.seed_pool.choose_multiple(rng, count.min(self.seed_pool.len())).cloned().collect())
    }
}
