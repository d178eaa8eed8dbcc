use serde::{Deserialize, Serialize};

use super::model::DigitError;
use super::raster::{RasterImage, PIXELS};
use crate::Quality;

pub const CLASSES: usize = 10;
pub const DEFAULT_TEMPERATURE: f64 = 200.0;

/// Nearest-centroid classifier with softmax confidences over negative centroid distances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentroidClassifier {
    centroids: Vec<Vec<f64>>,
    temperature: f64,
}

impl CentroidClassifier {
    pub fn centroids(&self) -> &[Vec<f64>] {
        &self.centroids
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn distances(&self, image: &RasterImage) -> [f64; CLASSES] {
        let mut out = [0.0; CLASSES];
        for (c, centroid) in self.centroids.iter().enumerate() {
            out[c] = image.pixels().iter().zip(centroid).map(|(&p, &m)| (p as f64 - m).powi(2)).sum::<f64>().sqrt();
        }
        out
    }

    pub fn confidences(&self, image: &RasterImage) -> [f64; CLASSES] {
        let dist = self.distances(image);
        let logits = dist.map(|d| -d / self.temperature);
        let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let exp = logits.map(|l| (l - max).exp());
        let total: f64 = exp.iter().sum();
        exp.map(|e| e / total)
    }

    /// Class of the nearest centroid, lowest index on ties.
    pub fn predict(&self, image: &RasterImage) -> u8 {
        let dist = self.distances(image);
        let mut best = 0;
        for c in 1..CLASSES {
            if dist[c] < dist[best] {
                best = c;
            }
        }
        best as u8
    }

    /// `conf[expected] - max_{c != expected} conf[c]`.
    pub fn margin(&self, image: &RasterImage, expected: u8) -> f64 {
        let conf = self.confidences(image);
        let e = expected as usize;
        let other = conf.iter().enumerate().filter(|&(c, _)| c != e).map(|(_, &v)| v).fold(f64::NEG_INFINITY, f64::max);
        conf[e] - other
    }

    pub fn accuracy(&self, samples: &[(u8, RasterImage)]) -> f64 {
        if samples.is_empty() {
            return 0.0;
        }
        let hits = samples.iter().filter(|(l, img)| self.predict(img) == *l).count();
        hits as f64 / samples.len() as f64
    }
}

pub fn classify_margin(image: &RasterImage, clf: &CentroidClassifier, expected: u8) -> f64 {
    clf.margin(image, expected)
}

/// Per-class pixel means of the labelled samples.
pub fn build_classifier(samples: &[(u8, RasterImage)], temperature: f64) -> Result<CentroidClassifier, DigitError> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(DigitError::BadTemperature(temperature));
    }
    let mut sums = vec![vec![0.0; PIXELS]; CLASSES];
    let mut counts = [0usize; CLASSES];
    for (label, img) in samples {
        if *label as usize >= CLASSES {
            return Err(DigitError::BadLabel(*label));
        }
        counts[*label as usize] += 1;
        for (s, &p) in sums[*label as usize].iter_mut().zip(img.pixels()) {
            *s += p as f64;
        }
    }
    if let Some(c) = counts.iter().position(|&n| n == 0) {
        return Err(DigitError::EmptyClass(c as u8));
    }
    for (sum, &n) in sums.iter_mut().zip(&counts) {
        sum.iter_mut().for_each(|s| *s /= n as f64);
    }
    Ok(CentroidClassifier { centroids: sums, temperature })
}

/// HQ uses every sample; LQ keeps only the first sample of each class.
pub fn preset_samples(samples: &[(u8, RasterImage)], quality: Quality) -> Vec<(u8, RasterImage)> {
    match quality {
        Quality::High => samples.to_vec(),
        Quality::Low => {
            let mut seen = [false; CLASSES];
            samples
                .iter()
                .filter(|(l, _)| {
                    let first = !seen[*l as usize % CLASSES];
                    seen[*l as usize % CLASSES] = true;
                    first
                })
                .cloned()
                .collect()
        }
    }
}
