use std::path::Path;

use log::{debug, info};

use super::classifier::{build_classifier, preset_samples, CentroidClassifier};
use super::model::{DigitError, DigitModel};
use super::raster::{rasterize, RasterImage};
use super::synth::Corpus;
use crate::Quality;

const TRAIN: &str = include_str!("../../data/digits/train.json");
const HELDOUT: &str = include_str!("../../data/digits/heldout.json");
const SEEDS: &str = include_str!("../../data/digits/seeds.json");
const TEMPLATES: &str = include_str!("../../data/digits/templates.json");

pub fn parse_models(text: &str, origin: &str) -> Result<Vec<DigitModel>, DigitError> {
    let models: Vec<DigitModel> =
        serde_json::from_str(text).map_err(|source| DigitError::Schema { path: origin.to_string(), source })?;
    for m in &models {
        m.check()?;
    }
    Ok(models)
}

pub fn load_models(path: &Path) -> Result<Vec<DigitModel>, DigitError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| DigitError::Io { path: path.display().to_string(), source })?;
    parse_models(&text, &path.display().to_string())
}

/// Keeps the models of `expected_label` that `clf` classifies correctly.
pub fn filter_seeds(models: Vec<DigitModel>, clf: &CentroidClassifier, expected_label: u8) -> Vec<DigitModel> {
    let total = models.len();
    let kept: Vec<DigitModel> = models
        .into_iter()
        .enumerate()
        .filter_map(|(i, m)| {
            if m.expected_label != expected_label {
                debug!("skipping seed {i}: labelled {} instead of {expected_label}", m.expected_label);
                return None;
            }
            let margin = clf.margin(&rasterize(&m), expected_label);
            if margin > 0.0 {
                Some(m)
            } else {
                debug!("skipping seed {i}: misclassified (margin {margin:.4})");
                None
            }
        })
        .collect();
    if kept.len() < total {
        info!("kept {} of {total} seeds", kept.len());
    }
    kept
}

pub fn load_seeds(path: &Path, clf: &CentroidClassifier, expected_label: u8) -> Result<Vec<DigitModel>, DigitError> {
    Ok(filter_seeds(load_models(path)?, clf, expected_label))
}

/// The corpus shipped under `data/digits`.
pub fn embedded_corpus() -> Corpus {
    let parse = |text, name| parse_models(text, name).expect("embedded corpus is well formed");
    Corpus {
        train: parse(TRAIN, "train.json"),
        heldout: parse(HELDOUT, "heldout.json"),
        seeds: parse(SEEDS, "seeds.json"),
        templates: parse(TEMPLATES, "templates.json"),
    }
}

pub fn labelled_rasters(models: &[DigitModel]) -> Vec<(u8, RasterImage)> {
    models.iter().map(|m| (m.expected_label, rasterize(m))).collect()
}

/// Classifier trained on the embedded corpus with the preset's sample policy.
pub fn preset_classifier(quality: Quality, temperature: f64) -> Result<CentroidClassifier, DigitError> {
    let samples = labelled_rasters(&embedded_corpus().train);
    build_classifier(&preset_samples(&samples, quality), temperature)
}

/// Writes the corpus as the four JSON files read by `embedded_corpus`.
pub fn write_corpus(corpus: &Corpus, dir: &Path) -> Result<(), DigitError> {
    let io = |source| DigitError::Io { path: dir.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    for (name, models) in [
        ("train.json", &corpus.train),
        ("heldout.json", &corpus.heldout),
        ("seeds.json", &corpus.seeds),
        ("templates.json", &corpus.templates),
    ] {
        let path = dir.join(name);
        let text = serde_json::to_string(models).expect("digit models serialize");
        std::fs::write(&path, text + "\n")
            .map_err(|source| DigitError::Io { path: path.display().to_string(), source })?;
    }
    Ok(())
}
