use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::frontier::DomainKind;
use super::ReportError;
use crate::digit::{load_seeds, preset_classifier, DigitDomain, DEFAULT_TEMPERATURE};
use crate::road::{RoadDomain, RoadDomainConfig};
use crate::search::SearchConfig;
use crate::Quality;

/// Digit domain settings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DigitSettings {
    pub temperature: f64,
    pub expected_label: u8,
    /// JSON list of digit models; the embedded fives when unset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_file: Option<PathBuf>,
}

impl Default for DigitSettings {
    fn default() -> Self {
        Self { temperature: DEFAULT_TEMPERATURE, expected_label: 5, seed_file: None }
    }
}

impl DigitSettings {
    pub fn build(&self, preset: Quality) -> Result<DigitDomain, ReportError> {
        let classifier = preset_classifier(preset, self.temperature)?;
        match &self.seed_file {
            None if self.expected_label == 5 => Ok(DigitDomain::with_temperature(preset, self.temperature)?),
            None => Err(ReportError::Config(format!(
                "the embedded seeds are fives; give digit.seed_file for label {}",
                self.expected_label
            ))),
            Some(path) => {
                let pool = load_seeds(path, &classifier, self.expected_label)?;
                Ok(DigitDomain::new(classifier, self.expected_label, pool))
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRunConfig {
    domain: DomainKind,
    #[serde(default)]
    preset: Quality,
    #[serde(default)]
    search: Option<toml::Table>,
    #[serde(default)]
    road: RoadDomainConfig,
    #[serde(default)]
    digit: DigitSettings,
}

/// Contents of a run configuration file. `[search]` keys override the domain's defaults.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub domain: DomainKind,
    pub preset: Quality,
    pub search: SearchConfig,
    pub road: RoadDomainConfig,
    pub digit: DigitSettings,
}

impl RunConfig {
    /// Defaults of a domain, with nothing overridden.
    pub fn defaults(domain: DomainKind) -> Self {
        Self {
            domain,
            preset: Quality::High,
            search: default_search(domain),
            road: RoadDomainConfig::default(),
            digit: DigitSettings::default(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, ReportError> {
        let raw: RawRunConfig = toml::from_str(text).map_err(|e| ReportError::Config(e.to_string()))?;
        let mut search = toml::Table::try_from(default_search(raw.domain)).expect("search config serializes");
        if let Some(overrides) = raw.search {
            search.extend(overrides);
        }
        let search: SearchConfig =
            search.try_into().map_err(|e: toml::de::Error| ReportError::Config(e.to_string()))?;
        search.validate()?;
        Ok(Self { domain: raw.domain, preset: raw.preset, search, road: raw.road, digit: raw.digit })
    }

    /// Reads a file; relative `digit.seed_file` paths resolve against the file's directory.
    pub fn load(path: &Path) -> Result<Self, ReportError> {
        let text = std::fs::read_to_string(path).map_err(|e| ReportError::io(path, e))?;
        let mut config = Self::from_toml(&text).map_err(|e| match e {
            ReportError::Config(msg) => ReportError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        if let (Some(seed_file), Some(dir)) = (&config.digit.seed_file, path.parent()) {
            if seed_file.is_relative() {
                config.digit.seed_file = Some(dir.join(seed_file));
            }
        }
        Ok(config)
    }

    pub fn road_domain(&self, preset: Quality) -> Result<RoadDomain, ReportError> {
        let config = RoadDomainConfig { preset, ..self.road.clone() };
        RoadDomain::new(config).map_err(ReportError::Config)
    }

    pub fn digit_domain(&self, preset: Quality) -> Result<DigitDomain, ReportError> {
        self.digit.build(preset)
    }

    /// Domain section as recorded in exported archives.
    pub fn domain_json(&self) -> serde_json::Value {
        match self.domain {
            DomainKind::Road => serde_json::to_value(&self.road),
            DomainKind::Digit => serde_json::to_value(&self.digit),
        }
        .expect("domain settings serialize")
    }
}

pub fn default_search(domain: DomainKind) -> SearchConfig {
    match domain {
        DomainKind::Road => SearchConfig::road_defaults(),
        DomainKind::Digit => SearchConfig::digit_defaults(),
    }
}
