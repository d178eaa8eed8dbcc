use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::frontier::{DomainKind, FrontierDomain};
use super::radius::radius_report;
use super::validity::validity_summary;
use super::ReportError;
use crate::search::{run_search_with_seeds, SearchConfig, SearchRun};
use crate::Quality;

/// Frontier figures of one search run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub preset: Quality,
    pub rng_seed: u64,
    pub archive_size: usize,
    /// `None` for an empty archive.
    pub inner_radius: Option<f64>,
    pub outer_radius: Option<f64>,
    pub valid: usize,
    pub invalid: usize,
    pub undetermined: usize,
    pub wall_time_s: f64,
}

pub fn summarize_run<D: FrontierDomain>(
    run: &SearchRun<D>,
    domain: &D,
    preset: Quality,
    rng_seed: u64,
    threshold: f64,
    wall_time_s: f64,
) -> Result<RunSummary, ReportError> {
    let mut summary = RunSummary {
        preset,
        rng_seed,
        archive_size: run.archive.len(),
        inner_radius: None,
        outer_radius: None,
        valid: 0,
        invalid: 0,
        undetermined: 0,
        wall_time_s,
    };
    if !run.archive.is_empty() {
        let radius = radius_report(&run.archive, domain)?;
        summary.inner_radius = Some(radius.inner_radius);
        summary.outer_radius = Some(radius.outer_radius);
        let validity = validity_summary(&run.archive, domain, threshold)?;
        summary.valid = validity.valid_count;
        summary.invalid = validity.invalid_count;
        summary.undetermined = validity.undetermined_count();
    }
    Ok(summary)
}

/// Paired HQ and LQ runs that share the seed set and the random stream.
pub struct PairedRun<D: FrontierDomain> {
    pub rng_seed: u64,
    pub hq: SearchRun<D>,
    pub lq: SearchRun<D>,
    pub hq_summary: RunSummary,
    pub lq_summary: RunSummary,
}

/// Aggregate over the runs of one preset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresetStats {
    pub preset: Quality,
    pub runs: usize,
    /// Runs whose archive is non-empty; radii are averaged over these.
    pub productive_runs: usize,
    pub archive_size: MeanSd,
    pub inner_radius: Option<MeanSd>,
    pub outer_radius: Option<MeanSd>,
    pub valid: usize,
    pub invalid: usize,
    pub undetermined: usize,
}

impl PresetStats {
    pub fn from_runs(preset: Quality, runs: &[RunSummary]) -> Self {
        let sizes: Vec<f64> = runs.iter().map(|r| r.archive_size as f64).collect();
        let inner: Vec<f64> = runs.iter().filter_map(|r| r.inner_radius).collect();
        let outer: Vec<f64> = runs.iter().filter_map(|r| r.outer_radius).collect();
        Self {
            preset,
            runs: runs.len(),
            productive_runs: outer.len(),
            archive_size: MeanSd::of(&sizes).unwrap_or_default(),
            inner_radius: MeanSd::of(&inner),
            outer_radius: MeanSd::of(&outer),
            valid: runs.iter().map(|r| r.valid).sum(),
            invalid: runs.iter().map(|r| r.invalid).sum(),
            undetermined: runs.iter().map(|r| r.undetermined).sum(),
        }
    }

    /// Valid share of the automatically judged outer inputs, pooled over runs.
    pub fn valid_fraction(&self) -> Option<f64> {
        let judged = self.valid + self.invalid;
        (judged > 0).then(|| self.valid as f64 / judged as f64)
    }
}

/// Mean and sample standard deviation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MeanSd {
    pub mean: f64,
    pub sd: f64,
}

impl MeanSd {
    pub fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let sd = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Some(Self { mean, sd })
    }
}

pub struct Comparison<D: FrontierDomain> {
    pub domain: DomainKind,
    pub runs: Vec<PairedRun<D>>,
    pub hq: PresetStats,
    pub lq: PresetStats,
}

/// Runs both presets `runs` times. Run `i` uses `rng_seed = base_seed + i` for the seed draw and
/// the search of both presets.
pub fn compare_presets<D: FrontierDomain>(
    hq: &D,
    lq: &D,
    config: &SearchConfig,
    runs: usize,
    base_seed: u64,
    threshold: f64,
) -> Result<Comparison<D>, ReportError> {
    let mut paired = Vec::with_capacity(runs);
    for i in 0..runs as u64 {
        let rng_seed = base_seed.wrapping_add(i);
        let mut cfg = config.clone();
        cfg.rng_seed = rng_seed;
        cfg.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let seeds = D::shared_seeds(&[hq, lq], cfg.seed_count(), &mut rng).map_err(ReportError::Seeds)?;

        let timed = |domain: &D| -> Result<(SearchRun<D>, f64), ReportError> {
            let start = Instant::now();
            let run = run_search_with_seeds(&cfg, domain, seeds.clone())?;
            Ok((run, start.elapsed().as_secs_f64()))
        };
        let (hq_run, hq_time) = timed(hq)?;
        let (lq_run, lq_time) = timed(lq)?;
        let hq_summary = summarize_run(&hq_run, hq, Quality::High, rng_seed, threshold, hq_time)?;
        let lq_summary = summarize_run(&lq_run, lq, Quality::Low, rng_seed, threshold, lq_time)?;
        log::info!(
            "run {i}: hq archive {} outer {:?}, lq archive {} outer {:?}",
            hq_summary.archive_size,
            hq_summary.outer_radius,
            lq_summary.archive_size,
            lq_summary.outer_radius
        );
        paired.push(PairedRun { rng_seed, hq: hq_run, lq: lq_run, hq_summary, lq_summary });
    }
    let hq_runs: Vec<RunSummary> = paired.iter().map(|p| p.hq_summary.clone()).collect();
    let lq_runs: Vec<RunSummary> = paired.iter().map(|p| p.lq_summary.clone()).collect();
    Ok(Comparison {
        domain: D::KIND,
        runs: paired,
        hq: PresetStats::from_runs(Quality::High, &hq_runs),
        lq: PresetStats::from_runs(Quality::Low, &lq_runs),
    })
}

fn cell(v: Option<MeanSd>) -> String {
    match v {
        Some(m) => format!("{:.3} ± {:.3}", m.mean, m.sd),
        None => "n/a".to_string(),
    }
}

/// Side-by-side table of the two presets.
pub fn comparison_table(domain: DomainKind, hq: &PresetStats, lq: &PresetStats) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<7} {:>6} {:>16} {:>20} {:>20} {:>6} {:>8} {:>13} {:>8}",
        "preset", "runs", "archive size", "inner radius", "outer radius", "valid", "invalid", "undetermined", "valid %"
    );
    for s in [hq, lq] {
        let fraction = s.valid_fraction().map_or("n/a".to_string(), |f| format!("{:.1}", 100.0 * f));
        let _ = writeln!(
            out,
            "{:<7} {:>6} {:>16} {:>20} {:>20} {:>6} {:>8} {:>13} {:>8}",
            s.preset.to_string(),
            format!("{}/{}", s.productive_runs, s.runs),
            format!("{:.1} ± {:.1}", s.archive_size.mean, s.archive_size.sd),
            cell(s.inner_radius),
            cell(s.outer_radius),
            s.valid,
            s.invalid,
            s.undetermined,
            fraction
        );
    }
    let unit = match domain {
        DomainKind::Road => "radii: edit distance to a straight road; validity: min curvature radius >= 47 ft",
        DomainKind::Digit => "radii: pixel distance to the digit template; validity needs human judgement",
    };
    let _ = writeln!(out, "({unit}; runs column counts runs with a non-empty archive)");
    out
}
