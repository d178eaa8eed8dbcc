//! Command line front end shared by the `frontier` binary and its tests.

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};

use super::compare::{compare_presets, comparison_table};
use super::config::{DigitSettings, RunConfig};
use super::export::{export_archive, import_archive, peek_domain, read_document, RunMetadata, Timing};
use super::frontier::{DomainKind, FrontierDomain, Verdict};
use super::radius::radius_report;
use super::render::render_frontier;
use super::validity::validity_summary;
use super::ReportError;
use crate::digit::DigitDomain;
use crate::road::{RoadDomain, RoadDomainConfig};
use crate::search::run_search;
use crate::Quality;

const METERS_PER_FOOT: f64 = 0.3048;

#[derive(Debug, Parser)]
#[command(name = "frontier", version, about = "Search and inspect frontiers of behaviours")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a search and export its archive.
    Explore(ExploreArgs),
    /// Inner and outer frontier radius of an exported archive.
    Radius(ArchiveArgs),
    /// Automatic validity judgement of the misbehaving inputs of an exported archive.
    Validity(ValidityArgs),
    /// One SVG per archived pair.
    Render(RenderArgs),
    /// Run both presets on shared seeds and tabulate the frontiers.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// TOML run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Domain, when no configuration file is given or to check the file's.
    #[arg(long)]
    pub domain: Option<DomainKind>,
    /// Overrides the configured random seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long)]
    pub preset: Option<Quality>,
    /// Directory receiving archive.json and events.log.
    #[arg(long, default_value = "frontier-out")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ArchiveArgs {
    #[arg(long)]
    pub archive: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidityArgs {
    #[arg(long)]
    pub archive: PathBuf,
    /// Minimum curvature radius of a valid road, in feet.
    #[arg(long, default_value_t = 47.0)]
    pub threshold: f64,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub archive: PathBuf,
    #[arg(long, default_value = "frontier-svg")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    /// Minimum curvature radius of a valid road, in feet.
    #[arg(long, default_value_t = 47.0)]
    pub threshold: f64,
    /// Also export every run's archives here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn load_config(args: &RunArgs) -> Result<RunConfig, ReportError> {
    let mut config = match (&args.config, args.domain) {
        (Some(path), domain) => {
            let config = RunConfig::load(path)?;
            if let Some(d) = domain.filter(|d| *d != config.domain) {
                return Err(ReportError::Config(format!(
                    "{} configures the {} domain, not {d}",
                    path.display(),
                    config.domain
                )));
            }
            config
        }
        (None, Some(domain)) => RunConfig::defaults(domain),
        (None, None) => return Err(ReportError::Config("give --config or --domain".into())),
    };
    if let Some(seed) = args.seed {
        config.search.rng_seed = seed;
    }
    Ok(config)
}

fn feet(threshold: f64) -> f64 {
    threshold * METERS_PER_FOOT
}

/// Runs one command and returns the text to print.
pub fn run(cli: Cli) -> Result<String, ReportError> {
    match cli.command {
        Command::Explore(args) => explore(&args),
        Command::Radius(args) => with_archive(&args.archive, Radius),
        Command::Validity(args) => with_archive(&args.archive, Validity(feet(args.threshold))),
        Command::Render(args) => with_archive(&args.archive, Render(args.out)),
        Command::Compare(args) => compare(&args),
    }
}

fn explore(args: &ExploreArgs) -> Result<String, ReportError> {
    let mut config = load_config(&args.run)?;
    if let Some(preset) = args.preset {
        config.preset = preset;
    }
    match config.domain {
        DomainKind::Road => explore_with(&config, &config.road_domain(config.preset)?, &args.out),
        DomainKind::Digit => explore_with(&config, &config.digit_domain(config.preset)?, &args.out),
    }
}

fn explore_with<D: FrontierDomain>(config: &RunConfig, domain: &D, out: &Path) -> Result<String, ReportError> {
    let start = Instant::now();
    let run = run_search(&config.search, domain)?;
    let exported_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    let metadata = RunMetadata {
        preset: config.preset,
        config: config.search.clone(),
        domain_config: config.domain_json(),
        rng_seed: config.search.rng_seed,
        generations: run.generations,
        timing: Some(Timing { exported_at, wall_time_s: start.elapsed().as_secs_f64() }),
    };
    let archive_path = out.join("archive.json");
    export_archive(&run.archive, metadata, &archive_path)?;
    let log_path = out.join("events.log");
    std::fs::write(&log_path, run.archive.event_log()).map_err(|e| ReportError::io(&log_path, e))?;
    // The initial population alone rarely crosses the frontier.
    if run.archive.is_empty() && run.generations > 0 {
        return Err(ReportError::EmptyArchive);
    }
    Ok(format!(
        "{} {} search: {} generations, archive of {} pairs, {} skipped mutations\nwrote {} and {}\n",
        config.domain,
        config.preset,
        run.generations,
        run.archive.len(),
        run.skipped_mutations,
        archive_path.display(),
        log_path.display()
    ))
}

/// Operation on an imported archive, whatever its domain.
trait ArchiveOp {
    fn apply<D: FrontierDomain>(self, archive: &crate::search::Archive<D>, domain: &D) -> Result<String, ReportError>;
}

fn with_archive(path: &Path, op: impl ArchiveOp) -> Result<String, ReportError> {
    match peek_domain(path)? {
        DomainKind::Road => {
            let doc = read_document::<crate::road::RoadModel>(path)?;
            let config: RoadDomainConfig =
                serde_json::from_value(doc.metadata.domain_config.clone()).map_err(|e| ReportError::parse(path, e))?;
            let domain = RoadDomain::new(RoadDomainConfig { preset: doc.metadata.preset, ..config })
                .map_err(ReportError::Config)?;
            let (archive, _) = import_archive(path, &domain)?;
            op.apply(&archive, &domain)
        }
        DomainKind::Digit => {
            let doc = read_document::<crate::digit::DigitModel>(path)?;
            let settings: DigitSettings =
                serde_json::from_value(doc.metadata.domain_config.clone()).map_err(|e| ReportError::parse(path, e))?;
            let domain: DigitDomain = settings.build(doc.metadata.preset)?;
            let (archive, _) = import_archive(path, &domain)?;
            op.apply(&archive, &domain)
        }
    }
}

struct Radius;

impl ArchiveOp for Radius {
    fn apply<D: FrontierDomain>(self, archive: &crate::search::Archive<D>, domain: &D) -> Result<String, ReportError> {
        let r = radius_report(archive, domain)?;
        Ok(format!(
            "inner radius {:.4} over {} inputs\nouter radius {:.4} over {} inputs\n",
            r.inner_radius, r.inner_set_size, r.outer_radius, r.outer_set_size
        ))
    }
}

struct Validity(f64);

impl ArchiveOp for Validity {
    fn apply<D: FrontierDomain>(self, archive: &crate::search::Archive<D>, domain: &D) -> Result<String, ReportError> {
        let s = validity_summary(archive, domain, self.0)?;
        let mut out = String::new();
        for e in &s.entries {
            let verdict = match e.verdict {
                Verdict::Valid => "valid",
                Verdict::Invalid => "invalid",
                Verdict::Undetermined => "needs review",
            };
            let metric = e.metric.map_or(String::new(), |m| format!(" min radius {m:.2} m"));
            out += &format!(
                "entry {:3}: {verdict}{metric}, distance to reference {:.3}\n",
                e.index, e.distance_to_reference
            );
        }
        out += &format!("valid {} invalid {} undetermined {}", s.valid_count, s.invalid_count, s.undetermined_count());
        out += &match D::KIND {
            DomainKind::Road => format!(" (minimum curvature radius {:.4} m)\n", s.threshold),
            DomainKind::Digit => " (digits are judged by a person)\n".to_string(),
        };
        Ok(out)
    }
}

struct Render(PathBuf);

impl ArchiveOp for Render {
    fn apply<D: FrontierDomain>(self, archive: &crate::search::Archive<D>, domain: &D) -> Result<String, ReportError> {
        let files = render_frontier(archive, domain, &self.0)?;
        Ok(format!("wrote {} SVG files to {}\n", files.len(), self.0.display()))
    }
}

fn compare(args: &CompareArgs) -> Result<String, ReportError> {
    let config = load_config(&args.run)?;
    let threshold = feet(args.threshold);
    match config.domain {
        DomainKind::Road => {
            let hq = config.road_domain(Quality::High)?;
            let lq = config.road_domain(Quality::Low)?;
            compare_with(&config, &hq, &lq, args.runs, threshold, args.out.as_deref())
        }
        DomainKind::Digit => {
            let hq = config.digit_domain(Quality::High)?;
            let lq = config.digit_domain(Quality::Low)?;
            compare_with(&config, &hq, &lq, args.runs, threshold, args.out.as_deref())
        }
    }
}

fn compare_with<D: FrontierDomain>(
    config: &RunConfig,
    hq: &D,
    lq: &D,
    runs: usize,
    threshold: f64,
    out: Option<&Path>,
) -> Result<String, ReportError> {
    if runs == 0 {
        return Err(ReportError::Config("--runs must be at least 1".into()));
    }
    let cmp = compare_presets(hq, lq, &config.search, runs, config.search.rng_seed, threshold)?;
    if let Some(dir) = out {
        for paired in &cmp.runs {
            for (preset, run, summary) in
                [(Quality::High, &paired.hq, &paired.hq_summary), (Quality::Low, &paired.lq, &paired.lq_summary)]
            {
                let mut search = config.search.clone();
                search.rng_seed = paired.rng_seed;
                let metadata = RunMetadata {
                    preset,
                    config: search,
                    domain_config: config.domain_json(),
                    rng_seed: paired.rng_seed,
                    generations: run.generations,
                    timing: Some(Timing { exported_at: 0, wall_time_s: summary.wall_time_s }),
                };
                let path = dir.join(format!("run_{:03}_{preset}.json", paired.rng_seed));
                export_archive(&run.archive, metadata, &path)?;
            }
        }
    }
    let mut text = String::new();
    for p in &cmp.runs {
        let fmt = |r: Option<f64>| r.map_or("n/a".to_string(), |v| format!("{v:.3}"));
        text += &format!(
            "seed {}: hq archive {} outer {} | lq archive {} outer {}\n",
            p.rng_seed,
            p.hq_summary.archive_size,
            fmt(p.hq_summary.outer_radius),
            p.lq_summary.archive_size,
            fmt(p.lq_summary.outer_radius)
        );
    }
    text += &comparison_table(cmp.domain, &cmp.hq, &cmp.lq);
    if cmp.hq.productive_runs + cmp.lq.productive_runs == 0 {
        return Err(ReportError::EmptyArchive);
    }
    Ok(text)
}
