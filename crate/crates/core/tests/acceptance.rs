//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::{Duration, Instant};

use common::oracle::{brute_force_fronts, circle_spine, edit_distance_dp, pixel_distance_naive, replay_archive_events};
use frontier_core::digit::{pixel_distance, rasterize, DigitDomain, RasterImage, PIXELS};
use frontier_core::drive::{lane_eval, simulate_drive, ControllerParams, Outcome, DEFAULT_DT, DEFAULT_MAX_STEPS};
use frontier_core::report::{archive_document, compare_presets, FrontierDomain, RunMetadata};
use frontier_core::road::*;
use frontier_core::search::{fitness_frontier, nondominated_sort, run_search, Domain, SearchConfig, SearchRun};
use frontier_core::Quality;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIGIT_BUDGET: Duration = Duration::from_secs(60);
const ROAD_BUDGET: Duration = Duration::from_secs(180);
const SPINE_TOLERANCE: f64 = 1e-9;
const CURVATURE_TOLERANCE: f64 = 0.01;
const PIXEL_TOLERANCE: f64 = 1e-9;
const STRAIGHT_TOLERANCE: f64 = 1e-3;
/// Paired road runs behind the two direction checks.
const PAIRED_RUNS: usize = 8;
const PAIRED_BASE_SEED: u64 = 1;

/// Why a criterion failed.
#[derive(Clone, Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Checked = Result<String, Failure>;

fn fail<T>(detail: String) -> Result<T, Failure> {
    Err(Failure(detail))
}

fn check(ok: bool, detail: String) -> Checked {
    if ok {
        Ok(detail)
    } else {
        fail(detail)
    }
}

fn sound<D: Domain>(run: &SearchRun<D>) -> Result<(), Failure> {
    for (i, e) in run.archive.entries().iter().enumerate() {
        let Some((a, b)) = e.individual.evals() else {
            return fail(format!("entry {i} not evaluated"));
        };
        if !(a > 0.0 && b < 0.0) {
            return fail(format!("entry {i} has evals {a} / {b}"));
        }
    }
    let held = replay_archive_events(run.archive.events()).map_err(Failure)?;
    let ids: Vec<u64> = run.archive.entries().iter().map(|e| e.individual.id).collect();
    if held != ids {
        return fail("event log replay does not reproduce the archive".into());
    }
    Ok(())
}

fn archive_soundness() -> Checked {
    let mut details = Vec::new();

    let mut digit_cfg = SearchConfig::digit_defaults();
    digit_cfg.popsize = 25;
    digit_cfg.g_max = 150;
    let digits = DigitDomain::from_preset(Quality::High)?;
    let start = Instant::now();
    let run = run_search(&digit_cfg, &digits)?;
    let took = start.elapsed();
    sound(&run).map_err(|e| Failure(format!("digit: {}", e.0)))?;
    if took > DIGIT_BUDGET {
        return fail(format!("digit run took {took:.1?}, budget {DIGIT_BUDGET:?}"));
    }
    details.push(format!("digit {} entries in {took:.1?}", run.archive.len()));

    for quality in [Quality::High, Quality::Low] {
        let mut road_cfg = SearchConfig::road_defaults();
        road_cfg.g_max = 40;
        road_cfg.rng_seed = 3;
        let roads = RoadDomain::new(RoadDomainConfig::with_preset(quality))?;
        let start = Instant::now();
        let run = run_search(&road_cfg, &roads)?;
        let took = start.elapsed();
        sound(&run).map_err(|e| Failure(format!("road {quality}: {}", e.0)))?;
        if took > ROAD_BUDGET {
            return fail(format!("road {quality} run took {took:.1?}, budget {ROAD_BUDGET:?}"));
        }
        details.push(format!("road {quality} {} entries in {took:.1?}", run.archive.len()));
    }
    Ok(details.join(", "))
}

fn oracle_equivalence() -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..200 {
        let n = rng.gen_range(1..=30);
        // coarse grid so that ties and duplicates occur
        let objs: Vec<[f64; 2]> = (0..n).map(|_| [rng.gen_range(-4..4) as f64, rng.gen_range(-4..4) as f64]).collect();
        if nondominated_sort(&objs) != brute_force_fronts(&objs) {
            return fail(format!("population {k} sorted differently: {objs:?}"));
        }
    }
    let params = SeedRoadParams::default();
    for k in 0..100 {
        let a = catmull_rom_interpolate(&generate_seed_road(&mut rng, &params)?, DEFAULT_SAMPLES_PER_SEGMENT)?;
        let b = catmull_rom_interpolate(&generate_seed_road(&mut rng, &params)?, DEFAULT_SAMPLES_PER_SEGMENT)?;
        let oracle = edit_distance_dp(&turning_tokens(&a, RESAMPLE_STEP), &turning_tokens(&b, RESAMPLE_STEP));
        if road_distance(&a, &b) != oracle {
            return fail(format!("road pair {k}: {} vs {oracle}", road_distance(&a, &b)));
        }
    }
    let corpus = frontier_core::digit::embedded_corpus();
    let mut worst = 0.0f64;
    for k in 0..100 {
        let a = if k % 2 == 0 {
            rasterize(&corpus.train[k])
        } else {
            RasterImage::from_pixels((0..PIXELS).map(|_| rng.gen()).collect()).unwrap()
        };
        let b = rasterize(&corpus.seeds[k]);
        worst = worst.max((pixel_distance(&a, &b) - pixel_distance_naive(&a, &b)).abs());
    }
    check(
        worst < PIXEL_TOLERANCE,
        format!("200 sorts exact, 100 road pairs exact, pixel error {worst:.1e} (tol {PIXEL_TOLERANCE:.0e})"),
    )
}

fn geometry() -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst_spine = 0.0f64;
    for _ in 0..50 {
        let m = generate_seed_road(&mut rng, &SeedRoadParams::default())?;
        let g = catmull_rom_interpolate(&m, DEFAULT_SAMPLES_PER_SEGMENT)?;
        for (k, cp) in m.control_points[1..m.control_points.len() - 1].iter().enumerate() {
            worst_spine = worst_spine.max(g.spine[k * DEFAULT_SAMPLES_PER_SEGMENT].distance(*cp));
        }
    }
    let mut worst_curvature = 0.0f64;
    for r in [20.0, 50.0, 100.0] {
        let g = RoadGeometry::from_spine(circle_spine(r, FRAC_PI_2))?;
        worst_curvature = worst_curvature.max((min_curvature_radius(&g) - r).abs() / r);
    }
    let straight = catmull_rom_interpolate(&straight_road(150.0, 25.0), DEFAULT_SAMPLES_PER_SEGMENT)?;
    let deviation = straight.spine.iter().map(|p| p.y.abs()).fold(0.0, f64::max);
    check(
        worst_spine < SPINE_TOLERANCE && worst_curvature < CURVATURE_TOLERANCE && deviation < SPINE_TOLERANCE,
        format!(
            "interior error {worst_spine:.1e} m, curvature error {:.3}% (tol 1%), straight deviation {deviation:.1e} m",
            100.0 * worst_curvature
        ),
    )
}

fn frontier_fitness_table() -> Checked {
    let values = [-2.5, -1.0, -0.25, -0.0, 0.0, 0.25, 1.0, 2.5];
    let mut cases = 0;
    for &a in &values {
        for &b in &values {
            let want = if a * b > 0.0 { a * b } else { -1.0 };
            if fitness_frontier(a, b) != want {
                return fail(format!("f({a}, {b}) = {} instead of {want}", fitness_frontier(a, b)));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} sign/zero combinations"))
}

/// Both direction checks share one set of paired runs.
struct Paired {
    hq_radius: Option<f64>,
    lq_radius: Option<f64>,
    hq_valid: Option<f64>,
    lq_valid: Option<f64>,
    detail: String,
}

fn paired_runs() -> Result<Paired, Failure> {
    let hq = RoadDomain::new(RoadDomainConfig::with_preset(Quality::High))?;
    let lq = RoadDomain::new(RoadDomainConfig::with_preset(Quality::Low))?;
    let config = SearchConfig::road_defaults();
    let cmp = compare_presets(&hq, &lq, &config, PAIRED_RUNS, PAIRED_BASE_SEED, RoadDomain::default_threshold())?;
    let detail = format!(
        "{} runs (t_a {}, g_max {}), non-empty archives hq {} lq {}",
        PAIRED_RUNS, config.threshold_ta, config.g_max, cmp.hq.productive_runs, cmp.lq.productive_runs
    );
    Ok(Paired {
        hq_radius: cmp.hq.outer_radius.map(|m| m.mean),
        lq_radius: cmp.lq.outer_radius.map(|m| m.mean),
        hq_valid: cmp.hq.valid_fraction().map(|f| f * 100.0),
        lq_valid: cmp.lq.valid_fraction().map(|f| f * 100.0),
        detail: format!(
            "{detail}; valid outer roads hq {}/{} lq {}/{}",
            cmp.hq.valid,
            cmp.hq.valid + cmp.hq.invalid,
            cmp.lq.valid,
            cmp.lq.valid + cmp.lq.invalid
        ),
    })
}

fn radius_direction(p: &Result<Paired, Failure>) -> Checked {
    let p = p.as_ref().map_err(Clone::clone)?;
    match (p.hq_radius, p.lq_radius) {
        (Some(h), Some(l)) => check(h > l, format!("mean outer radius hq {h:.3} vs lq {l:.3}; {}", p.detail)),
        _ => fail(format!("a preset never reached the frontier; {}", p.detail)),
    }
}

fn validity_direction(p: &Result<Paired, Failure>) -> Checked {
    let p = p.as_ref().map_err(Clone::clone)?;
    match (p.hq_valid, p.lq_valid) {
        (Some(h), Some(l)) => check(l > h, format!("valid share hq {h:.1}% vs lq {l:.1}%; {}", p.detail)),
        _ => fail(format!("a preset never reached the frontier; {}", p.detail)),
    }
}

/// Deterministic export of one run, and the JSON of its entries alone.
fn export_of<D: FrontierDomain>(config: &SearchConfig, domain: &D) -> Result<(String, String), Failure> {
    let run = run_search(config, domain)?;
    let metadata = RunMetadata {
        preset: Quality::Low,
        config: config.clone(),
        domain_config: serde_json::Value::Null,
        rng_seed: config.rng_seed,
        generations: run.generations,
        timing: None,
    };
    let doc = archive_document(&run.archive, metadata);
    Ok((doc.deterministic_json(), serde_json::to_string(&doc.entries)?))
}

fn determinism() -> Checked {
    let roads = RoadDomain::new(RoadDomainConfig::with_preset(Quality::Low))?;
    let digits = DigitDomain::from_preset(Quality::Low)?;
    let mut road_cfg = SearchConfig::road_defaults();
    road_cfg.g_max = 25;
    road_cfg.rng_seed = 5;
    let mut digit_cfg = SearchConfig::digit_defaults();
    digit_cfg.popsize = 16;
    digit_cfg.g_max = 40;
    digit_cfg.rng_seed = 5;

    let mut sizes = Vec::new();
    for (name, cfg) in [("road", &road_cfg), ("digit", &digit_cfg)] {
        let mut exports = Vec::new();
        for parallel in [true, true, false, false] {
            let mut c = cfg.clone();
            c.parallel = parallel;
            exports.push(if name == "road" { export_of(&c, &roads)? } else { export_of(&c, &digits)? });
        }
        // the metadata records the parallel flag, so threaded and serial runs share only their entries
        if exports[0].0 != exports[1].0 || exports[2].0 != exports[3].0 {
            return fail(format!("{name} exports of the same configuration differ"));
        }
        if exports[0].1 != exports[2].1 {
            return fail(format!("{name} archives differ with and without threads"));
        }
        if !exports[0].1.contains("\"m2\"") {
            return fail(format!("{name} archive is empty, nothing to compare"));
        }
        sizes.push(format!("{name} {} bytes", exports[0].0.len()));
    }
    Ok(format!("identical exports with and without threads: {}", sizes.join(", ")))
}

fn simulator_sanity() -> Checked {
    let straight = straight_road(175.0, 25.0);
    let mut details = Vec::new();
    for quality in [Quality::High, Quality::Low] {
        let params = ControllerParams::preset(quality);
        let trace = simulate_drive(&straight, &params, DEFAULT_DT, DEFAULT_MAX_STEPS)?;
        let eval = lane_eval(&trace, straight.lane_width);
        if trace.outcome != Outcome::Completed || (eval - straight.lane_width / 2.0).abs() > STRAIGHT_TOLERANCE {
            return fail(format!("{quality} straight drive: {:?}, eval {eval}", trace.outcome));
        }
        let ladder = [60.0, 40.0, 30.0, 24.0, 20.0, 17.0, 15.0, 13.0, 11.0, 9.5, 8.0, 7.0, 6.0];
        let mut evals = Vec::new();
        for r in ladder {
            let road = arc_road(r, PI / 2.0);
            evals.push(lane_eval(&simulate_drive(&road, &params, DEFAULT_DT, DEFAULT_MAX_STEPS)?, road.lane_width));
        }
        // after the first exit the overshoot is not ordered; smaller radii must still fail
        let first_fail = evals.iter().position(|&e| e < 0.0).unwrap_or(evals.len());
        let ordered = evals[..(first_fail + 1).min(evals.len())].windows(2).all(|w| w[1] <= w[0]);
        let failing = evals[first_fail..].iter().all(|&e| e < 0.0);
        if !(ordered && failing) {
            return fail(format!("{quality} ladder evals {evals:?}"));
        }
        let at = ladder.get(first_fail).map_or("never".to_string(), |r| format!("{r} m"));
        details.push(format!("{quality} straight eval {eval:.4}, first arc exit at {at}"));
    }
    Ok(details.join(", "))
}

type Criterion<'a> = Box<dyn Fn() -> Checked + 'a>;

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let wanted = |name: &str| filter.is_empty() || filter.iter().any(|f| name.contains(f.as_str()));
    let started = Instant::now();
    let paired = if wanted("rq1_validity_direction") || wanted("rq2_radius_direction") {
        paired_runs()
    } else {
        fail("skipped".into())
    };
    let criteria: Vec<(&str, Criterion)> = vec![
        ("archive_soundness", Box::new(archive_soundness)),
        ("oracle_equivalence", Box::new(oracle_equivalence)),
        ("geometry", Box::new(geometry)),
        ("frontier_fitness_truth_table", Box::new(frontier_fitness_table)),
        ("rq2_radius_direction", Box::new(|| radius_direction(&paired))),
        ("rq1_validity_direction", Box::new(|| validity_direction(&paired))),
        ("determinism", Box::new(determinism)),
        ("simulator_sanity", Box::new(simulator_sanity)),
    ];
    let mut failed = 0;
    for (name, run) in criteria.iter().filter(|(n, _)| wanted(n)) {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(Failure(detail)) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance finished in {:.1?}", started.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
