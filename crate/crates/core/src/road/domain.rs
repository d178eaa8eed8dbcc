use rand::RngCore;
use serde::{Deserialize, Serialize};

use super::curvature::min_curvature_radius;
use super::distance::{edit_distance, turning_tokens, RESAMPLE_STEP};
use super::generate::{generate_seed_road, perturb_control_point, straight_road, SeedRoadParams, MAX_SEED_TURN};
use super::model::{RoadModel, DEFAULT_BBOX_SIDE, DEFAULT_LANE_WIDTH};
use super::spline::{catmull_rom_interpolate, RoadGeometry, DEFAULT_SAMPLES_PER_SEGMENT};
use super::validity::validate_road;
use crate::drive::{lane_eval, simulate_path, ControllerParams, DrivingTrace, DEFAULT_DT, DEFAULT_MAX_STEPS};
use crate::search::Domain;
use crate::Quality;

/// Settings of the road domain: lane keeper under test, simulation step and seed layout.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RoadDomainConfig {
    /// Set by the caller, not read from configuration files.
    #[serde(skip)]
    pub preset: Quality,
    /// Overrides the preset's controller tuning.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub controller: Option<ControllerParams>,
    pub dt: f64,
    pub max_steps: usize,
    pub lane_width: f64,
    pub bbox_side: f64,
    pub num_control_points: usize,
    /// Distance between consecutive seed control points, meters.
    pub control_step: f64,
    pub max_turn: f64,
    pub max_seed_attempts: usize,
}

impl Default for RoadDomainConfig {
    fn default() -> Self {
        Self {
            preset: Quality::High,
            controller: None,
            dt: DEFAULT_DT,
            max_steps: DEFAULT_MAX_STEPS,
            lane_width: DEFAULT_LANE_WIDTH,
            bbox_side: DEFAULT_BBOX_SIDE,
            num_control_points: 10,
            control_step: 25.0,
            max_turn: MAX_SEED_TURN,
            max_seed_attempts: 1000,
        }
    }
}

impl RoadDomainConfig {
    pub fn with_preset(preset: Quality) -> Self {
        Self { preset, ..Self::default() }
    }

    pub fn controller(&self) -> ControllerParams {
        self.controller.clone().unwrap_or_else(|| ControllerParams::preset(self.preset))
    }

    pub fn seed_params(&self) -> SeedRoadParams {
        SeedRoadParams {
            num_control_points: self.num_control_points,
            step: self.control_step,
            max_turn: self.max_turn,
            max_attempts: self.max_seed_attempts,
            lane_width: self.lane_width,
            bbox_side: self.bbox_side,
        }
    }
}

/// Interpolated road plus its turning-angle tokens.
#[derive(Clone, Debug)]
pub struct RoadConcrete {
    pub geometry: RoadGeometry,
    pub tokens: Vec<f64>,
    pub lane_width: f64,
}

/// Roads driven by the pure-pursuit lane keeper.
#[derive(Clone, Debug)]
pub struct RoadDomain {
    config: RoadDomainConfig,
    controller: ControllerParams,
}

impl RoadDomain {
    pub fn new(config: RoadDomainConfig) -> Result<Self, String> {
        let controller = config.controller();
        if !controller.is_valid() {
            return Err("controller parameters must be positive".into());
        }
        if !(config.dt > 0.0) || config.max_steps == 0 {
            return Err("dt and max_steps must be positive".into());
        }
        Ok(Self { config, controller })
    }

    pub fn config(&self) -> &RoadDomainConfig {
        &self.config
    }

    pub fn controller(&self) -> &ControllerParams {
        &self.controller
    }

    /// Drives the right lane of an interpolated road.
    pub fn drive(&self, concrete: &RoadConcrete) -> DrivingTrace {
        let path = concrete.geometry.offset(concrete.lane_width / 2.0);
        simulate_path(&path, concrete.lane_width, &self.controller, self.config.dt, self.config.max_steps)
            .expect("validated roads give a drivable path")
    }

    /// Seed roads on which every controller in `drivers` stays in its lane.
    pub fn shared_seeds(
        drivers: &[&RoadDomain],
        count: usize,
        rng: &mut dyn RngCore,
    ) -> Result<Vec<RoadModel>, String> {
        let first = drivers.first().ok_or("no driver given")?;
        let params = first.config.seed_params();
        let budget = count * params.max_attempts.max(1);
        let mut seeds = Vec::with_capacity(count);
        for _ in 0..budget {
            if seeds.len() == count {
                break;
            }
            let road = generate_seed_road(rng, &params).map_err(|e| e.to_string())?;
            let concrete = first.concretize(&road).ok_or("generated seed is invalid")?;
            if drivers.iter().all(|d| d.evaluate(&road, &concrete) > 0.0) {
                seeds.push(road);
            }
        }
        if seeds.len() < count {
            return Err(format!("only {} of {count} seed roads are driven correctly", seeds.len()));
        }
        Ok(seeds)
    }
}

/// Straight road spanning the same length as a default seed road.
pub fn reference_road(config: &RoadDomainConfig) -> RoadModel {
    let segments = config.num_control_points.saturating_sub(3).max(1);
    straight_road(segments as f64 * config.control_step, config.control_step)
        .with_lane_width(config.lane_width)
        .with_bbox_side(config.bbox_side)
}

impl Domain for RoadDomain {
    type Model = RoadModel;
    type Concrete = RoadConcrete;

    fn concretize(&self, model: &RoadModel) -> Option<RoadConcrete> {
        let geometry = catmull_rom_interpolate(model, DEFAULT_SAMPLES_PER_SEGMENT).ok()?;
        if !validate_road(model, &geometry) {
            return None;
        }
        let tokens = turning_tokens(&geometry, RESAMPLE_STEP);
        Some(RoadConcrete { geometry, tokens, lane_width: model.lane_width })
    }

    fn evaluate(&self, _model: &RoadModel, concrete: &RoadConcrete) -> f64 {
        let trace = self.drive(concrete);
        lane_eval(&trace, concrete.lane_width)
    }

    fn distance(&self, a: &RoadConcrete, b: &RoadConcrete) -> f64 {
        edit_distance(&a.tokens, &b.tokens)
    }

    fn mutate(&self, model: &RoadModel, rng: &mut dyn RngCore, lb: f64, ub: f64) -> RoadModel {
        perturb_control_point(model, rng, lb, ub)
    }

    fn generate_seeds(&self, count: usize, rng: &mut dyn RngCore) -> Result<Vec<RoadModel>, String> {
        RoadDomain::shared_seeds(&[self], count, rng)
    }
}

impl RoadConcrete {
    pub fn min_curvature_radius(&self) -> f64 {
        min_curvature_radius(&self.geometry)
    }
}
