use std::f64::consts::{PI, TAU};

use rand::Rng;

use super::model::{RoadError, RoadModel, DEFAULT_BBOX_SIDE, DEFAULT_LANE_WIDTH};
use super::spline::{catmull_rom_interpolate, DEFAULT_SAMPLES_PER_SEGMENT};
use super::validity::first_violation;
use crate::geom::Point;

/// Largest heading change between consecutive seed control points.
pub const MAX_SEED_TURN: f64 = PI / 3.0;

/// Displaces one control point (never the first) by `magnitude` in `[lb, ub]` along a uniform
/// direction. The result is not checked for validity.
pub fn perturb_control_point<R: Rng + ?Sized>(model: &RoadModel, rng: &mut R, lb: f64, ub: f64) -> RoadModel {
    let mut out = model.clone();
    let idx = rng.gen_range(1..model.control_points.len());
    let magnitude = rng.gen_range(lb..=ub);
    let direction = rng.gen_range(0.0..TAU);
    out.control_points[idx] = out.control_points[idx] + Point::from_polar(magnitude, direction);
    out
}

/// Mutation operator for roads. Fails with [`RoadError::Invalid`] when the displaced road breaks
/// a domain constraint, so the caller can retry.
pub fn mutate_road<R: Rng + ?Sized>(model: &RoadModel, rng: &mut R, lb: f64, ub: f64) -> Result<RoadModel, RoadError> {
    let out = perturb_control_point(model, rng, lb, ub);
    let geometry = catmull_rom_interpolate(&out, DEFAULT_SAMPLES_PER_SEGMENT)?;
    match first_violation(&out, &geometry) {
        None => Ok(out),
        Some(v) => Err(RoadError::Invalid(v.to_string())),
    }
}

#[derive(Clone, Debug)]
pub struct SeedRoadParams {
    pub num_control_points: usize,
    /// Distance between consecutive control points, meters.
    pub step: f64,
    pub max_turn: f64,
    pub max_attempts: usize,
    pub lane_width: f64,
    pub bbox_side: f64,
}

impl Default for SeedRoadParams {
    fn default() -> Self {
        Self {
            num_control_points: 10,
            step: 25.0,
            max_turn: MAX_SEED_TURN,
            max_attempts: 1000,
            lane_width: DEFAULT_LANE_WIDTH,
            bbox_side: DEFAULT_BBOX_SIDE,
        }
    }
}

/// Random walk of control points from the origin: fixed step length, bounded heading change.
/// Regenerates until the road is valid.
pub fn generate_seed_road<R: Rng + ?Sized>(rng: &mut R, params: &SeedRoadParams) -> Result<RoadModel, RoadError> {
    if params.num_control_points < 4 {
        return Err(RoadError::TooFewControlPoints(params.num_control_points));
    }
    for _ in 0..params.max_attempts {
        let mut heading = rng.gen_range(0.0..TAU);
        let mut p = Point::new(0.0, 0.0);
        let mut points = vec![p];
        for _ in 1..params.num_control_points {
            p = p + Point::from_polar(params.step, heading);
            points.push(p);
            heading += rng.gen_range(-params.max_turn..=params.max_turn);
        }
        let model = RoadModel { control_points: points, lane_width: params.lane_width, bbox_side: params.bbox_side };
        let geometry = catmull_rom_interpolate(&model, DEFAULT_SAMPLES_PER_SEGMENT)?;
        if first_violation(&model, &geometry).is_none() {
            return Ok(model);
        }
    }
    Err(RoadError::SeedBudgetExhausted(params.max_attempts))
}

/// A straight road of `length` meters along the x axis, centered on the origin, with control
/// points every `step` meters.
pub fn straight_road(length: f64, step: f64) -> RoadModel {
    let n = (length / step).round().max(1.0) as usize;
    let x0 = -(n as f64) * step / 2.0;
    RoadModel::new((0..n + 3).map(|i| Point::new(x0 + step * (i as f64 - 1.0), 0.0)).collect())
}

/// A 40 m straight approach followed by a left-hand arc of `radius` meters turning through
/// `sweep` radians and a 40 m straight exit. Control points are evenly spaced along the way.
pub fn arc_road(radius: f64, sweep: f64) -> RoadModel {
    let lead = 40.0;
    let arc_steps = ((sweep * radius / 5.0).ceil() as usize).max((sweep / 0.25).ceil() as usize);
    let dtheta = sweep / arc_steps as f64;
    let chord = 2.0 * radius * (dtheta / 2.0).sin();
    let lead_steps = (lead / chord).ceil() as usize;

    let mut points: Vec<Point> = (0..=lead_steps).rev().map(|k| Point::new(-chord * k as f64, 0.0)).collect();
    let center = Point::new(0.0, radius);
    for k in 1..=arc_steps {
        let a = dtheta * k as f64;
        points.push(center + Point::new(radius * a.sin(), -radius * a.cos()));
    }
    let end = *points.last().unwrap();
    let dir = Point::from_polar(chord, sweep);
    points.extend((1..=lead_steps).map(|k| end + dir * k as f64));
    RoadModel::new(points)
}
