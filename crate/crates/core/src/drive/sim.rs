use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::controller::ControllerParams;
use crate::geom::{project_on_segment, wrap_angle, Point};
use crate::road::{catmull_rom_interpolate, validate_road, RoadModel, DEFAULT_SAMPLES_PER_SEGMENT};

pub const DEFAULT_DT: f64 = 0.05;
pub const DEFAULT_MAX_STEPS: usize = 20_000;

/// Extra arc length searched beyond the distance travelled in one step when tracking the nearest
/// path point.
const PROJECTION_WINDOW: f64 = 10.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DriveError {
    #[error("time step must be in (0, 0.2], got {0}")]
    BadTimeStep(f64),
    #[error("road is not valid: {0}")]
    InvalidRoad(String),
    #[error("invalid controller parameters")]
    BadParams,
    #[error("path needs at least two distinct points")]
    DegeneratePath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Completed,
    OutOfBound,
    Timeout,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrivingState {
    pub position: Point,
    pub heading: f64,
    pub steer: f64,
    /// Distance of the center of mass from the center line of the driven lane.
    pub lane_center_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrivingTrace {
    pub states: Vec<DrivingState>,
    pub dt: f64,
    pub outcome: Outcome,
}

impl DrivingTrace {
    pub fn max_lane_center_distance(&self) -> f64 {
        self.states.iter().map(|s| s.lane_center_distance).fold(0.0, f64::max)
    }
}

/// `min(w/2 - d)` over the trace: positive iff the car never left its lane.
pub fn lane_eval(trace: &DrivingTrace, lane_width: f64) -> f64 {
    trace.states.iter().map(|s| lane_width / 2.0 - s.lane_center_distance).fold(f64::INFINITY, f64::min)
}

/// Drives the right lane of `road` from its start to its end.
pub fn simulate_drive(
    road: &RoadModel,
    params: &ControllerParams,
    dt: f64,
    max_steps: usize,
) -> Result<DrivingTrace, DriveError> {
    let geometry = catmull_rom_interpolate(road, DEFAULT_SAMPLES_PER_SEGMENT)
        .map_err(|e| DriveError::InvalidRoad(e.to_string()))?;
    if !validate_road(road, &geometry) {
        return Err(DriveError::InvalidRoad("domain constraints violated".into()));
    }
    let path = geometry.offset(road.lane_width / 2.0);
    simulate_path(&path, road.lane_width, params, dt, max_steps)
}

struct Path<'a> {
    points: &'a [Point],
    cumulative: Vec<f64>,
}

impl<'a> Path<'a> {
    fn new(points: &'a [Point]) -> Result<Self, DriveError> {
        if points.len() < 2 {
            return Err(DriveError::DegeneratePath);
        }
        let mut cumulative = vec![0.0];
        for w in points.windows(2) {
            let len = w[0].distance(w[1]);
            cumulative.push(cumulative.last().unwrap() + len);
        }
        if *cumulative.last().unwrap() == 0.0 {
            return Err(DriveError::DegeneratePath);
        }
        Ok(Self { points, cumulative })
    }

    fn length(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }

    /// Point at arc length `s`; beyond the end the last segment is extended.
    fn point_at(&self, s: f64) -> Point {
        if s >= self.length() {
            let n = self.points.len();
            let (a, b) = (self.points[n - 2], self.points[n - 1]);
            let dir = (b - a) * (1.0 / a.distance(b));
            return b + dir * (s - self.length());
        }
        let i = self.cumulative.partition_point(|&l| l <= s).saturating_sub(1);
        let span = self.cumulative[i + 1] - self.cumulative[i];
        if span == 0.0 {
            return self.points[i];
        }
        self.points[i].lerp(self.points[i + 1], (s - self.cumulative[i]) / span)
    }

    /// Nearest point on segments `from..` whose start lies within `reach` of arc length `s0`.
    /// Returns `(segment, arc length, distance)`.
    fn project(&self, p: Point, from: usize, s0: f64, reach: f64) -> (usize, f64, f64) {
        let mut best = (from, s0, f64::INFINITY);
        for k in from..self.points.len() - 1 {
            if self.cumulative[k] > s0 + reach {
                break;
            }
            let (a, b) = (self.points[k], self.points[k + 1]);
            let mut t = project_on_segment(p, a, b);
            if k == self.points.len() - 2 && t == 1.0 {
                // past the end: measure against the extension of the last segment
                let ab = b - a;
                t = (p - a).dot(ab) / ab.dot(ab);
            }
            let d = p.distance(a.lerp(b, t));
            if d < best.2 {
                let s = self.cumulative[k] + t * (self.cumulative[k + 1] - self.cumulative[k]);
                best = (k, s, d);
            }
        }
        best
    }
}

/// Drives along an explicit lane-center polyline. `lane_width` only sets the out-of-bound limit.
pub fn simulate_path(
    path: &[Point],
    lane_width: f64,
    params: &ControllerParams,
    dt: f64,
    max_steps: usize,
) -> Result<DrivingTrace, DriveError> {
    if !(dt > 0.0 && dt <= 0.2) {
        return Err(DriveError::BadTimeStep(dt));
    }
    if !params.is_valid() {
        return Err(DriveError::BadParams);
    }
    let path = Path::new(path)?;
    let limit = lane_width / 2.0;
    let reach = params.speed * dt + PROJECTION_WINDOW;

    let mut position = path.points[0];
    let first = path.points.iter().find(|&&p| p != position).copied().unwrap();
    let mut heading = (first - position).angle();
    let mut steer = 0.0_f64;
    let (mut segment, mut s, d) = path.project(position, 0, 0.0, reach);

    let mut states = vec![DrivingState { position, heading, steer, lane_center_distance: d }];
    let mut pending: VecDeque<f64> = std::iter::repeat_n(0.0, params.steering_lag).collect();
    let max_delta = params.max_steer_rate * dt;

    let mut outcome = Outcome::Timeout;
    for _ in 0..max_steps {
        let target = path.point_at(s + params.lookahead);
        let to_target = target - position;
        let distance = to_target.norm();
        let command = if distance > 1e-9 {
            let alpha = wrap_angle(to_target.angle() - heading);
            (2.0 * params.wheelbase * alpha.sin() / distance).atan()
        } else {
            0.0
        };
        pending.push_back(command);
        let actuated = pending.pop_front().unwrap();
        steer = (steer + (actuated - steer).clamp(-max_delta, max_delta)).clamp(-params.max_steer, params.max_steer);

        position = position + Point::from_polar(params.speed * dt, heading);
        heading = wrap_angle(heading + params.speed * dt * steer.tan() / params.wheelbase);

        let (seg, arc, d) = path.project(position, segment, s, reach);
        segment = seg;
        s = arc;
        states.push(DrivingState { position, heading, steer, lane_center_distance: d });
        if d > limit {
            outcome = Outcome::OutOfBound;
            break;
        }
        if s >= path.length() {
            outcome = Outcome::Completed;
            break;
        }
    }
    Ok(DrivingTrace { states, dt, outcome })
}
