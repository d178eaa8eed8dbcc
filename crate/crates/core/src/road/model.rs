use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::Point;

pub const DEFAULT_LANE_WIDTH: f64 = 4.0;
pub const DEFAULT_BBOX_SIDE: f64 = 250.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RoadError {
    #[error("a road needs at least 4 control points, got {0}")]
    TooFewControlPoints(usize),
    #[error("control points {0} and {1} coincide")]
    CoincidentControlPoints(usize, usize),
    #[error("spine needs at least {needed} points, got {got}")]
    DegenerateSpine { needed: usize, got: usize },
    #[error("non-finite coordinate in road model")]
    NonFinite,
    #[error("road violates the validity constraints: {0}")]
    Invalid(String),
    #[error("no valid seed road after {0} attempts")]
    SeedBudgetExhausted(usize),
}

/// Road shape as the control points of its center-line spline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoadModel {
    /// Control points in meters. The first and last only shape the end tangents.
    pub control_points: Vec<Point>,
    #[serde(default = "default_lane_width")]
    pub lane_width: f64,
    #[serde(default = "default_bbox_side")]
    pub bbox_side: f64,
}

fn default_lane_width() -> f64 {
    DEFAULT_LANE_WIDTH
}

fn default_bbox_side() -> f64 {
    DEFAULT_BBOX_SIDE
}

impl RoadModel {
    pub fn new(control_points: Vec<Point>) -> Self {
        Self { control_points, lane_width: DEFAULT_LANE_WIDTH, bbox_side: DEFAULT_BBOX_SIDE }
    }

    pub fn with_lane_width(mut self, lane_width: f64) -> Self {
        self.lane_width = lane_width;
        self
    }

    pub fn with_bbox_side(mut self, bbox_side: f64) -> Self {
        self.bbox_side = bbox_side;
        self
    }

    /// Checks the structural invariants: at least four finite, pairwise-consecutive distinct points.
    pub fn check(&self) -> Result<(), RoadError> {
        let pts = &self.control_points;
        if pts.len() < 4 {
            return Err(RoadError::TooFewControlPoints(pts.len()));
        }
        if pts.iter().any(|p| !p.is_finite()) {
            return Err(RoadError::NonFinite);
        }
        for (i, w) in pts.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(RoadError::CoincidentControlPoints(i, i + 1));
            }
        }
        Ok(())
    }

    /// Applies `f` to every control point.
    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Self {
        Self { control_points: self.control_points.iter().map(|&p| f(p)).collect(), ..self.clone() }
    }
}
