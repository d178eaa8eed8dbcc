//! Road inputs: a Catmull-Rom center line defined by 2D control points.
//!
//! The model is the list of control points; the concrete road is the interpolated
//! spine plus the derived headings and arc lengths. Everything here is a pure
//! function of its inputs plus, for the random operators, an explicit RNG.

mod curvature;
mod distance;
mod domain;
mod generate;
mod model;
mod spline;
mod validity;

pub use curvature::{min_curvature_radius, CURVATURE_WINDOW, MIN_RADIUS_15_MPH};
pub use distance::{edit_distance, road_distance, turning_tokens, RESAMPLE_STEP};
pub use domain::{reference_road, RoadConcrete, RoadDomain, RoadDomainConfig};
pub use generate::{
    arc_road, generate_seed_road, mutate_road, perturb_control_point, straight_road, SeedRoadParams, MAX_SEED_TURN,
};
pub use model::{RoadError, RoadModel, DEFAULT_BBOX_SIDE, DEFAULT_LANE_WIDTH};
pub use spline::{barry_goldman_point, catmull_rom_interpolate, RoadGeometry, DEFAULT_SAMPLES_PER_SEGMENT};
pub use validity::{first_violation, polyline_self_intersects, spine_self_intersects, validate_road, Violation};
