//! Lane-keeping system under test: a kinematic bicycle steered by pure pursuit along the right
//! lane of a road.
//!
//! The controller is deterministic. Its quality knob ([`Quality`]) trades lookahead, speed and
//! steering latency, standing in for well and poorly trained driving models.

mod controller;
mod sim;

pub use crate::Quality;
pub use controller::ControllerParams;
pub use sim::{
    lane_eval, simulate_drive, simulate_path, DriveError, DrivingState, DrivingTrace, Outcome, DEFAULT_DT,
    DEFAULT_MAX_STEPS,
};
