use serde::{Deserialize, Serialize};

use crate::Quality;

/// Tuning of the pure-pursuit driver.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ControllerParams {
    /// Arc length ahead of the nearest path point that the controller steers towards, meters.
    pub lookahead: f64,
    /// Constant forward speed, m/s.
    pub speed: f64,
    /// Largest change of the steering angle per second, rad/s.
    pub max_steer_rate: f64,
    /// Number of simulation steps between a steering command and its actuation.
    pub steering_lag: usize,
    pub wheelbase: f64,
    /// Mechanical limit of the steering angle, radians.
    pub max_steer: f64,
}

impl ControllerParams {
    pub fn is_valid(&self) -> bool {
        self.lookahead > 0.0
            && self.speed > 0.0
            && self.max_steer_rate > 0.0
            && self.wheelbase > 0.0
            && self.max_steer > 0.0
    }

    /// HQ: long lookahead, moderate speed, immediate steering. LQ: short lookahead, higher
    /// speed, two steps of actuation lag and a slow steering rack.
    pub fn preset(quality: Quality) -> Self {
        match quality {
            Quality::High => Self {
                lookahead: 6.0,
                speed: 7.0,
                max_steer_rate: 1.0,
                steering_lag: 0,
                wheelbase: 2.7,
                max_steer: 0.35,
            },
            Quality::Low => Self {
                lookahead: 4.0,
                speed: 12.0,
                max_steer_rate: 0.25,
                steering_lag: 2,
                wheelbase: 2.7,
                max_steer: 0.35,
            },
        }
    }
}
