//! Drives both lane-keeper presets around arcs of decreasing radius.

use std::f64::consts::FRAC_PI_2;

use frontier_core::drive::{lane_eval, simulate_drive, ControllerParams, DEFAULT_DT, DEFAULT_MAX_STEPS};
use frontier_core::road::{arc_road, MIN_RADIUS_15_MPH};
use frontier_core::Quality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("radius      hq eval        lq eval");
    for radius in [60.0, 40.0, 30.0, 24.0, 20.0, 17.0, 15.0, 13.0, 11.0, 9.5, 8.0, 7.0] {
        let road = arc_road(radius, FRAC_PI_2);
        let mut cells = Vec::new();
        for quality in [Quality::High, Quality::Low] {
            let trace = simulate_drive(&road, &ControllerParams::preset(quality), DEFAULT_DT, DEFAULT_MAX_STEPS)?;
            cells.push(format!("{:+.3} {:>11}", lane_eval(&trace, road.lane_width), format!("{:?}", trace.outcome)));
        }
        let mark = if radius < MIN_RADIUS_15_MPH { " (below 47 ft)" } else { "" };
        println!("{radius:5.1} m  {}  {}{mark}", cells[0], cells[1]);
    }
    Ok(())
}
