use std::f64::consts::{PI, TAU};

use super::spline::RoadGeometry;
use crate::geom::wrap_angle;

/// Arc-length step used to resample spines before tokenization, in meters.
pub const RESAMPLE_STEP: f64 = 2.0;

/// Turning angle at each interior sample of the spine resampled every `step` meters.
pub fn turning_tokens(geometry: &RoadGeometry, step: f64) -> Vec<f64> {
    let len = geometry.length();
    let n = (len / step).floor() as usize;
    let mut samples: Vec<_> = (0..=n).map(|k| geometry.point_at(k as f64 * step)).collect();
    if len - n as f64 * step > 1e-9 {
        samples.push(geometry.end());
    }
    let headings: Vec<f64> = samples.windows(2).map(|w| (w[1] - w[0]).angle()).collect();
    headings.windows(2).map(|h| wrap_angle(h[1] - h[0])).collect()
}

/// Angular difference normalized to `[0, 1]`.
fn substitution_cost(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    (d.min(TAU - d) / PI).clamp(0.0, 1.0)
}

/// Weighted edit distance between turning-angle sequences: substitution costs the normalized
/// angular difference, insertion and deletion cost 1.
pub fn edit_distance(a: &[f64], b: &[f64]) -> f64 {
    let mut prev: Vec<f64> = (0..=b.len()).map(|j| j as f64).collect();
    let mut cur = vec![0.0; b.len() + 1];
    for (i, &ta) in a.iter().enumerate() {
        cur[0] = (i + 1) as f64;
        for (j, &tb) in b.iter().enumerate() {
            let del = prev[j + 1] + 1.0;
            let ins = cur[j] + 1.0;
            let sub = prev[j] + substitution_cost(ta, tb);
            cur[j + 1] = del.min(ins).min(sub);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Distance between two road shapes.
pub fn road_distance(a: &RoadGeometry, b: &RoadGeometry) -> f64 {
    edit_distance(&turning_tokens(a, RESAMPLE_STEP), &turning_tokens(b, RESAMPLE_STEP))
}
