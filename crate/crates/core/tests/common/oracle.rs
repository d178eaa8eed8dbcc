//! Independent reference implementations the library is checked against.

use std::f64::consts::{PI, TAU};

use frontier_core::digit::{RasterImage, SIDE};
use frontier_core::geom::Point;

/// Peels fronts by checking every pair: a point is in the next front iff no remaining point
/// dominates it.
pub fn brute_force_fronts(objs: &[[f64; 2]]) -> Vec<Vec<usize>> {
    let dom = |a: &[f64; 2], b: &[f64; 2]| {
        let no_worse = a.iter().zip(b).all(|(x, y)| x <= y);
        let better = a.iter().zip(b).any(|(x, y)| x < y);
        no_worse && better
    };
    let mut remaining: Vec<usize> = (0..objs.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> =
            remaining.iter().copied().filter(|&i| !remaining.iter().any(|&j| dom(&objs[j], &objs[i]))).collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

/// Full-table weighted Levenshtein.
pub fn edit_distance_dp(a: &[f64], b: &[f64]) -> f64 {
    let sub = |x: f64, y: f64| {
        let d = (x - y).abs();
        (if d > PI { TAU - d } else { d }) / PI
    };
    let mut t = vec![vec![0.0; b.len() + 1]; a.len() + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = i as f64;
    }
    for j in 0..=b.len() {
        t[0][j] = j as f64;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            t[i][j] = (t[i - 1][j] + 1.0).min(t[i][j - 1] + 1.0).min(t[i - 1][j - 1] + sub(a[i - 1], b[j - 1]));
        }
    }
    t[a.len()][b.len()]
}

pub fn pixel_distance_naive(a: &RasterImage, b: &RasterImage) -> f64 {
    let mut total = 0.0;
    for row in 0..SIDE {
        for col in 0..SIDE {
            let d = f64::from(a.get(row, col)) - f64::from(b.get(row, col));
            total += d * d;
        }
    }
    total.sqrt()
}

/// Centripetal Catmull-Rom in cubic Hermite form, with the tangents of the non-uniform spline.
pub fn catmull_rom_hermite(p: [Point; 4], u: f64) -> Point {
    let knot = |a: Point, b: Point| a.distance(b).sqrt();
    let (d0, d1, d2) = (knot(p[0], p[1]), knot(p[1], p[2]), knot(p[2], p[3]));
    let m1 = ((p[1] - p[0]) * (1.0 / d0) - (p[2] - p[0]) * (1.0 / (d0 + d1)) + (p[2] - p[1]) * (1.0 / d1)) * d1;
    let m2 = ((p[2] - p[1]) * (1.0 / d1) - (p[3] - p[1]) * (1.0 / (d1 + d2)) + (p[3] - p[2]) * (1.0 / d2)) * d1;
    let (u2, u3) = (u * u, u * u * u);
    p[1] * (2.0 * u3 - 3.0 * u2 + 1.0) + m1 * (u3 - 2.0 * u2 + u) + p[2] * (-2.0 * u3 + 3.0 * u2) + m2 * (u3 - u2)
}

/// Spine sampled on a circle of `radius`, about every half meter.
pub fn circle_spine(radius: f64, sweep: f64) -> Vec<Point> {
    let n = (sweep * radius / 0.5).ceil() as usize;
    (0..=n).map(|k| Point::from_polar(radius, sweep * k as f64 / n as f64)).collect()
}

/// Replays an archive's event log and checks every decision against the archiving rules.
/// Returns the ids the archive must hold at the end.
pub fn replay_archive_events(events: &[frontier_core::search::ArchiveEvent]) -> Result<Vec<u64>, String> {
    use frontier_core::search::EventKind;
    let mut held: Vec<u64> = Vec::new();
    for (i, ev) in events.iter().enumerate() {
        let fail = |why: &str| Err(format!("event {i} ({ev}): {why}"));
        match ev.kind {
            EventKind::Insert => {
                if ev.nearest_distance.is_some_and(|d| d <= ev.threshold) {
                    return fail("inserted within the threshold");
                }
                if ev.nearest.is_none() != held.is_empty() {
                    return fail("nearest entry does not match the archive");
                }
                held.push(ev.candidate);
            }
            EventKind::Replace => {
                let (Some(nearest), Some(d), Some(spread)) = (ev.nearest, ev.nearest_distance, ev.nearest_spread)
                else {
                    return fail("replacement without a nearest entry");
                };
                if d > ev.threshold || ev.candidate_spread >= spread {
                    return fail("replacement breaks local competition");
                }
                let Some(slot) = held.iter().position(|&id| id == nearest) else {
                    return fail("replaced entry is not in the archive");
                };
                held[slot] = ev.candidate;
            }
            EventKind::Discard => {
                if ev.nearest_distance.is_some_and(|d| d > ev.threshold) {
                    return fail("discarded a candidate beyond the threshold");
                }
            }
        }
    }
    Ok(held)
}
