use std::f64::consts::PI;
use std::fmt;

use super::model::RoadModel;
use super::spline::RoadGeometry;
use crate::geom::{segments_intersect, Point};

/// A violated road constraint.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// Start and end of the spine are within one lane width.
    EndpointsTooClose { gap: f64 },
    /// The buffered road does not fit the bounding square.
    OutOfBounds { width: f64, height: f64 },
    /// Spine segments `i` and `j` cross.
    SelfIntersection { i: usize, j: usize },
    /// Spine points far apart along the road come within two lane widths of each other.
    Overlap { i: usize, j: usize, gap: f64 },
    /// The road edge on one side (`offset` meters from the spine) folds back or crosses itself
    /// near spine segment `i`.
    EdgeFold { offset: f64, i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EndpointsTooClose { gap } => write!(f, "start and end only {gap:.2} m apart"),
            Violation::OutOfBounds { width, height } => {
                write!(f, "road extent {width:.1} x {height:.1} m exceeds the bounding square")
            }
            Violation::SelfIntersection { i, j } => write!(f, "spine segments {i} and {j} intersect"),
            Violation::Overlap { i, j, gap } => {
                write!(f, "spine points {i} and {j} only {gap:.2} m apart")
            }
            Violation::EdgeFold { offset, i } => {
                write!(f, "road edge at {offset:+.1} m folds near spine segment {i}")
            }
        }
    }
}

/// True iff the road satisfies every domain constraint.
pub fn validate_road(model: &RoadModel, geometry: &RoadGeometry) -> bool {
    first_violation(model, geometry).is_none()
}

/// Returns the first violated constraint, checked in order: endpoints, bounds, crossings, edge
/// folds, overlap.
pub fn first_violation(model: &RoadModel, geometry: &RoadGeometry) -> Option<Violation> {
    let w = model.lane_width;

    let gap = geometry.start().distance(geometry.end());
    if gap <= w {
        return Some(Violation::EndpointsTooClose { gap });
    }

    // The road is the spine buffered by one lane on each side; the square may be placed anywhere.
    let (lo, hi) = geometry.bounds();
    let width = hi.x - lo.x + 2.0 * w;
    let height = hi.y - lo.y + 2.0 * w;
    if width > model.bbox_side || height > model.bbox_side {
        return Some(Violation::OutOfBounds { width, height });
    }

    if let Some((i, j)) = spine_self_intersects(geometry) {
        return Some(Violation::SelfIntersection { i, j });
    }

    for offset in [-w, w] {
        if let Some(i) = edge_fold(geometry, offset) {
            return Some(Violation::EdgeFold { offset, i });
        }
    }

    overlap(geometry, w)
}

/// Finds a pair of non-adjacent spine segments that intersect.
///
/// Segments are swept in order of their left x extent, so only pairs whose x ranges overlap are
/// tested.
pub fn spine_self_intersects(geometry: &RoadGeometry) -> Option<(usize, usize)> {
    polyline_self_intersects(&geometry.spine)
}

/// Smallest pair of non-adjacent segments of `pts` that intersect.
pub fn polyline_self_intersects(pts: &[Point]) -> Option<(usize, usize)> {
    if pts.len() < 2 {
        return None;
    }
    let nseg = pts.len() - 1;
    let mut order: Vec<usize> = (0..nseg).collect();
    let min_x = |i: usize| pts[i].x.min(pts[i + 1].x);
    let max_x = |i: usize| pts[i].x.max(pts[i + 1].x);
    order.sort_by(|&a, &b| min_x(a).total_cmp(&min_x(b)).then(a.cmp(&b)));

    let mut found: Option<(usize, usize)> = None;
    for (k, &a) in order.iter().enumerate() {
        let right = max_x(a);
        for &b in &order[k + 1..] {
            if min_x(b) > right {
                break;
            }
            if a.abs_diff(b) <= 1 {
                continue;
            }
            if segments_intersect(pts[a], pts[a + 1], pts[b], pts[b + 1]) {
                let pair = (a.min(b), a.max(b));
                if found.is_none_or(|f| pair < f) {
                    found = Some(pair);
                }
            }
        }
    }
    found
}

/// First spine segment where the edge `offset` meters to the side runs backwards or crosses
/// itself; that happens when the road bends tighter than the offset.
fn edge_fold(geometry: &RoadGeometry, offset: f64) -> Option<usize> {
    let edge = geometry.offset(offset);
    let spine = &geometry.spine;
    let backwards = (0..spine.len() - 1).find(|&i| (edge[i + 1] - edge[i]).dot(spine[i + 1] - spine[i]) <= 0.0);
    backwards.or_else(|| polyline_self_intersects(&edge).map(|(i, _)| i))
}

/// Points separated by more than half a turn of a lane-width-radius bend must stay two lane
/// widths apart; closer means the buffered road folds onto itself.
fn overlap(geometry: &RoadGeometry, lane_width: f64) -> Option<Violation> {
    let min_sep = PI * lane_width;
    let min_gap = 2.0 * lane_width;
    let pts = &geometry.spine;
    let s = &geometry.cumulative_lengths;
    for i in 0..pts.len() {
        let start = s.partition_point(|&l| l - s[i] <= min_sep);
        for j in start..pts.len() {
            let gap = pts[i].distance(pts[j]);
            if gap < min_gap {
                return Some(Violation::Overlap { i, j, gap });
            }
        }
    }
    None
}
