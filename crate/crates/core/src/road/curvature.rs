use super::spline::RoadGeometry;

/// Arc length spanned by each circumradius triple, in meters.
pub const CURVATURE_WINDOW: f64 = 10.0;

/// 47 ft, the minimum recommended curve radius at 15 mph, in meters.
pub const MIN_RADIUS_15_MPH: f64 = 47.0 * 0.3048;

const COLLINEAR_TOLERANCE: f64 = 1e-6;

/// Smallest circumradius over spine triples spaced to span about [`CURVATURE_WINDOW`] meters.
///
/// Returns `f64::INFINITY` when every triple is collinear (or the spine has fewer than three
/// points).
pub fn min_curvature_radius(geometry: &RoadGeometry) -> f64 {
    let pts = &geometry.spine;
    if pts.len() < 3 {
        return f64::INFINITY;
    }
    let mean_spacing = geometry.length() / (pts.len() - 1) as f64;
    let half = CURVATURE_WINDOW / 2.0;
    let w = ((half / mean_spacing).round() as usize).clamp(1, (pts.len() - 1) / 2);

    let mut best = f64::INFINITY;
    for i in 0..pts.len() - 2 * w {
        let (a, b, c) = (pts[i], pts[i + w], pts[i + 2 * w]);
        let ab = b - a;
        let bc = c - b;
        let ca = a - c;
        let cross = ab.cross(-ca);
        let (lab, lbc, lca) = (ab.norm(), bc.norm(), ca.norm());
        if cross.abs() / (lab * lca) < COLLINEAR_TOLERANCE {
            continue;
        }
        let r = lab * lbc * lca / (2.0 * cross.abs());
        best = best.min(r);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn straight_is_infinite() {
        let g = RoadGeometry::from_spine((0..50).map(|i| Point::new(i as f64, 0.0)).collect()).unwrap();
        assert_eq!(min_curvature_radius(&g), f64::INFINITY);
    }

    #[test]
    fn forty_seven_feet() {
        assert!((MIN_RADIUS_15_MPH - 14.3256).abs() < 1e-9);
    }
}
