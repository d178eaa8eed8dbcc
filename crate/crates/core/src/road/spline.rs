use serde::{Deserialize, Serialize};

use super::model::{RoadError, RoadModel};
use crate::geom::Point;

pub const DEFAULT_SAMPLES_PER_SEGMENT: usize = 20;

/// Centripetal parameterization exponent.
const ALPHA: f64 = 0.5;

/// Interpolated center line of a road.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoadGeometry {
    pub spine: Vec<Point>,
    /// Heading of each spine segment, `spine.len() - 1` entries.
    pub segment_headings: Vec<f64>,
    /// Arc length at each spine point, starting at 0.
    pub cumulative_lengths: Vec<f64>,
}

impl RoadGeometry {
    /// Builds the derived quantities of an already sampled center line.
    pub fn from_spine(spine: Vec<Point>) -> Result<Self, RoadError> {
        if spine.len() < 2 {
            return Err(RoadError::DegenerateSpine { needed: 2, got: spine.len() });
        }
        if spine.iter().any(|p| !p.is_finite()) {
            return Err(RoadError::NonFinite);
        }
        let mut segment_headings = Vec::with_capacity(spine.len() - 1);
        let mut cumulative_lengths = Vec::with_capacity(spine.len());
        cumulative_lengths.push(0.0);
        let mut total = 0.0;
        for (i, w) in spine.windows(2).enumerate() {
            let d = w[1] - w[0];
            let len = d.norm();
            if len == 0.0 {
                return Err(RoadError::CoincidentControlPoints(i, i + 1));
            }
            total += len;
            segment_headings.push(d.angle());
            cumulative_lengths.push(total);
        }
        Ok(Self { spine, segment_headings, cumulative_lengths })
    }

    pub fn length(&self) -> f64 {
        *self.cumulative_lengths.last().unwrap_or(&0.0)
    }

    pub fn start(&self) -> Point {
        self.spine[0]
    }

    pub fn end(&self) -> Point {
        *self.spine.last().unwrap()
    }

    /// Point at arc length `s`, clamped to the spine ends.
    pub fn point_at(&self, s: f64) -> Point {
        let lens = &self.cumulative_lengths;
        if s <= 0.0 {
            return self.spine[0];
        }
        if s >= self.length() {
            return self.end();
        }
        let i = lens.partition_point(|&l| l <= s).saturating_sub(1);
        let t = (s - lens[i]) / (lens[i + 1] - lens[i]);
        self.spine[i].lerp(self.spine[i + 1], t)
    }

    /// Unit tangent at spine point `i`, from the neighbouring points.
    pub fn tangent(&self, i: usize) -> Point {
        let n = self.spine.len();
        let a = self.spine[i.saturating_sub(1)];
        let b = self.spine[(i + 1).min(n - 1)];
        let d = b - a;
        d * (1.0 / d.norm())
    }

    /// The spine shifted sideways by `offset` meters (positive = right of travel).
    pub fn offset(&self, offset: f64) -> Vec<Point> {
        (0..self.spine.len())
            .map(|i| {
                let t = self.tangent(i);
                let right = Point::new(t.y, -t.x);
                self.spine[i] + right * offset
            })
            .collect()
    }

    /// Axis-aligned extent `(min, max)` of the spine.
    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.spine {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

/// Evaluates the centripetal Catmull-Rom segment between `p1` and `p2` at `u` in `[0, 1]`
/// using the Barry-Goldman pyramid of linear interpolations.
pub fn barry_goldman_point(p: [Point; 4], u: f64) -> Point {
    let t0 = 0.0;
    let t1 = t0 + p[1].distance(p[0]).powf(ALPHA);
    let t2 = t1 + p[2].distance(p[1]).powf(ALPHA);
    let t3 = t2 + p[3].distance(p[2]).powf(ALPHA);
    let t = t1 + u * (t2 - t1);

    let blend = |a: Point, b: Point, ta: f64, tb: f64| a * ((tb - t) / (tb - ta)) + b * ((t - ta) / (tb - ta));

    let a1 = blend(p[0], p[1], t0, t1);
    let a2 = blend(p[1], p[2], t1, t2);
    let a3 = blend(p[2], p[3], t2, t3);
    let b1 = blend(a1, a2, t0, t2);
    let b2 = blend(a2, a3, t1, t3);
    blend(b1, b2, t1, t2)
}

/// Samples the rendered segments (control point 1 through n-2) of a road.
///
/// Each segment contributes `samples_per_segment` points at uniform parameter steps; the
/// final control point of the last rendered segment closes the spine.
pub fn catmull_rom_interpolate(model: &RoadModel, samples_per_segment: usize) -> Result<RoadGeometry, RoadError> {
    model.check()?;
    let samples = samples_per_segment.max(1);
    let cp = &model.control_points;
    let segments = cp.len() - 3;
    let mut spine = Vec::with_capacity(segments * samples + 1);
    for i in 1..=segments {
        let quad = [cp[i - 1], cp[i], cp[i + 1], cp[i + 2]];
        for j in 0..samples {
            spine.push(barry_goldman_point(quad, j as f64 / samples as f64));
        }
    }
    spine.push(barry_goldman_point([cp[segments - 1], cp[segments], cp[segments + 1], cp[segments + 2]], 1.0));
    RoadGeometry::from_spine(spine)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn road(points: &[[f64; 2]]) -> RoadModel {
        RoadModel::new(points.iter().map(|&p| p.into()).collect())
    }

    #[test]
    fn spine_size_and_interior_points() {
        let m = road(&[[0.0, 0.0], [10.0, 3.0], [20.0, -4.0], [35.0, 2.0], [50.0, 9.0]]);
        let g = catmull_rom_interpolate(&m, 20).unwrap();
        assert_eq!(g.spine.len(), 2 * 20 + 1);
        assert!(g.spine[0].distance(m.control_points[1]) < 1e-9);
        assert!(g.spine[20].distance(m.control_points[2]) < 1e-9);
        assert!(g.spine[40].distance(m.control_points[3]) < 1e-9);
        assert!(g.cumulative_lengths.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn collinear_midpoint() {
        let m = road(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]]);
        let g = catmull_rom_interpolate(&m, 2).unwrap();
        assert!(g.spine[1].distance(Point::new(1.5, 0.0)) < 1e-12);
    }

    #[test]
    fn rejects_bad_models() {
        assert_eq!(
            catmull_rom_interpolate(&road(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]), 10),
            Err(RoadError::TooFewControlPoints(3))
        );
        assert_eq!(
            catmull_rom_interpolate(&road(&[[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [2.0, 0.0]]), 10),
            Err(RoadError::CoincidentControlPoints(1, 2))
        );
    }

    #[test]
    fn point_at_arc_length() {
        let g = RoadGeometry::from_spine(vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0), Point::new(10.0, 10.0)])
            .unwrap();
        assert_eq!(g.point_at(5.0), Point::new(5.0, 0.0));
        assert_eq!(g.point_at(15.0), Point::new(10.0, 5.0));
        assert_eq!(g.point_at(100.0), Point::new(10.0, 10.0));
        assert_eq!(g.length(), 20.0);
    }
}
