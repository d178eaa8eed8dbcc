use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::model::{CubicSegment, DigitModel};
use crate::geom::Point;

pub const SIDE: usize = 28;
pub const PIXELS: usize = SIDE * SIDE;
/// Subsamples per pixel along each axis.
pub const SUPERSAMPLE: usize = 8;
/// Maximum distance between a flattened polyline and its Bézier segment, canvas units.
pub const FLATTEN_TOLERANCE: f64 = 0.05;

const MAX_SUBDIVISION_DEPTH: u32 = 16;

/// 28 x 28 grayscale image, row-major, 0 = background.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RasterImage {
    pixels: Vec<u8>,
}

impl Default for RasterImage {
    fn default() -> Self {
        Self { pixels: vec![0; PIXELS] }
    }
}

impl RasterImage {
    /// Returns `None` unless exactly 784 values are given.
    pub fn from_pixels(pixels: Vec<u8>) -> Option<Self> {
        (pixels.len() == PIXELS).then_some(Self { pixels })
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.pixels[row * SIDE + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        self.pixels[row * SIDE + col] = value;
    }

    /// Plain (ASCII) portable graymap.
    pub fn to_pgm(&self) -> String {
        let mut out = format!("P2\n{SIDE} {SIDE}\n255\n");
        for row in self.pixels.chunks(SIDE) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Euclidean distance between pixel matrices.
pub fn pixel_distance(a: &RasterImage, b: &RasterImage) -> f64 {
    a.pixels
        .iter()
        .zip(&b.pixels)
        .map(|(&x, &y)| {
            let d = x as f64 - y as f64;
            d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// Appends the polyline approximation of `seg` (excluding its start point) to `out`.
pub fn flatten_segment(seg: &CubicSegment, tolerance: f64, out: &mut Vec<Point>) {
    subdivide(seg, tolerance, 0, out);
}

fn flatness(seg: &CubicSegment) -> f64 {
    let chord = seg.end - seg.start;
    let len = chord.norm();
    if len == 0.0 {
        return seg.c1.distance(seg.start).max(seg.c2.distance(seg.start));
    }
    let d1 = (seg.c1 - seg.start).cross(chord).abs() / len;
    let d2 = (seg.c2 - seg.start).cross(chord).abs() / len;
    d1.max(d2)
}

fn subdivide(seg: &CubicSegment, tolerance: f64, depth: u32, out: &mut Vec<Point>) {
    if depth >= MAX_SUBDIVISION_DEPTH || flatness(seg) <= tolerance {
        out.push(seg.end);
        return;
    }
    // de Casteljau split at t = 1/2
    let ab = seg.start.lerp(seg.c1, 0.5);
    let bc = seg.c1.lerp(seg.c2, 0.5);
    let cd = seg.c2.lerp(seg.end, 0.5);
    let abc = ab.lerp(bc, 0.5);
    let bcd = bc.lerp(cd, 0.5);
    let mid = abc.lerp(bcd, 0.5);
    subdivide(&CubicSegment::new(seg.start, ab, abc, mid), tolerance, depth + 1, out);
    subdivide(&CubicSegment::new(mid, bcd, cd, seg.end), tolerance, depth + 1, out);
}

/// Flattened closed polygons, one per subpath.
pub fn flatten(model: &DigitModel) -> Vec<Vec<Point>> {
    model
        .subpaths
        .iter()
        .filter(|path| !path.is_empty())
        .map(|path| {
            let mut poly = vec![path[0].start];
            for seg in path {
                flatten_segment(seg, FLATTEN_TOLERANCE, &mut poly);
            }
            poly
        })
        .collect()
}

/// Renders the model with the even-odd rule; each pixel holds its covered fraction, estimated on a
/// regular grid of `SUPERSAMPLE` x `SUPERSAMPLE` subsample centers.
pub fn rasterize(model: &DigitModel) -> RasterImage {
    let polygons = flatten(model);
    let mut edges: Vec<(Point, Point)> = Vec::new();
    for poly in &polygons {
        for w in poly.windows(2) {
            if w[0].y != w[1].y {
                edges.push((w[0], w[1]));
            }
        }
    }

    let sub = SUPERSAMPLE as f64;
    let sub_cols = SIDE * SUPERSAMPLE;
    let mut counts = vec![0u32; PIXELS];
    let mut crossings: Vec<f64> = Vec::new();
    for srow in 0..SIDE * SUPERSAMPLE {
        let y = (srow as f64 + 0.5) / sub;
        crossings.clear();
        for &(a, b) in &edges {
            let (lo, hi) = if a.y < b.y { (a, b) } else { (b, a) };
            if y >= lo.y && y < hi.y {
                crossings.push(lo.x + (y - lo.y) * (hi.x - lo.x) / (hi.y - lo.y));
            }
        }
        crossings.sort_by(f64::total_cmp);
        let row = srow / SUPERSAMPLE;
        for span in crossings.chunks_exact(2) {
            // subsample column k sits at x = (k + 0.5) / sub; take those in [span[0], span[1])
            let first = (span[0] * sub - 0.5).ceil().max(0.0);
            let last = ((span[1] * sub - 0.5).ceil() - 1.0).min(sub_cols as f64 - 1.0);
            if last < first {
                continue;
            }
            for k in first as usize..=last as usize {
                counts[row * SIDE + k / SUPERSAMPLE] += 1;
            }
        }
    }

    let total = (SUPERSAMPLE * SUPERSAMPLE) as f64;
    RasterImage { pixels: counts.iter().map(|&c| (255.0 * c as f64 / total).round() as u8).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Vec<CubicSegment> {
        let (a, b, c, d) = (Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1));
        vec![CubicSegment::line(a, b), CubicSegment::line(b, c), CubicSegment::line(c, d), CubicSegment::line(d, a)]
    }

    fn model(subpaths: Vec<Vec<CubicSegment>>) -> DigitModel {
        DigitModel { expected_label: 0, subpaths }
    }

    #[test]
    fn empty_model_is_blank() {
        assert_eq!(rasterize(&model(vec![])), RasterImage::default());
    }

    #[test]
    fn full_canvas() {
        let img = rasterize(&model(vec![rect(0.0, 0.0, 28.0, 28.0)]));
        assert!(img.pixels().iter().all(|&v| v == 255));
    }

    #[test]
    fn half_covered_pixel() {
        let img = rasterize(&model(vec![rect(2.0, 3.0, 10.5, 6.0)]));
        assert_eq!(img.get(4, 9), 255);
        assert!(matches!(img.get(4, 10), 127 | 128));
        assert_eq!(img.get(4, 11), 0);
    }

    #[test]
    fn even_odd_hole() {
        let img = rasterize(&model(vec![rect(4.0, 4.0, 20.0, 20.0), rect(8.0, 8.0, 16.0, 16.0)]));
        assert_eq!(img.get(5, 5), 255);
        assert_eq!(img.get(12, 12), 0);
    }

    #[test]
    fn outside_canvas_contributes_nothing() {
        let img = rasterize(&model(vec![rect(-10.0, -10.0, -2.0, 40.0), rect(30.0, 0.0, 40.0, 28.0)]));
        assert!(img.pixels().iter().all(|&v| v == 0));
    }

    #[test]
    fn one_pixel_difference() {
        let a = RasterImage::default();
        let mut b = a.clone();
        b.set(3, 7, 255);
        assert_eq!(pixel_distance(&a, &b), 255.0);
        assert_eq!(pixel_distance(&a, &a), 0.0);
    }

    #[test]
    fn pgm_header() {
        let pgm = RasterImage::default().to_pgm();
        assert!(pgm.starts_with("P2\n28 28\n255\n"));
        assert_eq!(pgm.lines().count(), 3 + 28);
    }

    #[test]
    fn flattening_respects_tolerance() {
        let seg = CubicSegment::new(
            Point::new(0.0, 0.0),
            Point::new(0.0, 10.0),
            Point::new(10.0, 10.0),
            Point::new(10.0, 0.0),
        );
        let mut pts = vec![seg.start];
        flatten_segment(&seg, FLATTEN_TOLERANCE, &mut pts);
        assert_eq!(*pts.last().unwrap(), seg.end);
        // every polyline vertex lies on the curve; midpoints stay close to it
        for w in pts.windows(2) {
            let mid = w[0].lerp(w[1], 0.5);
            let closest = (0..=2000).map(|k| seg.eval(k as f64 / 2000.0).distance(mid)).fold(f64::INFINITY, f64::min);
            assert!(closest < FLATTEN_TOLERANCE + 1e-2, "{closest}");
        }
    }
}
