use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::Point;

#[derive(Debug, Error)]
pub enum DigitError {
    #[error("subpath {subpath} is not closed at segment {segment}")]
    OpenSubpath { subpath: usize, segment: usize },
    #[error("empty subpath {0}")]
    EmptySubpath(usize),
    #[error("non-finite coordinate in digit model")]
    NonFinite,
    #[error("expected label must be in 0..=9, got {0}")]
    BadLabel(u8),
    #[error("class {0} has no samples")]
    EmptyClass(u8),
    #[error("temperature must be positive, got {0}")]
    BadTemperature(f64),
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed digit models in {path}: {source}")]
    Schema {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

/// One cubic Bézier segment, serialized as `[start, c1, c2, end]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[Point; 4]", into = "[Point; 4]")]
pub struct CubicSegment {
    pub start: Point,
    pub c1: Point,
    pub c2: Point,
    pub end: Point,
}

impl CubicSegment {
    pub fn new(start: Point, c1: Point, c2: Point, end: Point) -> Self {
        Self { start, c1, c2, end }
    }

    /// A straight line as an exactly equivalent cubic.
    pub fn line(start: Point, end: Point) -> Self {
        Self::new(start, start.lerp(end, 1.0 / 3.0), start.lerp(end, 2.0 / 3.0), end)
    }

    /// Degree elevation of the quadratic `start, control, end`.
    pub fn from_quadratic(start: Point, control: Point, end: Point) -> Self {
        Self::new(start, start + (control - start) * (2.0 / 3.0), end + (control - end) * (2.0 / 3.0), end)
    }

    pub fn eval(&self, t: f64) -> Point {
        let u = 1.0 - t;
        self.start * (u * u * u) + self.c1 * (3.0 * u * u * t) + self.c2 * (3.0 * u * t * t) + self.end * (t * t * t)
    }

    pub fn points(&self) -> [Point; 4] {
        [self.start, self.c1, self.c2, self.end]
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.end, self.c2, self.c1, self.start)
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Self {
        Self::new(f(self.start), f(self.c1), f(self.c2), f(self.end))
    }
}

impl From<[Point; 4]> for CubicSegment {
    fn from([start, c1, c2, end]: [Point; 4]) -> Self {
        Self::new(start, c1, c2, end)
    }
}

impl From<CubicSegment> for [Point; 4] {
    fn from(s: CubicSegment) -> Self {
        s.points()
    }
}

/// Vector model of a handwritten digit: closed outlines on a 28 x 28 canvas (y grows downwards).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DigitModel {
    pub expected_label: u8,
    pub subpaths: Vec<Vec<CubicSegment>>,
}

impl DigitModel {
    pub fn check(&self) -> Result<(), DigitError> {
        if self.expected_label > 9 {
            return Err(DigitError::BadLabel(self.expected_label));
        }
        for (k, path) in self.subpaths.iter().enumerate() {
            if path.is_empty() {
                return Err(DigitError::EmptySubpath(k));
            }
            if path.iter().flat_map(|s| s.points()).any(|p| !p.is_finite()) {
                return Err(DigitError::NonFinite);
            }
            for i in 0..path.len() {
                let next = &path[(i + 1) % path.len()];
                if path[i].end != next.start {
                    return Err(DigitError::OpenSubpath { subpath: k, segment: i });
                }
            }
        }
        Ok(())
    }

    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Self {
        Self {
            expected_label: self.expected_label,
            subpaths: self.subpaths.iter().map(|path| path.iter().map(|s| s.map(&f)).collect()).collect(),
        }
    }

    pub fn translate(&self, offset: Point) -> Self {
        self.map_points(|p| p + offset)
    }
}
