//! Procedural handwriting: digit skeletons drawn as ribbons of Bézier outline.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::model::{CubicSegment, DigitModel};
use crate::geom::Point;

const CENTER: Point = Point { x: 14.0, y: 14.0 };
const RING_POINTS: usize = 12;

/// Centerline of one pen stroke.
#[derive(Clone, Debug, PartialEq)]
pub enum Stroke {
    Open(Vec<Point>),
    /// Closed loop through the given points.
    Loop(Vec<Point>),
}

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn ellipse(cx: f64, cy: f64, rx: f64, ry: f64) -> Stroke {
    Stroke::Loop(
        (0..RING_POINTS)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / RING_POINTS as f64;
                p(cx + rx * a.cos(), cy + ry * a.sin())
            })
            .collect(),
    )
}

/// Stroke skeleton of a digit, canvas coordinates with y down.
pub fn skeleton(label: u8) -> Vec<Stroke> {
    use Stroke::Open;
    match label {
        0 => vec![ellipse(14.0, 14.0, 5.5, 8.5)],
        1 => vec![Open(vec![p(11.0, 8.0), p(14.5, 4.5), p(14.5, 14.0), p(14.5, 23.5)])],
        2 => vec![Open(vec![
            p(8.0, 9.0),
            p(11.0, 5.0),
            p(16.0, 4.5),
            p(19.5, 8.0),
            p(18.0, 13.0),
            p(8.0, 23.0),
            p(14.0, 23.0),
            p(21.0, 23.0),
        ])],
        3 => vec![Open(vec![
            p(8.0, 6.0),
            p(14.0, 4.0),
            p(19.0, 7.0),
            p(17.0, 12.0),
            p(12.0, 13.5),
            p(18.0, 15.5),
            p(19.5, 20.0),
            p(14.0, 24.0),
            p(7.5, 22.0),
        ])],
        4 => vec![
            Open(vec![p(15.0, 4.0), p(10.5, 10.5), p(7.0, 17.0), p(13.0, 17.0), p(21.5, 17.0)]),
            Open(vec![p(17.0, 8.0), p(17.0, 11.5), p(17.0, 15.0)]),
            Open(vec![p(17.0, 19.0), p(17.0, 21.5), p(17.0, 24.0)]),
        ],
        5 => vec![Open(vec![
            p(20.0, 4.5),
            p(14.0, 4.5),
            p(10.0, 5.0),
            p(9.0, 12.0),
            p(15.0, 11.0),
            p(20.0, 15.0),
            p(19.5, 21.0),
            p(13.0, 24.0),
            p(7.0, 21.5),
        ])],
        6 => vec![Open(vec![
            p(19.0, 4.0),
            p(13.0, 6.5),
            p(9.0, 12.0),
            p(8.5, 18.0),
            p(11.0, 23.0),
            p(16.0, 23.5),
            p(19.5, 19.5),
            p(17.0, 15.0),
            p(12.5, 14.5),
            p(10.5, 16.0),
        ])],
        7 => vec![Open(vec![p(7.0, 5.0), p(14.0, 5.0), p(20.5, 5.0), p(16.5, 13.0), p(12.5, 24.0)])],
        8 => vec![ellipse(14.0, 8.7, 4.5, 4.0), ellipse(14.0, 19.6, 5.3, 4.2)],
        9 => vec![ellipse(13.5, 9.5, 5.0, 5.0), Open(vec![p(19.5, 15.2), p(18.8, 19.5), p(17.5, 24.0)])],
        _ => Vec::new(),
    }
}

/// Catmull-Rom tangent handles (already divided by six).
fn handles(points: &[Point], closed: bool) -> Vec<Point> {
    let n = points.len();
    (0..n)
        .map(|i| {
            let (prev, next) = if closed {
                (points[(i + n - 1) % n], points[(i + 1) % n])
            } else {
                (points[i.saturating_sub(1)], points[(i + 1).min(n - 1)])
            };
            (next - prev) * (1.0 / 6.0)
        })
        .collect()
}

fn normal(handle: Point) -> Point {
    let len = handle.norm();
    if len == 0.0 {
        Point::new(0.0, 0.0)
    } else {
        Point::new(-handle.y / len, handle.x / len)
    }
}

fn round3(q: Point) -> Point {
    Point::new((q.x * 1000.0).round() / 1000.0, (q.y * 1000.0).round() / 1000.0)
}

/// Cubic path through `pts` (with handles `h`), open or closed.
fn smooth_path(pts: &[Point], h: &[Point], closed: bool) -> Vec<CubicSegment> {
    let n = pts.len();
    let count = if closed { n } else { n - 1 };
    (0..count)
        .map(|i| {
            let j = (i + 1) % n;
            CubicSegment::new(pts[i], round3(pts[i] + h[i]), round3(pts[j] - h[j]), pts[j])
        })
        .collect()
}

/// Outline subpaths of a stroke drawn with the given half width.
pub fn stroke_outline(stroke: &Stroke, half_width: f64) -> Vec<Vec<CubicSegment>> {
    match stroke {
        Stroke::Open(points) if points.len() >= 2 => {
            let h = handles(points, false);
            let left: Vec<Point> = points.iter().zip(&h).map(|(&q, &d)| round3(q + normal(d) * half_width)).collect();
            let right: Vec<Point> = points.iter().zip(&h).map(|(&q, &d)| round3(q - normal(d) * half_width)).collect();
            let mut path = smooth_path(&left, &h, false);
            path.push(CubicSegment::line(*left.last().unwrap(), *right.last().unwrap()));
            let back: Vec<CubicSegment> = smooth_path(&right, &h, false).iter().rev().map(|s| s.reversed()).collect();
            path.extend(back);
            path.push(CubicSegment::line(right[0], left[0]));
            vec![path]
        }
        Stroke::Loop(points) if points.len() >= 3 => {
            let h = handles(points, true);
            let outer: Vec<Point> = points.iter().zip(&h).map(|(&q, &d)| round3(q + normal(d) * half_width)).collect();
            let inner: Vec<Point> = points.iter().zip(&h).map(|(&q, &d)| round3(q - normal(d) * half_width)).collect();
            vec![smooth_path(&outer, &h, true), smooth_path(&inner, &h, true)]
        }
        _ => Vec::new(),
    }
}

/// Variation applied when sampling handwriting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Handwriting {
    pub scale: (f64, f64),
    pub aspect: f64,
    pub shear: f64,
    pub rotation: f64,
    pub shift: f64,
    pub point_jitter: f64,
    pub half_width: (f64, f64),
}

impl Default for Handwriting {
    fn default() -> Self {
        Self {
            scale: (0.85, 1.08),
            aspect: 0.08,
            shear: 0.18,
            rotation: 0.12,
            shift: 1.5,
            point_jitter: 0.8,
            half_width: (1.0, 1.6),
        }
    }
}

/// Canonical rendering of a digit: no jitter, medium pen.
pub fn template(label: u8) -> DigitModel {
    let subpaths = skeleton(label).iter().flat_map(|s| stroke_outline(s, 1.3)).collect();
    DigitModel { expected_label: label, subpaths }
}

/// One handwritten sample of `label`.
pub fn sample<R: Rng + ?Sized>(label: u8, style: &Handwriting, rng: &mut R) -> DigitModel {
    let scale = rng.gen_range(style.scale.0..=style.scale.1);
    let aspect = 1.0 + rng.gen_range(-style.aspect..=style.aspect);
    let shear = rng.gen_range(-style.shear..=style.shear);
    let rotation = rng.gen_range(-style.rotation..=style.rotation);
    let shift = Point::new(rng.gen_range(-style.shift..=style.shift), rng.gen_range(-style.shift..=style.shift));
    let half_width = rng.gen_range(style.half_width.0..=style.half_width.1);

    let transform = |q: Point| {
        let d = q - CENTER;
        let d = Point::new((d.x + shear * d.y) * scale * aspect, d.y * scale);
        CENTER + d.rotate(rotation) + shift
    };
    let mut jitter = |q: Point| {
        let j = style.point_jitter;
        q + Point::new(rng.gen_range(-j..=j), rng.gen_range(-j..=j))
    };

    let subpaths = skeleton(label)
        .into_iter()
        .map(|stroke| match stroke {
            Stroke::Open(pts) => Stroke::Open(pts.into_iter().map(|q| jitter(transform(q))).collect()),
            Stroke::Loop(pts) => Stroke::Loop(pts.into_iter().map(|q| jitter(transform(q))).collect()),
        })
        .flat_map(|s| stroke_outline(&s, half_width))
        .collect();
    DigitModel { expected_label: label, subpaths }
}

/// Labelled vector corpus: classifier training data, a held-out slice, seed candidates and templates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub train: Vec<DigitModel>,
    pub heldout: Vec<DigitModel>,
    pub seeds: Vec<DigitModel>,
    pub templates: Vec<DigitModel>,
}

pub const TRAIN_PER_CLASS: usize = 10;
pub const HELDOUT_PER_CLASS: usize = 5;
pub const SEED_COUNT: usize = 100;
pub const SEED_LABEL: u8 = 5;
pub const CORPUS_SEED: u64 = 0x5eed_d161;

pub fn synthesize_corpus(rng_seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let style = Handwriting::default();
    let batch = |per_class: usize, rng: &mut ChaCha8Rng| -> Vec<DigitModel> {
        (0..per_class).flat_map(|_| (0..10u8).collect::<Vec<_>>()).map(|label| sample(label, &style, rng)).collect()
    };
    let train = batch(TRAIN_PER_CLASS, &mut rng);
    let heldout = batch(HELDOUT_PER_CLASS, &mut rng);
    let seeds = (0..SEED_COUNT).map(|_| sample(SEED_LABEL, &style, &mut rng)).collect();
    let templates = (0..10).map(template).collect();
    Corpus { train, heldout, seeds, templates }
}
