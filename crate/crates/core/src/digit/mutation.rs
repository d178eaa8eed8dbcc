use rand::Rng;

use super::model::DigitModel;
use crate::geom::Point;

/// A movable point of a closed outline. Shared endpoints count once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointRef {
    /// Start of `segment`, which is also the end of the previous segment.
    Joint {
        subpath: usize,
        segment: usize,
    },
    Control {
        subpath: usize,
        segment: usize,
        which: u8,
    },
}

/// Number of distinct movable points.
pub fn point_count(model: &DigitModel) -> usize {
    model.subpaths.iter().map(|p| 3 * p.len()).sum()
}

pub fn nth_point(model: &DigitModel, mut index: usize) -> Option<PointRef> {
    for (k, path) in model.subpaths.iter().enumerate() {
        let n = 3 * path.len();
        if index < n {
            let segment = index / 3;
            return Some(match index % 3 {
                0 => PointRef::Joint { subpath: k, segment },
                r => PointRef::Control { subpath: k, segment, which: r as u8 },
            });
        }
        index -= n;
    }
    None
}

/// Moves one point by `delta`, keeping the outline closed.
pub fn displace(model: &mut DigitModel, at: PointRef, delta: Point) {
    match at {
        PointRef::Joint { subpath, segment } => {
            let path = &mut model.subpaths[subpath];
            let prev = (segment + path.len() - 1) % path.len();
            let moved = path[segment].start + delta;
            path[segment].start = moved;
            path[prev].end = moved;
        }
        PointRef::Control { subpath, segment, which } => {
            let seg = &mut model.subpaths[subpath][segment];
            if which == 1 {
                seg.c1 = seg.c1 + delta;
            } else {
                seg.c2 = seg.c2 + delta;
            }
        }
    }
}

/// Displaces one uniformly chosen point by a random vector whose length is uniform in `[lb, ub]`.
pub fn mutate_digit<R: Rng + ?Sized>(model: &DigitModel, rng: &mut R, lb: f64, ub: f64) -> DigitModel {
    let mut out = model.clone();
    let n = point_count(model);
    if n == 0 {
        return out;
    }
    let at = nth_point(model, rng.gen_range(0..n)).expect("index in range");
    let magnitude = rng.gen_range(lb..=ub);
    let direction = rng.gen_range(0.0..std::f64::consts::TAU);
    displace(&mut out, at, Point::from_polar(magnitude, direction));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::model::CubicSegment;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn triangle() -> DigitModel {
        let (a, b, c) = (Point::new(5.0, 5.0), Point::new(20.0, 6.0), Point::new(10.0, 20.0));
        DigitModel {
            expected_label: 5,
            subpaths: vec![vec![CubicSegment::line(a, b), CubicSegment::line(b, c), CubicSegment::line(c, a)]],
        }
    }

    fn moved_points(a: &DigitModel, b: &DigitModel) -> Vec<(Point, Point)> {
        let pa = a.subpaths.iter().flatten().flat_map(|s| s.points());
        let pb = b.subpaths.iter().flatten().flat_map(|s| s.points());
        pa.zip(pb).filter(|(x, y)| x != y).collect()
    }

    #[test]
    fn degenerate_range_moves_exactly() {
        let m = triangle();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let out = mutate_digit(&m, &mut rng, 0.5, 0.5);
            out.check().unwrap();
            let moved = moved_points(&m, &out);
            assert!(matches!(moved.len(), 1 | 2));
            for (x, y) in moved {
                assert!((x.distance(y) - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn every_point_is_reachable() {
        let m = triangle();
        assert_eq!(point_count(&m), 9);
        assert_eq!(nth_point(&m, 9), None);
        assert_eq!(nth_point(&m, 4), Some(PointRef::Control { subpath: 0, segment: 1, which: 1 }));
    }

    #[test]
    fn joint_move_keeps_closure() {
        let mut m = triangle();
        displace(&mut m, PointRef::Joint { subpath: 0, segment: 0 }, Point::new(1.0, 0.0));
        m.check().unwrap();
        assert_eq!(m.subpaths[0][2].end, Point::new(6.0, 5.0));
    }
}
