mod common;

use std::f64::consts::{PI, TAU};

use common::oracle::{catmull_rom_hermite, circle_spine, edit_distance_dp};
use frontier_core::drive::{
    lane_eval, simulate_drive, simulate_path, ControllerParams, Outcome, DEFAULT_DT, DEFAULT_MAX_STEPS,
};
use frontier_core::geom::Point;
use frontier_core::road::*;
use frontier_core::Quality;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seed_road(seed: u64) -> RoadModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_seed_road(&mut rng, &SeedRoadParams::default()).unwrap()
}

fn geometry(model: &RoadModel) -> RoadGeometry {
    catmull_rom_interpolate(model, DEFAULT_SAMPLES_PER_SEGMENT).unwrap()
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Every pair of non-adjacent spine segments, proper or touching intersections.
fn brute_force_crossing(pts: &[Point]) -> bool {
    let n = pts.len() - 1;
    for i in 0..n {
        for j in i + 2..n {
            let (a, b, c, d) = (pts[i], pts[i + 1], pts[j], pts[j + 1]);
            let (o1, o2) = (orientation(a, b, c), orientation(a, b, d));
            let (o3, o4) = (orientation(c, d, a), orientation(c, d, b));
            if o1 * o2 <= 0.0 && o3 * o4 <= 0.0 && (o1 != 0.0 || o2 != 0.0) {
                return true;
            }
        }
    }
    false
}

/// Random walk with turns wide enough that some spines cross themselves.
fn twisty_road(rng: &mut ChaCha8Rng) -> RoadModel {
    let mut heading = rng.gen_range(0.0..TAU);
    let mut p = Point::new(0.0, 0.0);
    let mut points = vec![p];
    for _ in 1..10 {
        p = p + Point::from_polar(rng.gen_range(10.0..30.0), heading);
        points.push(p);
        heading += rng.gen_range(-2.2..2.2);
    }
    RoadModel::new(points)
}

fn circle_geometry(radius: f64, sweep: f64) -> RoadGeometry {
    RoadGeometry::from_spine(circle_spine(radius, sweep)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spine_passes_through_interior_control_points(seed in any::<u64>()) {
        let m = seed_road(seed);
        let g = geometry(&m);
        for (k, cp) in m.control_points[1..m.control_points.len() - 1].iter().enumerate() {
            prop_assert!(g.spine[k * DEFAULT_SAMPLES_PER_SEGMENT].distance(*cp) < 1e-9);
        }
    }

    #[test]
    fn barry_goldman_matches_hermite_form(
        pts in prop::array::uniform4((-50.0f64..50.0, -50.0f64..50.0)),
        u in 0.0f64..=1.0,
    ) {
        let p = pts.map(|(x, y)| Point::new(x, y));
        prop_assume!(p.windows(2).all(|w| w[0].distance(w[1]) > 0.5));
        let got = barry_goldman_point(p, u);
        let want = catmull_rom_hermite(p, u);
        prop_assert!(got.distance(want) < 1e-9, "{got:?} vs {want:?}");
    }

    #[test]
    fn rigid_motion_moves_the_spine_along(seed in any::<u64>(), angle in 0.0f64..TAU, dx in -80.0f64..80.0, dy in -80.0f64..80.0) {
        let m = seed_road(seed);
        let (c, s) = (angle.cos(), angle.sin());
        let motion = |p: Point| Point::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy);
        let moved = m.map_points(motion);
        let (g, h) = (geometry(&m), geometry(&moved));
        for (a, b) in g.spine.iter().zip(&h.spine) {
            prop_assert!(motion(*a).distance(*b) < 1e-6);
        }
        let (r1, r2) = (min_curvature_radius(&g), min_curvature_radius(&h));
        prop_assert!((r1 - r2).abs() <= 1e-6 * r1.max(1.0));
        prop_assert!(road_distance(&g, &h) < 1e-6);
        prop_assert_eq!(road_distance(&h, &h), 0.0);
    }

    #[test]
    fn mirrored_lane_gives_the_same_offsets(seed in 0u64..10_000) {
        let m = seed_road(seed);
        let g = geometry(&m);
        let lane = g.offset(m.lane_width / 2.0);
        let mirrored: Vec<Point> = lane.iter().map(|p| Point::new(p.x, -p.y)).collect();
        for quality in [Quality::High, Quality::Low] {
            let params = ControllerParams::preset(quality);
            let a = simulate_path(&lane, m.lane_width, &params, DEFAULT_DT, DEFAULT_MAX_STEPS).unwrap();
            let b = simulate_path(&mirrored, m.lane_width, &params, DEFAULT_DT, DEFAULT_MAX_STEPS).unwrap();
            prop_assert_eq!(a.states.len(), b.states.len());
            for (x, y) in a.states.iter().zip(&b.states) {
                prop_assert!((x.lane_center_distance - y.lane_center_distance).abs() < 1e-6);
            }
            prop_assert_eq!(lane_eval(&a, m.lane_width).to_bits(), lane_eval(&b, m.lane_width).to_bits());
        }
    }

    #[test]
    fn eval_sign_matches_outcome(seed in 0u64..10_000) {
        let m = seed_road(seed);
        for quality in [Quality::High, Quality::Low] {
            let trace = simulate_drive(&m, &ControllerParams::preset(quality), DEFAULT_DT, DEFAULT_MAX_STEPS).unwrap();
            prop_assume!(trace.outcome != Outcome::Timeout);
            prop_assert_eq!(lane_eval(&trace, m.lane_width) > 0.0, trace.outcome != Outcome::OutOfBound);
        }
    }
}

#[test]
fn edit_distance_matches_edit_distance_dp() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let a = geometry(&seed_road(rng.gen()));
        let b = geometry(&seed_road(rng.gen()));
        let (ta, tb) = (turning_tokens(&a, RESAMPLE_STEP), turning_tokens(&b, RESAMPLE_STEP));
        assert_eq!(road_distance(&a, &b), edit_distance_dp(&ta, &tb));
    }
}

#[test]
fn road_distance_is_a_metric_on_seed_roads() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let [a, b, c] = [(); 3].map(|_| geometry(&seed_road(rng.gen())));
        let (ab, bc, ac) = (road_distance(&a, &b), road_distance(&b, &c), road_distance(&a, &c));
        assert!(ac <= ab + bc + 1e-9, "{ac} > {ab} + {bc}");
        assert_eq!(ab, road_distance(&b, &a));
        assert_eq!(road_distance(&a, &a), 0.0);
    }
}

#[test]
fn spine_crossings_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut crossing = 0;
    for _ in 0..100 {
        let m = twisty_road(&mut rng);
        let g = geometry(&m);
        let want = brute_force_crossing(&g.spine);
        assert_eq!(spine_self_intersects(&g).is_some(), want);
        if want {
            crossing += 1;
            assert!(!validate_road(&m, &g));
        }
    }
    // both outcomes must be exercised
    assert!(crossing > 5 && crossing < 95, "{crossing} crossing roads");
}

#[test]
fn circle_curvature_is_recovered() {
    for r in [20.0, 50.0, 100.0] {
        let got = min_curvature_radius(&circle_geometry(r, PI / 2.0));
        assert!((got - r).abs() / r < 0.01, "R={r}: {got}");
    }
}

#[test]
fn collinear_control_points_give_a_straight_spine() {
    let m = straight_road(150.0, 25.0);
    let g = geometry(&m);
    assert!(g.spine.iter().all(|p| p.y.abs() < 1e-12));
    assert_eq!(min_curvature_radius(&g), f64::INFINITY);
    assert!(turning_tokens(&g, RESAMPLE_STEP).iter().all(|t| t.abs() < 1e-12));
}

#[test]
fn straight_drive_keeps_half_a_lane() {
    let m = straight_road(175.0, 25.0);
    for quality in [Quality::High, Quality::Low] {
        let trace = simulate_drive(&m, &ControllerParams::preset(quality), DEFAULT_DT, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(trace.outcome, Outcome::Completed);
        assert!((lane_eval(&trace, m.lane_width) - m.lane_width / 2.0).abs() < 1e-3);
    }
}

#[test]
fn tighter_arcs_are_no_easier() {
    let ladder = [60.0, 40.0, 30.0, 24.0, 20.0, 17.0, 15.0, 13.0, 11.0, 9.5, 8.0, 7.0, 6.0];
    for quality in [Quality::High, Quality::Low] {
        let params = ControllerParams::preset(quality);
        let evals: Vec<f64> = ladder
            .iter()
            .map(|&r| {
                let m = arc_road(r, PI / 2.0);
                lane_eval(&simulate_drive(&m, &params, DEFAULT_DT, DEFAULT_MAX_STEPS).unwrap(), m.lane_width)
            })
            .collect();
        let first_fail = evals.iter().position(|&e| e < 0.0).unwrap_or(evals.len());
        for k in 1..first_fail.min(evals.len() - 1) + 1 {
            assert!(evals[k] <= evals[k - 1] + 1e-9, "{quality}: {evals:?}");
        }
        assert!(evals[first_fail..].iter().all(|&e| e < 0.0), "{quality}: {evals:?}");
    }
}
