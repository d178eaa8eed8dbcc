//! Interpolates a few roads and prints their length, curvature and pairwise distances.

use std::f64::consts::FRAC_PI_2;

use frontier_core::road::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), RoadError> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut roads = vec![
        ("straight", straight_road(175.0, 25.0)),
        ("arc r=50", arc_road(50.0, FRAC_PI_2)),
        ("arc r=12", arc_road(12.0, FRAC_PI_2)),
    ];
    for k in 0..3 {
        roads.push((["seed a", "seed b", "seed c"][k], generate_seed_road(&mut rng, &SeedRoadParams::default())?));
    }

    let geometries: Vec<RoadGeometry> =
        roads.iter().map(|(_, m)| catmull_rom_interpolate(m, DEFAULT_SAMPLES_PER_SEGMENT)).collect::<Result<_, _>>()?;
    for ((name, model), g) in roads.iter().zip(&geometries) {
        let verdict = match first_violation(model, g) {
            None => "valid".to_string(),
            Some(v) => v.to_string(),
        };
        println!(
            "{name:9} {:6.1} m  {:3} tokens  min radius {:8.2} m  {verdict}",
            g.length(),
            turning_tokens(g, RESAMPLE_STEP).len(),
            min_curvature_radius(g)
        );
    }

    println!("\nroad distance");
    for (i, a) in geometries.iter().enumerate() {
        let row: Vec<String> = geometries.iter().map(|b| format!("{:6.2}", road_distance(a, b))).collect();
        println!("{:9} {}", roads[i].0, row.join(" "));
    }
    Ok(())
}
