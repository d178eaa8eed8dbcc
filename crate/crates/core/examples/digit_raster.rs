//! Rasterizes a digit, classifies it with both presets and writes PGM and SVG renderings.
//!
//! cargo run --example digit_raster -- [label] [out_dir]

use std::path::PathBuf;

use frontier_core::digit::{classify_margin, preset_classifier, rasterize, synth, DEFAULT_TEMPERATURE};
use frontier_core::report::digit_svg;
use frontier_core::Quality;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let label: u8 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "digit-raster".into()));
    std::fs::create_dir_all(&out)?;

    let mut rng = ChaCha8Rng::seed_from_u64(u64::from(label));
    let models =
        [("template", synth::template(label)), ("sample", synth::sample(label, &Default::default(), &mut rng))];
    for quality in [Quality::High, Quality::Low] {
        let clf = preset_classifier(quality, DEFAULT_TEMPERATURE)?;
        for (name, model) in &models {
            let image = rasterize(model);
            println!(
                "{quality} {name:8}: predicted {} margin {:+.4}",
                clf.predict(&image),
                classify_margin(&image, &clf, label)
            );
        }
    }
    for (name, model) in &models {
        let image = rasterize(model);
        std::fs::write(out.join(format!("{name}_{label}.pgm")), image.to_pgm())?;
        std::fs::write(out.join(format!("{name}_{label}.svg")), digit_svg(model, &image))?;
    }
    println!("wrote renderings to {}", out.display());
    Ok(())
}
