//! Regenerates the embedded digit corpus.
//!
//! cargo run --example digit_corpus -- crates/core/data/digits

use std::path::PathBuf;

use frontier_core::digit::synth::{synthesize_corpus, CORPUS_SEED};
use frontier_core::digit::write_corpus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(|| "digits".into());
    let corpus = synthesize_corpus(CORPUS_SEED);
    write_corpus(&corpus, &dir)?;
    println!(
        "wrote {} training, {} held-out, {} seed and {} template models to {}",
        corpus.train.len(),
        corpus.heldout.len(),
        corpus.seeds.len(),
        corpus.templates.len(),
        dir.display()
    );
    Ok(())
}
