#![allow(dead_code)]

pub mod oracle;

use frontier_core::search::{Domain, Individual, Member};
use rand::{Rng, RngCore};

/// Inputs are points on a line; the system behaves below `boundary`.
pub struct Line {
    pub boundary: f64,
}

impl Domain for Line {
    type Model = f64;
    type Concrete = f64;

    fn concretize(&self, model: &f64) -> Option<f64> {
        (model.is_finite() && (-10.0..=10.0).contains(model)).then_some(*model)
    }

    fn evaluate(&self, model: &f64, _concrete: &f64) -> f64 {
        self.boundary - model
    }

    fn distance(&self, a: &f64, b: &f64) -> f64 {
        (a - b).abs()
    }

    fn mutate(&self, model: &f64, rng: &mut dyn RngCore, lb: f64, ub: f64) -> f64 {
        let step = rng.gen_range(lb..=ub);
        if rng.gen_bool(0.5) {
            model + step
        } else {
            model - step
        }
    }

    fn generate_seeds(&self, count: usize, rng: &mut dyn RngCore) -> Result<Vec<f64>, String> {
        Ok((0..count).map(|_| rng.gen_range(0.0..self.boundary.max(0.1) * 0.5)).collect())
    }
}

pub fn line() -> Line {
    Line { boundary: 1.0 }
}

/// Evaluated individual with the given member positions.
pub fn pair(domain: &Line, id: u64, a: f64, b: f64) -> Individual<Line> {
    let mut m1 = Member::new(domain, 2 * id, a).unwrap();
    let mut m2 = Member::new(domain, 2 * id + 1, b).unwrap();
    m1.evaluate(domain);
    m2.evaluate(domain);
    Individual::new(id, m1, m2, 0)
}

/// Individual carrying only objective values, for selection tests.
pub fn scored(domain: &Line, id: u64, f1: f64, f2: f64) -> Individual<Line> {
    let mut x = pair(domain, id, 0.0, 0.5);
    x.f1 = f1;
    x.f2 = f2;
    x
}
