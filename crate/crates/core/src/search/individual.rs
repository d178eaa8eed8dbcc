use std::fmt;
use std::sync::Arc;

use super::domain::Domain;

/// One input of an individual, with its concretized form and cached eval.
pub struct Member<D: Domain> {
    pub id: u64,
    pub model: D::Model,
    concrete: Arc<D::Concrete>,
    eval: Option<f64>,
}

impl<D: Domain> Clone for Member<D> {
    fn clone(&self) -> Self {
        Self { id: self.id, model: self.model.clone(), concrete: Arc::clone(&self.concrete), eval: self.eval }
    }
}

impl<D: Domain> fmt::Debug for Member<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Member").field("id", &self.id).field("eval", &self.eval).field("model", &self.model).finish()
    }
}

impl<D: Domain> Member<D> {
    /// `None` when the model is invalid in `domain`.
    pub fn new(domain: &D, id: u64, model: D::Model) -> Option<Self> {
        let concrete = domain.concretize(&model)?;
        Some(Self { id, model, concrete: Arc::new(concrete), eval: None })
    }

    /// Rebuilds a member whose eval is already known, e.g. when loading an exported archive.
    pub fn with_eval(domain: &D, id: u64, model: D::Model, eval: f64) -> Option<Self> {
        let mut m = Self::new(domain, id, model)?;
        m.eval = Some(eval);
        Some(m)
    }

    pub fn concrete(&self) -> &D::Concrete {
        &self.concrete
    }

    pub fn eval(&self) -> Option<f64> {
        self.eval
    }

    /// Computes the eval once; later calls return the cached value.
    pub fn evaluate(&mut self, domain: &D) -> f64 {
        *self.eval.get_or_insert_with(|| domain.evaluate(&self.model, &self.concrete))
    }

    /// Same input under a new id.
    pub fn copy_as(&self, id: u64) -> Self {
        Self { id, ..self.clone() }
    }
}

/// A candidate pair: `m1` is meant to behave, `m2` to misbehave.
pub struct Individual<D: Domain> {
    pub id: u64,
    pub m1: Member<D>,
    pub m2: Member<D>,
    /// Quality fitness, maximized.
    pub f1: f64,
    /// Frontier fitness, minimized.
    pub f2: f64,
    pub rank: usize,
    pub crowding: f64,
    pub seed_id: usize,
}

impl<D: Domain> Clone for Individual<D> {
    fn clone(&self) -> Self {
        Self {
            id: self.id,
            m1: self.m1.clone(),
            m2: self.m2.clone(),
            f1: self.f1,
            f2: self.f2,
            rank: self.rank,
            crowding: self.crowding,
            seed_id: self.seed_id,
        }
    }
}

impl<D: Domain> fmt::Debug for Individual<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Individual")
            .field("id", &self.id)
            .field("seed_id", &self.seed_id)
            .field("f1", &self.f1)
            .field("f2", &self.f2)
            .field("rank", &self.rank)
            .field("crowding", &self.crowding)
            .field("m1", &self.m1)
            .field("m2", &self.m2)
            .finish()
    }
}

impl<D: Domain> Individual<D> {
    pub fn new(id: u64, m1: Member<D>, m2: Member<D>, seed_id: usize) -> Self {
        Self { id, m1, m2, f1: f64::NEG_INFINITY, f2: f64::INFINITY, rank: 0, crowding: 0.0, seed_id }
    }

    pub fn evals(&self) -> Option<(f64, f64)> {
        Some((self.m1.eval()?, self.m2.eval()?))
    }

    pub fn evaluate(&mut self, domain: &D) -> (f64, f64) {
        (self.m1.evaluate(domain), self.m2.evaluate(domain))
    }

    /// Distance between the two members.
    pub fn spread(&self, domain: &D) -> f64 {
        domain.distance(self.m1.concrete(), self.m2.concrete())
    }

    /// Evals of strictly opposite signs.
    pub fn is_frontier(&self) -> bool {
        self.evals().is_some_and(|(a, b)| (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0))
    }

    /// Puts the behaving member first.
    pub fn canonicalize(&mut self) {
        if let Some((a, b)) = self.evals() {
            if a < 0.0 && b > 0.0 {
                std::mem::swap(&mut self.m1, &mut self.m2);
            }
        }
    }

    pub fn member_ids(&self) -> (u64, u64) {
        (self.m1.id, self.m2.id)
    }
}

/// Mean member distance under the better of the two pairings.
pub fn individual_distance<D: Domain>(domain: &D, x: &Individual<D>, y: &Individual<D>) -> f64 {
    let d = |a: &Member<D>, b: &Member<D>| domain.distance(a.concrete(), b.concrete());
    let aligned = (d(&x.m1, &y.m1) + d(&x.m2, &y.m2)) / 2.0;
    let swapped = (d(&x.m1, &y.m2) + d(&x.m2, &y.m1)) / 2.0;
    aligned.min(swapped)
}
