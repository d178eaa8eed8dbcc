use std::fmt::Debug;

use rand::RngCore;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Everything the search needs to know about an input space and its system under test.
///
/// `concretize` turns a model into the form that is evaluated and compared (a raster, a road
/// spine). Search members keep that form alongside the model, so it is computed once.
pub trait Domain: Sync {
    type Model: Clone + PartialEq + Debug + Send + Sync + Serialize + DeserializeOwned;
    type Concrete: Send + Sync;

    /// `None` when the model lies outside the domain's constraints.
    fn concretize(&self, model: &Self::Model) -> Option<Self::Concrete>;

    fn is_valid(&self, model: &Self::Model) -> bool {
        self.concretize(model).is_some()
    }

    /// Positive when the system behaves as expected, negative on misbehaviour.
    fn evaluate(&self, model: &Self::Model, concrete: &Self::Concrete) -> f64;

    /// Symmetric, nonnegative, zero on identical inputs.
    fn distance(&self, a: &Self::Concrete, b: &Self::Concrete) -> f64;

    fn mutate(&self, model: &Self::Model, rng: &mut dyn RngCore, lb: f64, ub: f64) -> Self::Model;

    /// Inputs on which the system behaves as expected. May return fewer than `count` when the
    /// domain draws from a finite pool.
    fn generate_seeds(&self, count: usize, rng: &mut dyn RngCore) -> Result<Vec<Self::Model>, String>;

    /// Distance between two models, concretizing both. `None` if either is invalid.
    fn model_distance(&self, a: &Self::Model, b: &Self::Model) -> Option<f64> {
        Some(self.distance(&self.concretize(a)?, &self.concretize(b)?))
    }
}
