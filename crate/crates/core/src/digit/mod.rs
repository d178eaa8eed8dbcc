//! Vector digits: Bézier outlines, rasterization and a centroid classifier.

mod classifier;
mod corpus;
mod domain;
mod model;
mod mutation;
mod raster;
pub mod synth;

pub use classifier::{
    build_classifier, classify_margin, preset_samples, CentroidClassifier, CLASSES, DEFAULT_TEMPERATURE,
};
pub use corpus::{
    embedded_corpus, filter_seeds, labelled_rasters, load_models, load_seeds, parse_models, preset_classifier,
    write_corpus,
};
pub use domain::DigitDomain;
pub use model::{CubicSegment, DigitError, DigitModel};
pub use mutation::{displace, mutate_digit, nth_point, point_count, PointRef};
pub use raster::{
    flatten, flatten_segment, pixel_distance, rasterize, RasterImage, FLATTEN_TOLERANCE, PIXELS, SIDE, SUPERSAMPLE,
};
