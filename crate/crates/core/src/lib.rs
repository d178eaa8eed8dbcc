pub mod digit;
pub mod drive;
pub mod geom;
mod quality;
pub mod report;
pub mod road;
pub mod search;

pub use quality::Quality;
