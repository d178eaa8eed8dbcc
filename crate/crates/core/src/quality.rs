use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Quality level of a system under test: the well and the poorly performing version.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quality {
    #[default]
    #[serde(rename = "hq")]
    High,
    #[serde(rename = "lq")]
    Low,
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quality::High => "hq",
            Quality::Low => "lq",
        })
    }
}

impl FromStr for Quality {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hq" | "high" => Ok(Quality::High),
            "lq" | "low" => Ok(Quality::Low),
            other => Err(format!("unknown preset {other:?} (expected hq or lq)")),
        }
    }
}
