use std::path::PathBuf;

use num_rational::BigRational;
use sextic_core::invariants::CoveringKind;
use sextic_core::pipeline::{coverings, default_t_samples};
use sextic_core::CycloNum;

use crate::error::{bad, ForgeError};

pub const SEED_VAR: &str = "SEXTIC_FORGE_SEED";
const DEFAULT_SEED: u64 = 0x5e71c;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub groups: Vec<CoveringKind>,
    pub deg: Option<usize>,
    pub case: Option<String>,
    pub t_samples: Vec<BigRational>,
    /// Points of the z-line where each descended curve is sampled.
    pub z_samples: Vec<BigRational>,
    pub output: Option<PathBuf>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            groups: coverings().to_vec(),
            deg: None,
            case: None,
            t_samples: default_t_samples().iter().map(|t| t.as_rational().expect("rational sample")).collect(),
            z_samples: ["1/2", "2", "-3", "5/3"].iter().map(|s| s.parse().expect("literal")).collect(),
            output: None,
            jobs: 0,
        }
    }
}

impl RunConfig {
    pub fn t_values(&self) -> Vec<CycloNum> {
        self.t_samples.iter().map(CycloNum::from_rational).collect()
    }

    pub fn z_values(&self) -> Vec<CycloNum> {
        self.z_samples.iter().map(CycloNum::from_rational).collect()
    }
}

/// `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational, ForgeError> {
    let r: BigRational = s.trim().parse().map_err(|_| bad(format!("`{s}` is not a rational p/q")))?;
    Ok(r)
}

pub fn parse_covering(s: &str) -> Result<CoveringKind, ForgeError> {
    let k = CoveringKind::parse(s).map_err(|e| bad(e.to_string()))?;
    if !coverings().contains(&k) {
        return Err(bad(format!("no lifts are classified over {s}")));
    }
    Ok(k)
}

/// Seed for the randomized suites; never read by the classification run.
pub fn seed_from_env() -> Result<u64, ForgeError> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| bad(format!("{SEED_VAR}={v} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}
