//! Run configuration: search budgets, degree bounds and the output format.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::ce::SearchOptions;
use crate::error::{Error, Result};

/// Environment variable holding the seed for randomized searches.
pub const SEED_VAR: &str = "QWEYL_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            other => Err(Error::Usage(format!("unknown format '{other}' (expected json, text or dot)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Random trials for matrix and norm searches too large to enumerate.
    pub search_budget: u64,
    /// Numerator/denominator degree bound for norm equations over F_q(t).
    pub function_field_degree_bound: usize,
    /// Largest residue degree enumerated by `spec atlas`.
    pub atlas_ext_degree: usize,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let s = SearchOptions::default();
        RunConfig {
            search_budget: s.budget,
            function_field_degree_bound: s.degree_bound,
            atlas_ext_degree: 1,
            format: Format::Json,
            seed: s.seed,
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<RunConfig> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        RunConfig::from_toml(&text)
    }

    /// Overrides the seed from `QWEYL_SEED` when it is set.
    pub fn with_env(mut self) -> Result<RunConfig> {
        if let Ok(v) = std::env::var(SEED_VAR) {
            self.seed = v
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("{SEED_VAR} must be an unsigned integer, found '{v}'")))?;
        }
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("search_budget", self.search_budget),
            ("function_field_degree_bound", self.function_field_degree_bound as u64),
            ("atlas_ext_degree", self.atlas_ext_degree as u64),
        ] {
            if v == 0 {
                return Err(Error::Usage(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.search_budget,
            degree_bound: self.function_field_degree_bound,
            seed: self.seed,
            ..SearchOptions::default()
        }
    }
}
