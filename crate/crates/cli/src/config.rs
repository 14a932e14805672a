//! Run configuration read from TOML.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use ihall_core::genfun::Identity;

/// Overrides `--config` when set.
pub const CONFIG_ENV: &str = "IHALL_CONFIG";

pub const GUARD_KEYS: [&str; 4] = ["hallcount", "verify", "realize", "cacheVerify"];

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct RunConfig {
    pub cache_path: Option<PathBuf>,
    #[serde(default)]
    pub size_guards: BTreeMap<String, u64>,
    #[serde(default)]
    pub truncation_orders: BTreeMap<String, usize>,
    #[serde(default)]
    pub output_format: OutputFormat,
    pub worker_count: Option<usize>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| e.to_string())?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    fn validate(&self) -> Result<(), String> {
        for (k, v) in &self.size_guards {
            if !GUARD_KEYS.contains(&k.as_str()) {
                return Err(format!("unknown size guard {k:?}, expected one of {GUARD_KEYS:?}"));
            }
            if *v == 0 {
                return Err(format!("size guard {k:?} must be positive"));
            }
        }
        for (k, v) in &self.truncation_orders {
            k.parse::<Identity>().map_err(|e| e.to_string())?;
            if *v == 0 {
                return Err(format!("truncation order for {k:?} must be positive"));
            }
        }
        if self.worker_count == Some(0) {
            return Err("workerCount must be positive".into());
        }
        Ok(())
    }

    pub fn guard(&self, key: &str, default: u64) -> u64 {
        self.size_guards.get(key).copied().unwrap_or(default)
    }

    pub fn order(&self, id: Identity, default: usize) -> usize {
        self.truncation_orders
            .iter()
            .find(|(k, _)| k.parse::<Identity>().is_ok_and(|i| i == id))
            .map_or(default, |(_, v)| *v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config() {
        let cfg = RunConfig::parse(
            r#"
            cachePath = "/tmp/hall.jsonl"
            outputFormat = "json"
            workerCount = 2
            [sizeGuards]
            hallcount = 4096
            [truncationOrders]
            HE = 5
            "#,
        )
        .unwrap();
        assert_eq!(cfg.output_format, OutputFormat::Json);
        assert_eq!(cfg.guard("hallcount", 1), 4096);
        assert_eq!(cfg.order(Identity::HE, 8), 5);
        assert_eq!(cfg.order(Identity::TP, 6), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("colour = 1").is_err());
        assert!(RunConfig::parse("[sizeGuards]\nmystery = 3").is_err());
        assert!(RunConfig::parse("[sizeGuards]\nverify = 0").is_err());
        assert!(RunConfig::parse("[truncationOrders]\nXY = 3").is_err());
        assert!(RunConfig::parse("workerCount = 0").is_err());
        assert!(RunConfig::parse("outputFormat = \"yaml\"").is_err());
    }
}
