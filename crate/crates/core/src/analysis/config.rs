use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::Deserialize;

use crate::analysis::rules::{known_rule_ids, FindingSeverity};
use crate::analysis::AnalysisError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityThresholds {
    pub max_elements: usize,
    pub max_usage_fan_in: usize,
}

impl Default for ComplexityThresholds {
    fn default() -> Self {
        Self {
            max_elements: 30,
            max_usage_fan_in: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub enabled_rules: BTreeSet<String>,
    pub thresholds: ComplexityThresholds,
    /// Findings at or above this severity make `lint` exit non-zero.
    pub fail_severity: FindingSeverity,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            enabled_rules: known_rule_ids().map(str::to_owned).collect(),
            thresholds: ComplexityThresholds::default(),
            fail_severity: FindingSeverity::Warning,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    fail_severity: Option<String>,
    #[serde(default)]
    rules: BTreeMap<String, bool>,
    #[serde(default)]
    thresholds: ThresholdsFile,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ThresholdsFile {
    max_elements: Option<i64>,
    max_usage_fan_in: Option<i64>,
}

fn positive(name: &'static str, value: Option<i64>, default: usize) -> Result<usize, AnalysisError> {
    match value {
        None => Ok(default),
        Some(v) if v > 0 => Ok(v as usize),
        Some(v) => Err(AnalysisError::InvalidThreshold { name, value: v }),
    }
}

impl AnalysisConfig {
    pub fn is_enabled(&self, id: &str) -> bool {
        self.enabled_rules.contains(id)
    }

    pub fn disable(mut self, id: &str) -> Self {
        self.enabled_rules.remove(id);
        self
    }

    /// Config with exactly the given rules enabled.
    pub fn only<'a>(ids: impl IntoIterator<Item = &'a str>) -> Self {
        Self {
            enabled_rules: ids.into_iter().map(str::to_owned).collect(),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), AnalysisError> {
        if let Some(bad) = self
            .enabled_rules
            .iter()
            .find(|id| !known_rule_ids().any(|k| k == id.as_str()))
        {
            return Err(AnalysisError::UnknownRuleId(bad.clone()));
        }
        if self.thresholds.max_elements == 0 {
            return Err(AnalysisError::InvalidThreshold { name: "max_elements", value: 0 });
        }
        if self.thresholds.max_usage_fan_in == 0 {
            return Err(AnalysisError::InvalidThreshold { name: "max_usage_fan_in", value: 0 });
        }
        Ok(())
    }

    /// Reads the TOML rule configuration format:
    ///
    /// ```toml
    /// fail_severity = "warning"   # or "info"
    ///
    /// [rules]
    /// "MS-03" = false
    ///
    /// [thresholds]
    /// max_elements = 30
    /// max_usage_fan_in = 8
    /// ```
    ///
    /// Rules not mentioned stay enabled.
    pub fn from_toml_str(text: &str) -> Result<Self, AnalysisError> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| AnalysisError::Config(e.to_string()))?;
        let mut config = AnalysisConfig::default();
        if let Some(s) = file.fail_severity {
            config.fail_severity =
                FindingSeverity::parse(&s).ok_or(AnalysisError::InvalidSeverity(s))?;
        }
        for (id, enabled) in file.rules {
            if !known_rule_ids().any(|k| k == id) {
                return Err(AnalysisError::UnknownRuleId(id));
            }
            if enabled {
                config.enabled_rules.insert(id);
            } else {
                config.enabled_rules.remove(&id);
            }
        }
        let defaults = ComplexityThresholds::default();
        config.thresholds = ComplexityThresholds {
            max_elements: positive("max_elements", file.thresholds.max_elements, defaults.max_elements)?,
            max_usage_fan_in: positive(
                "max_usage_fan_in",
                file.thresholds.max_usage_fan_in,
                defaults.max_usage_fan_in,
            )?,
        };
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, AnalysisError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AnalysisError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = AnalysisConfig::default();
        assert_eq!(c.enabled_rules.len(), 19);
        assert_eq!(c.thresholds.max_elements, 30);
        assert_eq!(c.thresholds.max_usage_fan_in, 8);
        assert_eq!(c.fail_severity, FindingSeverity::Warning);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn toml_round() {
        let c = AnalysisConfig::from_toml_str(
            "fail_severity = \"info\"\n[rules]\n\"MS-03\" = false\n[thresholds]\nmax_elements = 12\n",
        )
        .unwrap();
        assert!(!c.is_enabled("MS-03"));
        assert!(c.is_enabled("MS-02"));
        assert_eq!(c.thresholds.max_elements, 12);
        assert_eq!(c.thresholds.max_usage_fan_in, 8);
        assert_eq!(c.fail_severity, FindingSeverity::Info);
    }

    #[test]
    fn unknown_rule_rejected() {
        let err = AnalysisConfig::from_toml_str("[rules]\n\"XX-99\" = true\n").unwrap_err();
        assert_eq!(err, AnalysisError::UnknownRuleId("XX-99".into()));
        assert!(AnalysisConfig::only(["BO-01", "ZZ"]).validate().is_err());
    }

    #[test]
    fn thresholds_must_be_positive() {
        assert!(matches!(
            AnalysisConfig::from_toml_str("[thresholds]\nmax_usage_fan_in = 0\n"),
            Err(AnalysisError::InvalidThreshold { .. })
        ));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(matches!(
            AnalysisConfig::from_toml_str("colour = true\n"),
            Err(AnalysisError::Config(_))
        ));
    }
}
