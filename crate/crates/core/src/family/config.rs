use std::collections::BTreeMap;

use thiserror::Error;

use super::{ExprError, Family};

/// Errors from the family registry file format.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `<family>.<key> = <value>`")]
    BadLine { line: usize },
    #[error("line {line}: unknown key {key:?} (expected f, df, or bound)")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key {key:?} for family {family:?}")]
    DuplicateKey {
        line: usize,
        family: String,
        key: String,
    },
    #[error("line {line}: bad number {value:?}")]
    BadNumber { line: usize, value: String },
    #[error("family {family:?}: missing required key {key:?}")]
    MissingKey { family: String, key: String },
    #[error("family {family:?}: bound must be positive, got {bound}")]
    BadBound { family: String, bound: f64 },
    #[error("family {family:?} not found in registry")]
    UnknownFamily { family: String },
    #[error("family {family:?}, key {key:?}: {source}")]
    BadExpression {
        family: String,
        key: String,
        source: ExprError,
    },
}

#[derive(Debug, Clone, Default)]
struct RawEntry {
    f: Option<String>,
    df: Option<String>,
    bound: Option<f64>,
}

/// Families parsed from a flat key-value config:
///
/// ```text
/// # one expression key per family; df is optional
/// cubicish.f = 3*t - x^2 - 0.1*x^3
/// cubicish.bound = 3.0
/// myquad.f = 3.5*t - 1 - x^2
/// myquad.df = -2*x
/// myquad.bound = 2.5
/// ```
#[derive(Debug, Clone)]
pub struct FamilyRegistry {
    entries: BTreeMap<String, RawEntry>,
}

impl FamilyRegistry {
    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn build(&self, name: &str) -> Result<Family, ConfigError> {
        let entry = self
            .entries
            .get(name)
            .ok_or_else(|| ConfigError::UnknownFamily {
                family: name.to_string(),
            })?;
        let f_src = entry.f.as_deref().ok_or_else(|| ConfigError::MissingKey {
            family: name.to_string(),
            key: "f".to_string(),
        })?;
        let bound = entry.bound.ok_or_else(|| ConfigError::MissingKey {
            family: name.to_string(),
            key: "bound".to_string(),
        })?;
        if !(bound > 0.0) {
            return Err(ConfigError::BadBound {
                family: name.to_string(),
                bound,
            });
        }
        Family::from_expressions(name, f_src, entry.df.as_deref(), bound).map_err(|source| {
            ConfigError::BadExpression {
                family: name.to_string(),
                key: if entry.df.is_some() { "f/df" } else { "f" }.to_string(),
                source,
            }
        })
    }
}

/// Parse registry text. Lines are `family.key = value`; blank lines and
/// `#` comments are ignored.
pub fn parse_registry(text: &str) -> Result<FamilyRegistry, ConfigError> {
    let mut entries: BTreeMap<String, RawEntry> = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (lhs, value) = content
            .split_once('=')
            .ok_or(ConfigError::BadLine { line })?;
        let (family, key) = lhs
            .trim()
            .split_once('.')
            .ok_or(ConfigError::BadLine { line })?;
        let family = family.trim();
        let key = key.trim();
        let value = value.trim();
        if family.is_empty() || value.is_empty() {
            return Err(ConfigError::BadLine { line });
        }
        let entry = entries.entry(family.to_string()).or_default();
        match key {
            "f" => {
                if entry.f.replace(value.to_string()).is_some() {
                    return Err(duplicate(line, family, key));
                }
            }
            "df" => {
                if entry.df.replace(value.to_string()).is_some() {
                    return Err(duplicate(line, family, key));
                }
            }
            "bound" => {
                let bound = value.parse::<f64>().map_err(|_| ConfigError::BadNumber {
                    line,
                    value: value.to_string(),
                })?;
                if entry.bound.replace(bound).is_some() {
                    return Err(duplicate(line, family, key));
                }
            }
            other => {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: other.to_string(),
                })
            }
        }
    }
    Ok(FamilyRegistry { entries })
}

fn duplicate(line: usize, family: &str, key: &str) -> ConfigError {
    ConfigError::DuplicateKey {
        line,
        family: family.to_string(),
        key: key.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# sample registry
myquad.f = 3.5*t - 1 - x^2
myquad.df = -2*x
myquad.bound = 2.5

nodf.f = t - x^2   # derivative by finite differences
nodf.bound = 2.2
";

    #[test]
    fn parses_families() {
        let reg = parse_registry(SAMPLE).unwrap();
        assert_eq!(reg.names(), vec!["myquad", "nodf"]);
        let fam = reg.build("myquad").unwrap();
        assert_eq!(fam.eval(1.0, 0.0), 2.5);
        assert_eq!(fam.deriv(0.0, 3.0), -6.0);
        let nodf = reg.build("nodf").unwrap();
        assert_eq!(
            nodf.derivative_kind(),
            crate::family::DerivativeKind::FiniteDifference
        );
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_registry("foo = 1"),
            Err(ConfigError::BadLine { line: 1 })
        ));
        assert!(matches!(
            parse_registry("a.zzz = 1"),
            Err(ConfigError::UnknownKey { .. })
        ));
        assert!(matches!(
            parse_registry("a.bound = soup"),
            Err(ConfigError::BadNumber { .. })
        ));
        assert!(matches!(
            parse_registry("a.f = t\na.f = x"),
            Err(ConfigError::DuplicateKey { .. })
        ));
    }

    #[test]
    fn missing_keys_surface_at_build() {
        let reg = parse_registry("a.f = t - x^2").unwrap();
        assert!(matches!(
            reg.build("a"),
            Err(ConfigError::MissingKey { .. })
        ));
        assert!(matches!(
            reg.build("nope"),
            Err(ConfigError::UnknownFamily { .. })
        ));
        let reg = parse_registry("a.f = t\na.bound = -1").unwrap();
        assert!(matches!(reg.build("a"), Err(ConfigError::BadBound { .. })));
    }
}
