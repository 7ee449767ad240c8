use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::CliError;

/// Keys accepted in a config file. They match the long flag names.
pub const KEYS: [&str; 21] = [
    "command",
    "suite",
    "samples",
    "seed",
    "tol",
    "gamma",
    "pbar",
    "mass",
    "theta-s",
    "x0",
    "grid-radial",
    "grid-cos",
    "grid-phi",
    "which",
    "q-min",
    "q-max",
    "points",
    "name",
    "p",
    "t",
    "basis",
];

/// Flat key=value run configuration.
///
/// Lines are `key = value`; blank lines and lines starting with `#` are skipped.
/// `out` is deliberately absent so that a config never names its own output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    values: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key=value", n + 1)))?;
            let key = normalize(k.trim());
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Config(format!("line {}: unknown key `{}`", n + 1, k.trim())));
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {path}: {e}")))?;
        Self::parse(&text)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// The flag value if given, else the config value, else `default`.
    pub fn resolve<T>(&self, key: &str, flag: Option<T>, default: T) -> Result<T, CliError>
    where
        T: FromStr,
    {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.raw(key) {
            Some(s) => s.parse().map_err(|_| CliError::Config(format!("bad value `{s}` for `{key}`"))),
            None => Ok(default),
        }
    }

    pub fn resolve_opt<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        self.raw(key)
            .map(|s| s.parse().map_err(|_| CliError::Config(format!("bad value `{s}` for `{key}`"))))
            .transpose()
    }
}

impl fmt::Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.values {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

fn normalize(key: &str) -> String {
    key.replace('_', "-")
}

/// Parses `x,y,z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple(pub [f64; 3]);

impl FromStr for Triple {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("expected x,y,z, got `{s}`"));
        }
        let mut out = [0.0; 3];
        for (o, p) in out.iter_mut().zip(&parts) {
            *o = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
        }
        Ok(Triple(out))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# packet run\nseed = 7\ntheta_s=0.5\n\nx0 = 1,2,3\n";
        let cfg = RunConfig::parse(text).unwrap();
        assert_eq!(cfg.raw("theta-s"), Some("0.5"));
        let again = RunConfig::parse(&cfg.to_string()).unwrap();
        assert_eq!(again, cfg);
        assert_eq!(again.to_string(), "seed = 7\ntheta-s = 0.5\nx0 = 1,2,3\n");
    }

    #[test]
    fn flags_override_file() {
        let cfg = RunConfig::parse("samples = 40").unwrap();
        assert_eq!(cfg.resolve("samples", None, 100usize).unwrap(), 40);
        assert_eq!(cfg.resolve("samples", Some(3), 100usize).unwrap(), 3);
        assert_eq!(cfg.resolve("seed", None, 7u64).unwrap(), 7);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("colour = red").is_err());
        assert!(RunConfig::parse("seed 7").is_err());
        let cfg = RunConfig::parse("seed = seven").unwrap();
        assert!(cfg.resolve::<u64>("seed", None, 1).is_err());
        assert!("1,2".parse::<Triple>().is_err());
        assert_eq!("1, 2,-3".parse::<Triple>().unwrap(), Triple([1.0, 2.0, -3.0]));
    }
}
