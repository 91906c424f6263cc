//! Flat `key = value` config files. Keys mirror the long flag names; a flag
//! given on the command line wins over the file.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use expolys_core::exact::parse_rational;
use expolys_core::{Error, Rational, Result};

#[derive(Debug, Default)]
pub struct Settings {
    file: BTreeMap<String, String>,
}

impl Settings {
    /// Load `path` (if any), rejecting keys outside `allowed`.
    pub fn load(path: Option<&Path>, allowed: &[&str]) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Settings::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read config {}: {e}", path.display())))?;
        let settings = Self::parse(&text)?;
        for key in settings.file.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::usage(format!("unknown config key {key:?}")));
            }
        }
        Ok(settings)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut file = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::usage(format!("config line {}: expected key = value", i + 1))
            })?;
            let key = k.trim().replace('_', "-");
            file.insert(key, v.trim().trim_matches('"').to_string());
        }
        Ok(Settings { file })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.file.get(key).map(String::as_str)
    }

    /// The flag if given, else the parsed config value.
    pub fn value<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|_| Error::usage(format!("bad value for {key}: {s:?}"))),
        }
    }

    pub fn switch(&self, flag: bool, key: &str) -> Result<bool> {
        if flag {
            return Ok(true);
        }
        match self.raw(key) {
            None => Ok(false),
            Some("true" | "yes" | "1") => Ok(true),
            Some("false" | "no" | "0") => Ok(false),
            Some(s) => Err(Error::usage(format!("bad value for {key}: {s:?}"))),
        }
    }

    /// Comma-separated items from repeated flags, else from the config.
    pub fn list(&self, flag: &[String], key: &str) -> Vec<String> {
        let source: Vec<&str> = if flag.is_empty() {
            self.raw(key).into_iter().collect()
        } else {
            flag.iter().map(String::as_str).collect()
        };
        source
            .iter()
            .flat_map(|s| s.split(','))
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect()
    }

    pub fn rational(&self, flag: Option<String>, key: &str) -> Result<Option<Rational>> {
        self.value(flag, key)?
            .map(|s: String| parse_rational(&s))
            .transpose()
    }

    pub fn rationals(&self, flag: &[String], key: &str) -> Result<Vec<Rational>> {
        self.list(flag, key)
            .iter()
            .map(|s| parse_rational(s))
            .collect()
    }

    pub fn integers(&self, flag: &[String], key: &str) -> Result<Vec<u64>> {
        self.list(flag, key)
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::usage(format!("bad value for {key}: {s:?}")))
            })
            .collect()
    }
}
