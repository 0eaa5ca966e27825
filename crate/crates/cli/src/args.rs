//! Minimal flag scanner: positionals plus `--name value` and `--switch`.

use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Default)]
pub struct Parsed {
    pub positionals: Vec<String>,
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

impl Parsed {
    pub fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    pub fn f64_flag(&self, name: &str) -> Result<f64, String> {
        let raw = self
            .value(name)
            .ok_or_else(|| format!("missing required flag {name}"))?;
        raw.parse()
            .map_err(|_| format!("flag {name} expects a number, got `{raw}`"))
    }

    pub fn u64_flag_or(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.value(name) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|_| format!("flag {name} expects a non-negative integer, got `{raw}`")),
        }
    }

    pub fn usize_flag(&self, name: &str) -> Result<usize, String> {
        let raw = self
            .value(name)
            .ok_or_else(|| format!("missing required flag {name}"))?;
        raw.parse()
            .map_err(|_| format!("flag {name} expects a non-negative integer, got `{raw}`"))
    }
}

/// Scans `args` against the declared flags. `value_flags` consume the
/// following argument; `switch_flags` stand alone.
pub fn scan(
    args: &[String],
    value_flags: &[&str],
    switch_flags: &[&str],
) -> Result<Parsed, String> {
    let mut parsed = Parsed::default();
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let name = format!("--{name}");
            if value_flags.contains(&name.as_str()) {
                let value = iter
                    .next()
                    .ok_or_else(|| format!("flag {name} expects a value"))?;
                if parsed.values.insert(name.clone(), value.clone()).is_some() {
                    return Err(format!("flag {name} given twice"));
                }
            } else if switch_flags.contains(&name.as_str()) {
                parsed.switches.insert(name);
            } else {
                return Err(format!("unknown flag {name}"));
            }
        } else {
            parsed.positionals.push(arg.clone());
        }
    }
    Ok(parsed)
}
