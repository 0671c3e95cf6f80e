//! Flat `key = value` configuration merged with command-line overrides.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use wilson_core::exactpoly::parse_rational;
use wilson_core::numeric::QuadratureSpec;
use wilson_core::operators::Params;
use wilson_core::weyl::Weight;

/// A configuration problem; always exit code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub type ConfigResult<T> = Result<T, ConfigError>;

fn err<T>(msg: impl Into<String>) -> ConfigResult<T> {
    Err(ConfigError(msg.into()))
}

pub const PARAM_KEYS: [&str; 5] = ["t0", "u0", "t", "tn", "un"];

const KNOWN_KEYS: [&str; 16] = [
    "n",
    "t0",
    "u0",
    "t",
    "tn",
    "un",
    "degree",
    "lambda_sum",
    "lambda",
    "range",
    "suite",
    "truncation",
    "panels",
    "nodes_per_panel",
    "tolerance",
    "output",
];

/// Parses `key = value` lines. Blank lines and `#` comments are skipped;
/// values may be wrapped in double quotes; keys may use `-` or `_`.
pub fn parse_config(text: &str) -> ConfigResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return err(format!("config line {}: expected key = value, got {line:?}", no + 1));
        };
        let key = k.trim().replace('-', "_");
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return err(format!("config line {}: unknown key {key:?}", no + 1));
        }
        let v = v.trim();
        let v = v.strip_prefix('"').and_then(|s| s.strip_suffix('"')).unwrap_or(v);
        if out.insert(key.clone(), v.to_string()).is_some() {
            return err(format!("config line {}: duplicate key {key:?}", no + 1));
        }
    }
    Ok(out)
}

pub fn load_config(path: &Path) -> ConfigResult<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&text)
}

/// The merged view of file values and flags; flags win.
#[derive(Debug, Default)]
pub struct Settings(BTreeMap<String, String>);

impl Settings {
    pub fn new(file: Option<&Path>) -> ConfigResult<Self> {
        Ok(Settings(match file {
            Some(p) => load_config(p)?,
            None => BTreeMap::new(),
        }))
    }

    #[cfg(test)]
    pub fn from_map(map: BTreeMap<String, String>) -> Self {
        Settings(map)
    }

    /// Overrides `key` when the flag was given.
    pub fn set<T: ToString>(&mut self, key: &str, value: Option<T>) {
        if let Some(v) = value {
            self.0.insert(key.to_string(), v.to_string());
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str, what: &str) -> ConfigResult<Option<T>> {
        self.get(key)
            .map(|v| {
                v.trim()
                    .parse::<T>()
                    .map_err(|_| ConfigError(format!("{key}: expected {what}, got {v:?}")))
            })
            .transpose()
    }

    pub fn n(&self) -> ConfigResult<usize> {
        let n = self.parsed::<usize>("n", "an integer")?.unwrap_or(2);
        if n < 2 {
            return err(format!("n: must be at least 2, got {n}"));
        }
        Ok(n)
    }

    /// The five parameters. With none given anywhere the default set
    /// `(7/10, 3/10, 1/2, 4/5, 2/5)` is used; once any is given, all are required.
    pub fn params(&self) -> ConfigResult<Params> {
        if PARAM_KEYS.iter().all(|k| self.get(k).is_none()) {
            return Ok(Params::p_star());
        }
        let mut vals = Vec::with_capacity(5);
        for k in PARAM_KEYS {
            let Some(v) = self.get(k) else {
                return err(format!("missing parameter {k:?}"));
            };
            vals.push(parse_rational(v).map_err(|e| ConfigError(format!("{k}: {e}")))?);
        }
        let [t0, u0, t, tn, un]: [_; 5] = vals.try_into().expect("five values");
        Ok(Params::new(t0, u0, t, tn, un))
    }

    pub fn usize_opt(&self, key: &str) -> ConfigResult<Option<usize>> {
        self.parsed::<usize>(key, "a nonnegative integer")
    }

    pub fn i64_opt(&self, key: &str) -> ConfigResult<Option<i64>> {
        match self.parsed::<i64>(key, "an integer")? {
            Some(v) if v < 0 => err(format!("{key}: must be nonnegative, got {v}")),
            v => Ok(v),
        }
    }

    pub fn f64_opt(&self, key: &str) -> ConfigResult<Option<f64>> {
        match self.parsed::<f64>(key, "a number")? {
            Some(v) if !(v.is_finite() && v > 0.0) => err(format!("{key}: must be positive, got {v}")),
            v => Ok(v),
        }
    }

    /// Comma-separated integers with exactly `n` entries.
    pub fn lambda(&self, n: usize) -> ConfigResult<Weight> {
        let Some(v) = self.get("lambda") else {
            return err("missing \"lambda\"");
        };
        parse_weight(v, n)
    }

    /// Comma-separated suite names.
    pub fn suites(&self) -> ConfigResult<Vec<String>> {
        let Some(v) = self.get("suite") else {
            return err("missing \"suite\"");
        };
        let names: Vec<String> = v
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if names.is_empty() {
            return err("suite: empty list");
        }
        Ok(names)
    }

    pub fn quadrature_spec(&self) -> ConfigResult<QuadratureSpec> {
        let d = QuadratureSpec::default();
        let spec = QuadratureSpec {
            truncation: self.f64_opt("truncation")?.unwrap_or(d.truncation),
            panels: self.usize_opt("panels")?.unwrap_or(d.panels),
            nodes_per_panel: self.usize_opt("nodes_per_panel")?.unwrap_or(d.nodes_per_panel),
        };
        spec.validate().map_err(|e| ConfigError(e.to_string()))?;
        Ok(spec)
    }

    pub fn output(&self) -> Option<PathBuf> {
        self.get("output").map(PathBuf::from)
    }
}

pub fn parse_weight(s: &str, n: usize) -> ConfigResult<Weight> {
    let parts: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let Ok(w) = parts else {
        return err(format!("lambda: expected comma-separated integers, got {s:?}"));
    };
    if w.len() != n {
        return err(format!("lambda: expected {n} entries, got {}", w.len()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wilson_core::exactpoly::q;

    const PSTAR: &str = "n = 2\nt0 = 7/10\nu0 = 3/10\nt = 1/2\ntn = 4/5\nun = 2/5\n";

    #[test]
    fn file_gives_default_set() {
        let s = Settings::from_map(parse_config(PSTAR).unwrap());
        assert_eq!(s.params().unwrap(), Params::p_star());
        assert_eq!(s.n().unwrap(), 2);
    }

    #[test]
    fn missing_key_is_named() {
        let text = PSTAR.replace("un = 2/5\n", "");
        let e = Settings::from_map(parse_config(&text).unwrap()).params().unwrap_err();
        assert!(e.0.contains("\"un\""), "{e}");
    }

    #[test]
    fn malformed_rational_is_named() {
        let text = PSTAR.replace("t = 1/2", "t = 1/x");
        let e = Settings::from_map(parse_config(&text).unwrap()).params().unwrap_err();
        assert!(e.0.starts_with("t:"), "{e}");
    }

    #[test]
    fn zero_t_parses() {
        let text = PSTAR.replace("t = 1/2", "t = \"0\"");
        let p = Settings::from_map(parse_config(&text).unwrap()).params().unwrap();
        assert!(p.is_t_zero());
    }

    #[test]
    fn flags_override_file() {
        let mut s = Settings::from_map(parse_config(PSTAR).unwrap());
        s.set("t", Some("1/3"));
        assert_eq!(s.params().unwrap().t, q(1, 3));
    }

    #[test]
    fn rejects_unknown_and_duplicate_keys() {
        assert!(parse_config("colour = red").is_err());
        assert!(parse_config("n = 2\nn = 3").is_err());
        assert!(parse_config("just words").is_err());
    }

    #[test]
    fn comments_and_dashes() {
        let m = parse_config("# comment\n\nlambda-sum = 3\n").unwrap();
        assert_eq!(m.get("lambda_sum").map(String::as_str), Some("3"));
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("-1, 0", 2).unwrap(), vec![-1, 0]);
        assert!(parse_weight("1,0,0", 2).is_err());
        assert!(parse_weight("a,b", 2).is_err());
    }
}
