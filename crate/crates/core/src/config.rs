//! Run configuration: a TOML document describing problem, map, compressor,
//! algorithm mode, and stepsizes. Unknown keys, type mismatches, and
//! constraint violations are rejected at parse time with the offending key
//! and line.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::compressors::CompressorSpec;
use crate::error::{Error, Result};
use crate::operators::Nonsmooth;

/// A value that can be left to the library to resolve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Setting {
    Value(f64),
    Auto(AutoKeyword),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoKeyword {
    Auto,
}

impl Default for Setting {
    fn default() -> Self {
        Setting::Auto(AutoKeyword::Auto)
    }
}

impl Setting {
    pub fn value(&self) -> Option<f64> {
        match self {
            Setting::Value(v) => Some(*v),
            Setting::Auto(_) => None,
        }
    }

    pub fn resolve(&self, auto: impl FnOnce() -> Result<f64>) -> Result<f64> {
        match self {
            Setting::Value(v) => Ok(*v),
            Setting::Auto(_) => auto(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProblemConfig {
    /// Conditioned least squares with planted singular values.
    Synthetic {
        rows: usize,
        cols: usize,
        cond: f64,
        reg: f64,
        #[serde(default)]
        seed: u64,
        /// Optional nonsmooth term turning the problem composite.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h: Option<Nonsmooth>,
    },
    /// LIBSVM-format regression data from disk.
    Libsvm {
        path: PathBuf,
        reg: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        h: Option<Nonsmooth>,
    },
    /// Bilinearly coupled saddle problem with a random coupling matrix.
    Saddle {
        mu: f64,
        coupling_dim: usize,
        #[serde(default)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapConfig {
    Gd {
        #[serde(default)]
        gamma: Setting,
    },
    Sgd {
        #[serde(default)]
        gamma: Setting,
        minibatch: usize,
    },
    ProxSgd {
        #[serde(default)]
        gamma: Setting,
        minibatch: usize,
    },
    Gda {
        #[serde(default)]
        gamma: Setting,
    },
    DavisYin {
        #[serde(default)]
        gamma: Setting,
        #[serde(default = "nonsmooth_none")]
        g: Nonsmooth,
        #[serde(default = "nonsmooth_none")]
        h: Nonsmooth,
    },
}

fn nonsmooth_none() -> Nonsmooth {
    Nonsmooth::None
}

impl MapConfig {
    pub fn kind_name(&self) -> &'static str {
        match self {
            MapConfig::Gd { .. } => "gd",
            MapConfig::Sgd { .. } => "sgd",
            MapConfig::ProxSgd { .. } => "prox_sgd",
            MapConfig::Gda { .. } => "gda",
            MapConfig::DavisYin { .. } => "davis_yin",
        }
    }

    pub fn gamma(&self) -> Setting {
        match self {
            MapConfig::Gd { gamma }
            | MapConfig::Sgd { gamma, .. }
            | MapConfig::ProxSgd { gamma, .. }
            | MapConfig::Gda { gamma }
            | MapConfig::DavisYin { gamma, .. } => *gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    Plain,
    Vr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum X0Kind {
    Zero,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H0Kind {
    Zero,
    X0,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitConfig {
    #[serde(default = "default_x0")]
    pub x0: X0Kind,
    #[serde(default = "default_x0_scale")]
    pub x0_scale: f64,
    #[serde(default = "default_h0")]
    pub h0: H0Kind,
}

fn default_x0() -> X0Kind {
    X0Kind::Zero
}
fn default_x0_scale() -> f64 {
    1.0
}
fn default_h0() -> H0Kind {
    H0Kind::Zero
}

impl Default for InitConfig {
    fn default() -> Self {
        InitConfig {
            x0: X0Kind::Zero,
            x0_scale: 1.0,
            h0: H0Kind::Zero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepsizeConfig {
    #[serde(default)]
    pub alpha: Setting,
    #[serde(default)]
    pub eta: Setting,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: ModeName,
    pub iterations: u64,
    #[serde(default = "default_nodes")]
    pub nodes: usize,
    pub seeds: Vec<u64>,
    #[serde(default = "default_mc_budget")]
    pub mc_budget: usize,
    pub output_dir: PathBuf,
    /// Optional threshold for the communication-to-target readout.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_r_sq: Option<f64>,
    /// Trailing fraction of the trajectory averaged as the plateau estimate.
    #[serde(default = "default_plateau_window")]
    pub plateau_window: f64,
    #[serde(default)]
    pub init: InitConfig,
    pub problem: ProblemConfig,
    pub map: MapConfig,
    pub compressor: CompressorSpec,
    #[serde(default)]
    pub stepsizes: StepsizeConfig,
}

fn default_nodes() -> usize {
    1
}
fn default_mc_budget() -> usize {
    2048
}
fn default_plateau_window() -> f64 {
    0.2
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::invalid_config("iterations must be >= 1"));
        }
        if self.nodes == 0 {
            return Err(Error::invalid_config("nodes must be >= 1"));
        }
        if self.seeds.is_empty() {
            return Err(Error::invalid_config("seeds must be nonempty"));
        }
        if !(self.plateau_window > 0.0 && self.plateau_window <= 1.0) {
            return Err(Error::invalid_config("plateau_window must lie in (0, 1]"));
        }
        match &self.problem {
            ProblemConfig::Synthetic {
                rows,
                cols,
                cond,
                reg,
                h,
                ..
            } => {
                if !(cond.is_finite() && *cond >= 1.0) {
                    return Err(Error::invalid_config("condition number must be >= 1"));
                }
                if rows < cols {
                    return Err(Error::invalid_config("synthetic problem needs rows >= cols"));
                }
                if !(reg.is_finite() && *reg >= 0.0) {
                    return Err(Error::invalid_config("reg must be >= 0"));
                }
                if let Some(h) = h {
                    h.validate()?;
                }
            }
            ProblemConfig::Libsvm { path, reg, h } => {
                if !path.exists() {
                    return Err(Error::invalid_config(format!(
                        "libsvm path does not exist: {}",
                        path.display()
                    )));
                }
                if !(reg.is_finite() && *reg >= 0.0) {
                    return Err(Error::invalid_config("reg must be >= 0"));
                }
                if let Some(h) = h {
                    h.validate()?;
                }
            }
            ProblemConfig::Saddle { mu, coupling_dim, .. } => {
                if !(mu.is_finite() && *mu > 0.0) {
                    return Err(Error::invalid_config("mu must be > 0"));
                }
                if *coupling_dim == 0 {
                    return Err(Error::invalid_config("coupling_dim must be >= 1"));
                }
            }
        }
        if let Some(gamma) = self.map.gamma().value() {
            if !(gamma.is_finite() && gamma > 0.0) {
                return Err(Error::invalid_config("gamma must be positive"));
            }
        }
        for (name, setting) in [("alpha", self.stepsizes.alpha), ("eta", self.stepsizes.eta)] {
            if let Some(v) = setting.value() {
                if !(v.is_finite() && v > 0.0 && v <= 1.0) {
                    return Err(Error::invalid_config(format!(
                        "{name} must lie in (0, 1]"
                    )));
                }
            }
        }
        if let Some(t) = self.target_r_sq {
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::invalid_config("target_r_sq must be >= 0"));
            }
        }
        Ok(())
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let cfg: RunConfig = toml::from_str(text)
        .map_err(|e| Error::invalid_config(e.to_string()))?;
    check_unknown_keys(text)?;
    cfg.validate()?;
    Ok(cfg)
}

/// Serde ignores unknown fields inside internally-tagged enums, so the
/// kind-discriminated subtables (`problem`, `map`, `compressor`, nonsmooth
/// terms) get their key sets checked explicitly.
fn check_unknown_keys(text: &str) -> Result<()> {
    let value: toml::Value = toml::from_str(text)
        .map_err(|e| Error::invalid_config(e.to_string()))?;
    let root = value.as_table().expect("top level of a TOML document");

    let check_table = |path: &str, allowed: &[&str]| -> Result<()> {
        let mut node = root;
        for part in path.split('.') {
            node = match node.get(part).and_then(|v| v.as_table()) {
                Some(t) => t,
                None => return Ok(()),
            };
        }
        for key in node.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::invalid_config(format!(
                    "unknown key `{key}` in [{path}]{}",
                    locate_key(text, key)
                )));
            }
        }
        Ok(())
    };

    let kind_of = |path: &str| -> Option<String> {
        let mut node = root;
        for part in path.split('.') {
            node = node.get(part)?.as_table()?;
        }
        Some(node.get("kind")?.as_str()?.to_string())
    };

    if let Some(kind) = kind_of("problem") {
        let allowed: &[&str] = match kind.as_str() {
            "synthetic" => &["kind", "rows", "cols", "cond", "reg", "seed", "h"],
            "libsvm" => &["kind", "path", "reg", "h"],
            "saddle" => &["kind", "mu", "coupling_dim", "seed"],
            _ => &["kind"],
        };
        check_table("problem", allowed)?;
    }
    for nonsmooth in ["problem.h", "map.g", "map.h"] {
        if let Some(kind) = kind_of(nonsmooth) {
            let allowed: &[&str] = match kind.as_str() {
                "none" => &["kind"],
                _ => &["kind", "weight"],
            };
            check_table(nonsmooth, allowed)?;
        }
    }
    if let Some(kind) = kind_of("map") {
        let allowed: &[&str] = match kind.as_str() {
            "gd" | "gda" => &["kind", "gamma"],
            "sgd" | "prox_sgd" => &["kind", "gamma", "minibatch"],
            "davis_yin" => &["kind", "gamma", "g", "h"],
            _ => &["kind"],
        };
        check_table("map", allowed)?;
    }
    if let Some(kind) = kind_of("compressor") {
        let allowed: &[&str] = match kind.as_str() {
            "rand_k" => &["kind", "k"],
            "dithering" => &["kind", "levels"],
            _ => &["kind"],
        };
        check_table("compressor", allowed)?;
    }
    Ok(())
}

fn locate_key(text: &str, key: &str) -> String {
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed
            .strip_prefix(key)
            .map(|rest| rest.trim_start().starts_with('='))
            .unwrap_or(false)
        {
            return format!(" at line {}", i + 1);
        }
    }
    String::new()
}

/// Reads, parses, and validates a configuration file. Relative `libsvm`
/// paths are resolved against the config file's directory.
pub fn parse_config_file(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut cfg: RunConfig = toml::from_str(&text)
        .map_err(|e| Error::invalid_config(format!("{}: {e}", path.display())))?;
    check_unknown_keys(&text)?;
    if let ProblemConfig::Libsvm { path: data, .. } = &mut cfg.problem {
        if data.is_relative() {
            if let Some(dir) = path.parent() {
                *data = dir.join(&data);
            }
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Renders a configuration back to TOML.
pub fn serialize_config(cfg: &RunConfig) -> Result<String> {
    toml::to_string_pretty(cfg).map_err(|e| Error::invalid_config(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
mode = "plain"
iterations = 10
seeds = [1]
output_dir = "out/demo"

[problem]
kind = "synthetic"
rows = 20
cols = 4
cond = 2.0
reg = 0.1

[map]
kind = "gd"

[compressor]
kind = "natural"
"#;

    #[test]
    fn minimal_config_defaults() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.nodes, 1);
        assert_eq!(cfg.map.gamma(), Setting::default());
        assert_eq!(cfg.stepsizes.alpha.value(), None);
        assert_eq!(cfg.init.x0, X0Kind::Zero);
        assert_eq!(cfg.plateau_window, 0.2);
    }

    #[test]
    fn rejects_condition_number_below_one() {
        let text = MINIMAL.replace("cond = 2.0", "cond = 0.5");
        let err = parse_config(&text).unwrap_err();
        assert!(
            err.to_string().contains("condition number must be >= 1"),
            "{err}"
        );
    }

    #[test]
    fn rejects_unknown_key_naming_it() {
        let text = format!("{MINIMAL}\nwhatever = 3\n");
        let err = parse_config(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("whatever"), "{msg}");
        assert!(msg.contains("line"), "{msg}");
    }

    #[test]
    fn rejects_type_mismatch() {
        let text = MINIMAL.replace("iterations = 10", "iterations = \"many\"");
        assert!(parse_config(&text).is_err());
    }

    #[test]
    fn explicit_values_round_trip() {
        let text = r#"
mode = "vr"
iterations = 100
nodes = 2
seeds = [1, 2, 3]
mc_budget = 512
output_dir = "out/x"
target_r_sq = 1e-8

[init]
x0 = "gaussian"
x0_scale = 2.0
h0 = "x0"

[problem]
kind = "synthetic"
rows = 40
cols = 8
cond = 10.0
reg = 0.01
seed = 5

[problem.h]
kind = "l1"
weight = 0.05

[map]
kind = "prox_sgd"
gamma = 0.001
minibatch = 4

[compressor]
kind = "rand_k"
k = 3

[stepsizes]
alpha = 0.5
eta = "auto"
"#;
        let cfg = parse_config(text).unwrap();
        let round = parse_config(&serialize_config(&cfg).unwrap()).unwrap();
        assert_eq!(cfg, round);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // serialize(parse(text)) parses back to an equal config.
            #[test]
            fn round_trip(
                iterations in 1u64..1000,
                nodes in 1usize..8,
                seed_count in 1usize..5,
                cond in 1.0f64..50.0,
                alpha_auto in proptest::bool::ANY,
                gamma in 1e-4f64..0.4,
            ) {
                let seeds: Vec<String> = (0..seed_count).map(|s| s.to_string()).collect();
                let alpha = if alpha_auto { "\"auto\"".to_string() } else { "0.25".to_string() };
                let text = format!(
                    "mode = \"vr\"\niterations = {iterations}\nnodes = {nodes}\n\
                     seeds = [{}]\noutput_dir = \"out\"\n\n\
                     [problem]\nkind = \"synthetic\"\nrows = 64\ncols = 4\ncond = {cond}\nreg = 0.1\n\n\
                     [map]\nkind = \"gd\"\ngamma = {gamma}\n\n\
                     [compressor]\nkind = \"natural\"\n\n\
                     [stepsizes]\nalpha = {alpha}\n",
                    seeds.join(", ")
                );
                let cfg = parse_config(&text).unwrap();
                let round = parse_config(&serialize_config(&cfg).unwrap()).unwrap();
                prop_assert_eq!(cfg, round);
            }
        }
    }
}
