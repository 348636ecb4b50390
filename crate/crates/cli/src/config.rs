//! Run configuration: defaults, then the TOML file, then command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

use heiscat::CartanData;
use serde::Deserialize;

use crate::error::CliError;

/// Hard ceilings that no configuration may raise the caps above.
pub const CEILING_RANK: usize = 4;
pub const CEILING_GAMMA: u32 = 12;
pub const CEILING_TRUNCATION: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    pub max_rank: usize,
    pub max_gamma: u32,
    pub max_truncation: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_rank: 3, max_gamma: 6, max_truncation: 12 }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanSection {
    /// Shorthand for type A with this many nodes.
    pub type_a: Option<usize>,
    pub matrix: Option<Vec<Vec<i32>>>,
    pub orientation: Option<Vec<Vec<i32>>>,
}

/// Contents of a `--config` file; every key is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub gamma: Option<u32>,
    pub nmax: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub truncation: Option<u32>,
    pub timing: Option<bool>,
    pub cartan: Option<CartanSection>,
    pub caps: Option<Caps>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }
}

/// Values supplied on the command line; `None` defers to the file or the default.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub gamma: Option<u32>,
    pub nmax: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub truncation: Option<u32>,
    pub no_timing: bool,
    pub cartan: Option<String>,
}

/// Validated configuration shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub gamma: u32,
    pub nmax: usize,
    pub seed: u64,
    pub format: Format,
    pub truncation: u32,
    pub timing: bool,
    pub cartan: CartanData,
    pub cartan_label: String,
    pub caps: Caps,
}

fn parse_type_a(s: &str) -> Result<usize, CliError> {
    let r = s
        .strip_prefix('A')
        .or_else(|| s.strip_prefix('a'))
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&r| r >= 1)
        .ok_or_else(|| CliError::Config(format!("Cartan type must look like A2, got '{s}'")))?;
    if r > 8 {
        return Err(CliError::Config(format!("type A{r} exceeds 8 nodes")));
    }
    Ok(r)
}

impl RunConfig {
    /// Merges defaults, file and flags, then checks every value against the caps.
    pub fn resolve(file: ConfigFile, flags: Overrides) -> Result<Self, CliError> {
        let caps = file.caps.unwrap_or_default();
        if caps.max_rank > CEILING_RANK || caps.max_gamma > CEILING_GAMMA || caps.max_truncation > CEILING_TRUNCATION {
            return Err(CliError::Config(format!(
                "caps may not exceed max_rank={CEILING_RANK}, max_gamma={CEILING_GAMMA}, max_truncation={CEILING_TRUNCATION}"
            )));
        }
        let gamma = flags.gamma.or(file.gamma).unwrap_or(1);
        if gamma == 0 || gamma > caps.max_gamma {
            return Err(CliError::Config(format!("gamma must be in 1..={}, got {gamma}", caps.max_gamma)));
        }
        let nmax = flags.nmax.or(file.nmax).unwrap_or(2);
        if nmax > caps.max_rank {
            return Err(CliError::Config(format!("nmax must be at most {}, got {nmax}", caps.max_rank)));
        }
        let truncation = flags.truncation.or(file.truncation).unwrap_or(8);
        if truncation == 0 || truncation > caps.max_truncation {
            return Err(CliError::Config(format!(
                "truncation must be in 1..={}, got {truncation}",
                caps.max_truncation
            )));
        }
        let (cartan, cartan_label) = match (flags.cartan, file.cartan) {
            (Some(s), _) => {
                let r = parse_type_a(&s)?;
                (CartanData::type_a(r), format!("A{r}"))
            }
            (None, Some(sec)) => match (sec.type_a, sec.matrix, sec.orientation) {
                (Some(r), None, None) => {
                    parse_type_a(&format!("A{r}"))?;
                    (CartanData::type_a(r), format!("A{r}"))
                }
                (None, Some(a), eps) => {
                    if a.len() > 8 {
                        return Err(CliError::Config("Cartan matrix exceeds 8 nodes".into()));
                    }
                    let label = format!("{a:?}");
                    let c = match eps {
                        Some(eps) => CartanData::new(a, eps)?,
                        None => CartanData::from_matrix(a)?,
                    };
                    (c, label)
                }
                _ => {
                    return Err(CliError::Config(
                        "[cartan] takes either type_a or matrix (with an optional orientation)".into(),
                    ))
                }
            },
            (None, None) => (CartanData::type_a(2), "A2".to_string()),
        };
        Ok(RunConfig {
            gamma,
            nmax,
            seed: flags.seed.or(file.seed).unwrap_or(0),
            format: flags.format.or(file.format).unwrap_or_default(),
            truncation,
            timing: !flags.no_timing && file.timing.unwrap_or(true),
            cartan,
            cartan_label,
            caps,
        })
    }

    /// The configuration echoed into every report.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("gamma".into(), self.gamma.to_string());
        m.insert("nmax".into(), self.nmax.to_string());
        m.insert("seed".into(), self.seed.to_string());
        m.insert("truncation".into(), self.truncation.to_string());
        m.insert("cartan".into(), self.cartan_label.clone());
        m
    }
}
