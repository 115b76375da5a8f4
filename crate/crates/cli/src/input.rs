//! JSON input files for the `custom` subcommand.
//!
//! A matrix is `{"dim": d, "entries": [[re, im], ...]}` with `d²` entries in
//! row-major order. A state file holds one matrix; an observables file is
//! `{"observables": [matrix, ...]}`; a channels file is
//! `{"channels": [{"name": "...", "kraus": [matrix, ...]}, ...]}`.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use skewinfo::{Channel, Matrix, Obs, State, C64};

use crate::error::{CliError, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct MatrixInput(Matrix);

impl TryFrom<RawMatrix> for MatrixInput {
    type Error = String;

    fn try_from(raw: RawMatrix) -> Result<Self, String> {
        if raw.dim == 0 {
            return Err("dim must be positive".into());
        }
        if raw.entries.len() != raw.dim * raw.dim {
            return Err(format!("entries: expected {} [re, im] pairs for dim {}, found {}", raw.dim * raw.dim, raw.dim, raw.entries.len()));
        }
        if raw.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err("entries must be finite".into());
        }
        let data = raw.entries.into_iter().map(|[re, im]| C64::new(re, im)).collect();
        Matrix::new(raw.dim, data).map(MatrixInput).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObservablesFile {
    observables: Vec<MatrixInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChannel {
    #[serde(default)]
    name: Option<String>,
    kraus: Vec<MatrixInput>,
}

#[derive(Debug, Deserialize)]
#[serde(try_from = "RawChannel")]
struct ChannelInput {
    name: Option<String>,
    kraus: Vec<Matrix>,
}

impl TryFrom<RawChannel> for ChannelInput {
    type Error = String;

    fn try_from(raw: RawChannel) -> Result<Self, String> {
        let kraus: Vec<Matrix> = raw.kraus.into_iter().map(|m| m.0).collect();
        let Some(first) = kraus.first() else {
            return Err("kraus: list is empty".into());
        };
        if let Some((i, k)) = kraus.iter().enumerate().find(|(_, k)| k.dim() != first.dim()) {
            return Err(format!("kraus[{i}]: dim {} differs from dim {} of kraus[0]", k.dim(), first.dim()));
        }
        Ok(Self { name: raw.name, kraus })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChannelsFile {
    channels: Vec<ChannelInput>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn parse<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        CliError::Parse { file: path.display().to_string(), line: Some(inner.line()), field, message: inner.to_string() }
    })
}

fn mismatch(path: &Path, field: String, expected: usize, found: usize) -> CliError {
    CliError::Parse {
        file: path.display().to_string(),
        line: None,
        field,
        message: format!("dim {found} does not match the state dimension {expected}"),
    }
}

pub fn load_state(path: &Path) -> Result<State> {
    let m: MatrixInput = parse(path, &read(path)?)?;
    Ok(State::new(m.0)?)
}

pub fn load_observables(path: &Path, dim: usize) -> Result<Vec<Obs>> {
    let file: ObservablesFile = parse(path, &read(path)?)?;
    if file.observables.len() < 2 {
        return Err(CliError::Config(format!("{}: at least two observables are needed", path.display())));
    }
    file.observables
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            if m.0.dim() != dim {
                return Err(mismatch(path, format!("observables[{i}].dim"), dim, m.0.dim()));
            }
            Ok(Obs::new(m.0)?)
        })
        .collect()
}

pub fn load_channels(path: &Path, dim: usize) -> Result<Vec<Channel>> {
    let file: ChannelsFile = parse(path, &read(path)?)?;
    if file.channels.len() < 2 {
        return Err(CliError::Config(format!("{}: at least two channels are needed", path.display())));
    }
    file.channels
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.kraus[0].dim() != dim {
                return Err(mismatch(path, format!("channels[{i}].kraus[0].dim"), dim, c.kraus[0].dim()));
            }
            Ok(Channel::new(c.name.unwrap_or_else(|| format!("channel{i}")), c.kraus)?)
        })
        .collect()
}
