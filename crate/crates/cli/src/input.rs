// Copyright 2026 The pbr-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! JSON state-pair input.
//!
//! ```json
//! { "dim": 2, "psi": [[0.8, 0.0], [0.6, 0.0]], "phi": [[0.8, 0.0], [-0.6, 0.0]] }
//! ```
//!
//! Each amplitude is a `[re, im]` pair and both arrays hold exactly `dim`
//! entries.

use std::path::Path;

use pbr_core::{Complex, StateVector};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A state pair whose norms may deviate from one by at most this much.
pub const NORM_ACCEPT: f64 = 1e-8;
/// Deviations above this are renormalized with a warning.
pub const NORM_SILENT: f64 = 1e-10;

/// On-disk form of a state pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    /// Ambient dimension.
    pub dim: usize,
    /// First state.
    pub psi: Vec<[f64; 2]>,
    /// Second state.
    pub phi: Vec<[f64; 2]>,
}

/// A validated pair plus any normalization warnings.
#[derive(Debug, Clone)]
pub struct LoadedPair {
    /// First state, unit norm.
    pub psi: StateVector,
    /// Second state, unit norm.
    pub phi: StateVector,
    /// Human-readable notes about renormalization.
    pub warnings: Vec<String>,
}

impl PairFile {
    /// Builds a file record from two vectors.
    pub fn from_states(psi: &StateVector, phi: &StateVector) -> Self {
        let enc = |s: &StateVector| s.amplitudes().iter().map(|a| [a.re, a.im]).collect();
        PairFile {
            dim: psi.dim(),
            psi: enc(psi),
            phi: enc(phi),
        }
    }

    /// Checks shapes and norms.
    pub fn validate(&self) -> Result<LoadedPair, CliError> {
        if self.dim < 2 {
            return Err(CliError::Parse(format!("dim must be at least 2, got {}", self.dim)));
        }
        let mut warnings = Vec::new();
        let mut decode = |name: &str, raw: &[[f64; 2]]| -> Result<StateVector, CliError> {
            if raw.len() != self.dim {
                return Err(CliError::Parse(format!(
                    "{name} has {} amplitudes, expected dim = {}",
                    raw.len(),
                    self.dim
                )));
            }
            let v = StateVector::new(raw.iter().map(|&[re, im]| Complex::new(re, im)).collect())
                .map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
            let dev = (v.norm() - 1.0).abs();
            if dev > NORM_ACCEPT {
                return Err(CliError::Parse(format!("{name} is not normalized (norm {})", v.norm())));
            }
            if dev > NORM_SILENT {
                warnings.push(format!("warning: {name} renormalized (norm {})", v.norm()));
                return Ok(v.normalized()?);
            }
            Ok(v)
        };
        let psi = decode("psi", &self.psi)?;
        let phi = decode("phi", &self.phi)?;
        Ok(LoadedPair { psi, phi, warnings })
    }
}

/// Parses a pair from JSON text.
pub fn parse_pair(text: &str) -> Result<LoadedPair, CliError> {
    let file: PairFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    file.validate()
}

/// Reads and parses a pair file.
pub fn load_pair(path: &Path) -> Result<LoadedPair, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_pair(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let p = parse_pair(r#"{ "dim": 2, "psi": [[0.8, 0.0], [0.6, 0.0]], "phi": [[0.8, 0.0], [-0.6, 0.0]] }"#)
            .unwrap();
        assert_eq!(p.psi.dim(), 2);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn rejects_bad_shapes() {
        for text in [
            r#"{ "dim": 3, "psi": [[1, 0], [0, 0]], "phi": [[0, 0], [1, 0], [0, 0]] }"#,
            r#"{ "dim": 2, "psi": [[1, 0, 0], [0, 0]], "phi": [[0, 0], [1, 0]] }"#,
            r#"{ "dim": 2, "psi": [[1, 0], [0, 0]] }"#,
            r#"{ "dim": 2, "psi": [[1, 0], [0, 0]], "phi": [[0, 0], [1, 0]], "extra": 1 }"#,
            r#"{ "dim": 1, "psi": [[1, 0]], "phi": [[1, 0]] }"#,
            r#"not json"#,
        ] {
            assert!(matches!(parse_pair(text), Err(CliError::Parse(_))), "{text}");
        }
    }

    #[test]
    fn normalization_window() {
        let ok = parse_pair(r#"{ "dim": 2, "psi": [[1.000000005, 0], [0, 0]], "phi": [[0, 0], [1, 0]] }"#).unwrap();
        assert_eq!(ok.warnings.len(), 1);
        assert!((ok.psi.norm() - 1.0).abs() < 1e-15);
        assert!(matches!(
            parse_pair(r#"{ "dim": 2, "psi": [[1.001, 0], [0, 0]], "phi": [[0, 0], [1, 0]] }"#),
            Err(CliError::Parse(_))
        ));
    }
}
