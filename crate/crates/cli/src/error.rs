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

use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Failures that end a command early.
#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid flag value.
    #[error("usage: {0}")]
    Usage(String),
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        /// The file involved.
        path: PathBuf,
        /// Underlying error.
        #[source]
        source: io::Error,
    },
    /// Writing to the output stream failed.
    #[error(transparent)]
    Stream(#[from] io::Error),
    /// Malformed state-pair JSON.
    #[error("parse error: {0}")]
    Parse(String),
    /// The two input states coincide up to a global phase.
    #[error("states identical up to phase (|<psi|phi>| = {overlap})")]
    Degenerate {
        /// Modulus of the overlap.
        overlap: f64,
    },
    /// Error from the numerical core.
    #[error(transparent)]
    Core(#[from] pbr_core::Error),
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate { .. } | CliError::Core(pbr_core::Error::DegeneratePair { .. }) => 3,
            _ => 1,
        }
    }
}
